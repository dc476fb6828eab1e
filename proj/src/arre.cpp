#include "shiftlab/arre.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace shiftlab::arre {

std::vector<Word> chain_solutions(const Word& y) {
  std::vector<Word> out;
  if (y.empty()) return out;
  if (y[0] < 0) return out;
  // u_0 determines the whole chain: u_{i+1} = (y_i - u_i) / 2, and a branch
  // dies on a negative or odd difference.
  for (Symbol u0 = 0; u0 <= y[0]; ++u0) {
    Word u{u0};
    bool alive = true;
    for (std::size_t i = 0; i < y.size() && alive; ++i) {
      const Symbol diff = y[i] - u.back();
      if (diff < 0 || diff % 2 != 0) {
        alive = false;
        break;
      }
      u.push_back(diff / 2);
    }
    if (alive) out.push_back(std::move(u));
  }
  return out;
}

SolutionSet solve_chain(const Word& y_window) {
  if (y_window.size() < 3 || y_window.size() % 2 == 0)
    throw std::invalid_argument("solve_chain expects a window y_{-N} .. y_N with N >= 1");
  SolutionSet s;
  s.n = static_cast<std::int64_t>(y_window.size() - 1) / 2;
  s.words = chain_solutions(y_window);
  return s;
}

namespace {

bool invertible_tails(const BiSeq& y) {
  auto ok = [](const TailSpec& t) {
    return t.kind() == TailSpec::Kind::Constant || t.kind() == TailSpec::Kind::Periodic;
  };
  return ok(y.left_tail()) && ok(y.right_tail());
}

bool has_negative_symbol(const BiSeq& y) {
  auto tail_neg = [](const TailSpec& t) {
    switch (t.kind()) {
      case TailSpec::Kind::Constant:
        return t.constant_symbol() < 0;
      case TailSpec::Kind::Periodic:
        return *std::min_element(t.pattern().begin(), t.pattern().end()) < 0;
      case TailSpec::Kind::Arithmetic:
        return t.step() < 0 || t.start() < 0;
    }
    return false;
  };
  if (std::any_of(y.center().begin(), y.center().end(), [](Symbol s) { return s < 0; }))
    return true;
  return tail_neg(y.left_tail()) || tail_neg(y.right_tail());
}

}  // namespace

std::optional<std::int64_t> compute_r(const BiSeq& y, std::int64_t n_max) {
  if (!invertible_tails(y))
    throw std::invalid_argument("compute_r needs constant or periodic tails");
  if (has_negative_symbol(y)) return std::nullopt;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const SolutionSet s = solve_chain(y.restrict_to(-n, n));
    if (s.words.empty()) return std::nullopt;
    if (s.words.size() == 1) {
      // The cardinal is nonincreasing in N, so one extra confirmation
      // guards only against a vanishing solution set.
      const SolutionSet next = solve_chain(y.restrict_to(-n - 1, n + 1));
      if (next.words.size() != 1) return std::nullopt;
      return n;
    }
  }
  return std::nullopt;
}

namespace {

struct TailPropagation {
  bool ok = false;
  std::int64_t start = 0;         // position of the first explicit value
  Word values;                    // explicit run, outward from start
  std::int64_t cycle_anchor = 0;  // position where the repeating pattern begins
  Word cycle;                     // values outward from the anchor
  std::string failure;
};

// Forward chain propagation x_{n+1} = (y_n - x_n)/2 for n >= from, starting
// from the known value x_from; every read of y happens inside its right
// tail. Values stay within [0, max tail value] after one step, so the
// (phase, value) state space is finite and a feasible run must cycle.
TailPropagation propagate_right(const BiSeq& y, std::int64_t from, Symbol x_from) {
  TailPropagation result;
  result.start = from;
  const TailSpec& tail = y.right_tail();
  const std::int64_t period =
      tail.kind() == TailSpec::Kind::Periodic ? static_cast<std::int64_t>(tail.pattern().size())
                                              : 1;
  std::map<std::pair<std::int64_t, Symbol>, std::int64_t> seen;
  std::int64_t pos = from;
  Symbol v = x_from;
  while (true) {
    const std::int64_t phase = ((pos - y.center_end()) % period + period) % period;
    auto [it, inserted] = seen.try_emplace({phase, v}, pos);
    if (!inserted) {
      const std::int64_t anchor = it->second;
      const std::int64_t len = pos - anchor;
      result.cycle_anchor = anchor;
      result.cycle.assign(result.values.begin() + (anchor - from),
                          result.values.begin() + (pos - from));
      // Walk one further period explicitly before accepting the cycle.
      for (std::int64_t t = 0; t < len; ++t) {
        const Symbol here = result.cycle[static_cast<std::size_t>(t % len)];
        const Symbol next = result.cycle[static_cast<std::size_t>((t + 1) % len)];
        const Symbol diff = y.at(pos + t) - here;
        if (diff < 0 || diff % 2 != 0 || diff / 2 != next) {
          result.failure = "cycle re-verification failed";
          return result;
        }
      }
      result.ok = true;
      return result;
    }
    result.values.push_back(v);
    const Symbol diff = y.at(pos) - v;
    if (diff < 0 || diff % 2 != 0) {
      result.failure = "chain leaves N while propagating right";
      return result;
    }
    v = diff / 2;
    ++pos;
  }
}

// Reverse propagation x_n = y_n - 2 x_{n+1} for n <= from, starting from
// the known value at position from + 1; every read of y happens inside its
// left tail. Mirrors propagate_right with positions decreasing.
TailPropagation propagate_left(const BiSeq& y, std::int64_t from, Symbol x_after) {
  TailPropagation result;
  result.start = from + 1;
  const TailSpec& tail = y.left_tail();
  const std::int64_t period =
      tail.kind() == TailSpec::Kind::Periodic ? static_cast<std::int64_t>(tail.pattern().size())
                                              : 1;
  std::map<std::pair<std::int64_t, Symbol>, std::int64_t> seen;
  std::int64_t pos = from + 1;
  Symbol v = x_after;
  while (true) {
    const std::int64_t phase = (((y.center_lo() - 1) - pos) % period + period) % period;
    auto [it, inserted] = seen.try_emplace({phase, v}, pos);
    if (!inserted) {
      const std::int64_t anchor = it->second;  // first occurrence; anchor > pos
      const std::int64_t len = anchor - pos;
      result.cycle_anchor = anchor;
      result.cycle.clear();
      for (std::int64_t d = 0; d < len; ++d)
        result.cycle.push_back(
            result.values[static_cast<std::size_t>((result.start - anchor) + d)]);
      // One extra period of checks: x(anchor - t - 1) = y(anchor - t - 1) - 2 x(anchor - t).
      for (std::int64_t t = 0; t < len; ++t) {
        const Symbol here = result.cycle[static_cast<std::size_t>(t % len)];
        const Symbol below = y.at(anchor - t - 1) - 2 * here;
        if (below < 0 || below != result.cycle[static_cast<std::size_t>((t + 1) % len)]) {
          result.failure = "cycle re-verification failed";
          return result;
        }
      }
      result.ok = true;
      return result;
    }
    result.values.push_back(v);
    const Symbol prev = y.at(pos - 1) - 2 * v;
    if (prev < 0) {
      result.failure = "chain leaves N while propagating left";
      return result;
    }
    v = prev;
    --pos;
  }
}

}  // namespace

InvertResult invert(const BiSeq& y, std::int64_t n_max) {
  InvertResult r;
  if (has_negative_symbol(y)) {
    r.status = InvertStatus::NotInImage;
    r.detail = "negative symbol: the image lives over N";
    return r;
  }
  if (!invertible_tails(y)) {
    r.status = InvertStatus::Inconclusive;
    r.detail = "tail kind outside the invertible (eventually periodic) fragment";
    return r;
  }

  std::optional<std::int64_t> stab;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const SolutionSet s = solve_chain(y.restrict_to(-n, n));
    if (s.words.empty()) {
      r.status = InvertStatus::NotInImage;
      r.detail = "no central preimage block at half-width " + std::to_string(n);
      return r;
    }
    if (s.words.size() == 1) {
      stab = n;
      break;
    }
  }
  if (!stab) {
    r.status = InvertStatus::Inconclusive;
    r.detail = "solution set still ambiguous at the half-width bound";
    return r;
  }

  // Widen until the window covers y's center, so the remaining chain runs
  // entirely inside y's tails.
  const std::int64_t m =
      std::max({*stab, std::abs(y.center_lo()) + 1, std::abs(y.center_end()) + 1});
  const SolutionSet wide = solve_chain(y.restrict_to(-m, m));
  if (wide.words.size() != 1) {
    r.status = InvertStatus::NotInImage;
    r.detail = "solution set vanished while widening";
    return r;
  }
  const Word& central = wide.words.front();  // x_{-m} .. x_{m+1}

  TailPropagation right = propagate_right(y, m + 1, central.back());
  if (!right.ok) {
    r.status = InvertStatus::NotInImage;
    r.detail = right.failure;
    return r;
  }
  TailPropagation left = propagate_left(y, -m - 1, central.front());
  if (!left.ok) {
    r.status = InvertStatus::NotInImage;
    r.detail = left.failure;
    return r;
  }

  // Assemble: explicit values on [left.cycle_anchor + 1, right.cycle_anchor - 1],
  // repeating patterns outside.
  auto value_at = [&](std::int64_t pos) -> Symbol {
    if (pos >= -m && pos <= m + 1) return central[static_cast<std::size_t>(pos + m)];
    if (pos > m + 1 && pos < right.cycle_anchor)
      return right.values[static_cast<std::size_t>(pos - right.start)];
    if (pos < -m && pos > left.cycle_anchor)
      return left.values[static_cast<std::size_t>(left.start - pos)];
    throw std::logic_error("value_at outside assembled range");
  };

  const std::int64_t lo = left.cycle_anchor + 1;
  const std::int64_t hi = right.cycle_anchor - 1;
  Word center;
  for (std::int64_t p = lo; p <= hi; ++p) center.push_back(value_at(p));
  TailSpec left_tail = left.cycle.size() == 1 ? TailSpec::constant(left.cycle[0])
                                              : TailSpec::periodic(left.cycle);
  TailSpec right_tail = right.cycle.size() == 1 ? TailSpec::constant(right.cycle[0])
                                                : TailSpec::periodic(right.cycle);
  BiSeq x(std::move(left_tail), lo, std::move(center), std::move(right_tail));

  const std::optional<BiSeq> image = eval_full(arre_morphism(), x);
  if (!image || !seq_equal(*image, y))
    throw std::logic_error("inversion round trip failed verification");

  r.status = InvertStatus::Ok;
  r.preimage = std::move(x);
  r.detail = "stabilized at half-width " + std::to_string(*stab);
  return r;
}

Tri membership_in_y(const BiSeq& y, std::int64_t n_max) {
  if (has_negative_symbol(y)) return Tri::False;
  if (!invertible_tails(y)) return Tri::Unknown;
  switch (invert(y, n_max).status) {
    case InvertStatus::Ok:
      return Tri::True;
    case InvertStatus::NotInImage:
      return Tri::False;
    case InvertStatus::Inconclusive:
      return Tri::Unknown;
  }
  return Tri::Unknown;
}

FinMap barrier_h_y(const BiSeq& y, std::int64_t n_max) {
  const auto r = compute_r(y, n_max);
  if (!r) throw EvalError("stabilization index not found within the bound");
  FinMap h;
  for (std::int64_t i = -*r; i <= *r; ++i) h.set(i, y.at(i));
  return h;
}

WitnessReport inverse_degree_witness(std::int64_t bound) {
  WitnessReport report;
  report.image_family_ok = true;
  const Morphism psi = arre_morphism();
  // The probe family x^j (single spike j at position 1) maps to y^j with
  // y^j_0 = 2j, y^j_1 = j; the inverse sends every y^j to 0 at coordinate 0.
  for (Symbol j = 0; j <= bound; ++j) {
    const BiSeq xj(TailSpec::constant(0), 1, {j}, TailSpec::constant(0));
    const std::optional<BiSeq> yj = eval_full(psi, xj);
    const bool ok = yj && yj->at(0) == 2 * j && yj->at(1) == j && yj->at(2) == 0 &&
                    yj->at(-1) == 0;
    const auto inverted = invert(*yj, default_nmax());
    report.image_family_ok = report.image_family_ok && ok &&
                             inverted.status == InvertStatus::Ok &&
                             inverted.preimage->at(0) == 0;
  }

  std::size_t verified = 0;
  for (std::int64_t pos = 1; pos <= bound; ++pos) {
    // y with y_{pos-1} = 2, y_pos = 1, zero elsewhere: a member of the
    // image whose preimage has 0 at coordinate 0, escaping any cylinder
    // list that misses position pos.
    BiSeq y(TailSpec::constant(0), pos - 1, {2, 1}, TailSpec::constant(0));
    WitnessRow row;
    row.position = pos;
    const auto inverted = invert(y, default_nmax());
    row.in_image = inverted.status == InvertStatus::Ok;
    row.preimage_zero_at_0 = row.in_image && inverted.preimage->at(0) == 0;
    if (row.in_image && row.preimage_zero_at_0) ++verified;
    report.rows.push_back(row);
    report.counts_per_bound.push_back(verified);
  }
  report.all_verified = verified == static_cast<std::size_t>(bound);
  return report;
}

}  // namespace shiftlab::arre
