#include "shiftlab/morphism.hpp"

#include <algorithm>

#include "shiftlab/arre.hpp"

namespace shiftlab {

WindowedRule arre_rule() {
  WindowedRule r;
  r.memory = 0;
  r.anticipation = 1;
  r.name = "arre";
  r.phi = [](const Word& w) { return w[0] + 2 * w[1]; };
  return r;
}

WindowedRule table_rule(int memory, int anticipation, std::map<Word, Symbol> table) {
  if (memory < 0 || anticipation < 0)
    throw std::invalid_argument("memory and anticipation must be nonnegative");
  WindowedRule r;
  r.memory = memory;
  r.anticipation = anticipation;
  r.name = "table";
  r.phi = [table = std::move(table)](const Word& w) {
    auto it = table.find(w);
    if (it == table.end()) throw EvalError("window word not present in rule table");
    return it->second;
  };
  return r;
}

WindowedRule widen_rule(const WindowedRule& rule, int wider_memory, int wider_anticipation) {
  if (wider_memory < rule.memory || wider_anticipation < rule.anticipation)
    throw std::invalid_argument("widen_rule cannot shrink the window");
  if (wider_memory == rule.memory && wider_anticipation == rule.anticipation) return rule;
  WindowedRule r;
  r.memory = wider_memory;
  r.anticipation = wider_anticipation;
  r.name = rule.name + "(widened)";
  const auto offset = static_cast<std::size_t>(wider_memory - rule.memory);
  const auto inner_len = static_cast<std::size_t>(rule.window_length());
  r.phi = [inner = rule.phi, offset, inner_len](const Word& w) {
    return inner(Word(w.begin() + static_cast<std::ptrdiff_t>(offset),
                      w.begin() + static_cast<std::ptrdiff_t>(offset + inner_len)));
  };
  return r;
}

std::string Morphism::name() const {
  if (const auto* w = std::get_if<WindowedRule>(&rule)) return w->name;
  if (std::holds_alternative<BarrierRule>(rule)) return "barrier";
  switch (std::get<DataRule>(rule)) {
    case DataRule::SumWindow:
      return "sum-window";
    case DataRule::TwoPoint:
      return "two-point";
    case DataRule::ZeroLocator:
      return "zero-locator";
  }
  return "?";
}

Morphism sum_window_morphism() {
  return {DataRule::SumWindow, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
          AlphabetSpec::naturals()};
}

Morphism two_point_morphism() {
  return {DataRule::TwoPoint, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
          AlphabetSpec::naturals()};
}

Morphism zero_locator_morphism() {
  // Output symbols range over Z (naturals with sign).
  return {DataRule::ZeroLocator, ShiftSpaceSpec::injective_with_zero(),
          AlphabetSpec::naturals()};
}

Morphism arre_morphism() {
  return {arre_rule(), ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
          AlphabetSpec::naturals()};
}

Morphism windowed_morphism(WindowedRule rule, ShiftSpaceSpec input_space,
                           AlphabetSpec output_alphabet) {
  return {std::move(rule), std::move(input_space), std::move(output_alphabet)};
}

Morphism barrier_morphism(BarrierRule rule, ShiftSpaceSpec input_space,
                          AlphabetSpec output_alphabet) {
  return {std::move(rule), std::move(input_space), std::move(output_alphabet)};
}

std::int64_t zero_position(const BiSeq& x) {
  std::vector<std::int64_t> zeros;
  for (std::int64_t i = x.center_lo(); i < x.center_end(); ++i)
    if (x.at(i) == 0) zeros.push_back(i);
  auto tail_zero = [&](const TailSpec& t, bool right) -> void {
    switch (t.kind()) {
      case TailSpec::Kind::Constant:
        if (t.constant_symbol() == 0) throw EvalError("zero repeats along a constant tail");
        return;
      case TailSpec::Kind::Periodic:
        if (std::find(t.pattern().begin(), t.pattern().end(), 0) != t.pattern().end())
          throw EvalError("zero repeats along a periodic tail");
        return;
      case TailSpec::Kind::Arithmetic:
        // A strictly monotone progression hits 0 at most at its anchor.
        if (t.start() == 0) zeros.push_back(right ? x.center_end() : x.center_lo() - 1);
        else if (t.step() < 0 && t.start() > 0 && t.start() % (-t.step()) == 0)
          zeros.push_back(right ? x.center_end() + t.start() / (-t.step())
                                : x.center_lo() - 1 - t.start() / (-t.step()));
        return;
    }
  };
  tail_zero(x.left_tail(), false);
  tail_zero(x.right_tail(), true);
  if (zeros.empty()) throw EvalError("input sequence has no zero");
  if (zeros.size() > 1) throw EvalError("zero is not unique in the input sequence");
  return zeros.front();
}

namespace {

Symbol eval_at(const Morphism& psi, const BiSeq& x, std::int64_t i) {
  if (const auto* w = std::get_if<WindowedRule>(&psi.rule))
    return w->phi(x.restrict_to(i - w->memory, i + w->anticipation));

  if (const auto* b = std::get_if<BarrierRule>(&psi.rule)) {
    const BiSeq point = x.shifted(i);
    std::optional<std::size_t> hit;
    for (std::size_t c = 0; c < b->cylinders.size(); ++c) {
      if (!contains(b->cylinders[c], point)) continue;
      if (hit) throw AmbiguousCylinderError("point lies in two listed cylinders");
      hit = c;
    }
    if (hit) return b->values[*hit];
    if (b->fallback) return *b->fallback;
    throw NoCylinderError("point escapes the listed cylinders");
  }

  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow: {
      const Symbol v = x.at(i);
      Symbol sum = 0;
      for (Symbol j = -v; j <= v; ++j) sum += x.at(i + j);
      return sum;
    }
    case DataRule::TwoPoint: {
      const Symbol v = x.at(i);
      return x.at(i - v) + x.at(i + v);
    }
    case DataRule::ZeroLocator:
      return zero_position(x) - i;
  }
  throw std::logic_error("unreachable");
}

bool data_rule_is(const Morphism& psi, DataRule r) {
  const auto* d = std::get_if<DataRule>(&psi.rule);
  return d && *d == r;
}

}  // namespace

Word eval_window(const Morphism& psi, const BiSeq& x, std::int64_t a, std::int64_t b) {
  if (a > b) throw std::invalid_argument("eval_window: interval start exceeds end");
  if (member(psi.input_space, x) == Tri::False)
    throw EvalError("sequence is not a member of the morphism's input space");

  Word out;
  out.reserve(static_cast<std::size_t>(b - a + 1));
  if (data_rule_is(psi, DataRule::ZeroLocator)) {
    const std::int64_t z = zero_position(x);
    for (std::int64_t i = a; i <= b; ++i) out.push_back(z - i);
    return out;
  }
  for (std::int64_t i = a; i <= b; ++i) out.push_back(eval_at(psi, x, i));
  return out;
}

namespace {

// Output of a windowed rule once the window sits fully inside one tail:
// constant tails give a constant output, periodic tails a periodic one
// with the same period.
TailSpec windowed_tail_image(const WindowedRule& rule, const Morphism& psi, const BiSeq& x,
                             std::int64_t anchor, int direction) {
  const TailSpec& tail = direction > 0 ? x.right_tail() : x.left_tail();
  if (tail.kind() == TailSpec::Kind::Constant) {
    const Word w(static_cast<std::size_t>(rule.window_length()), tail.constant_symbol());
    return TailSpec::constant(rule.phi(w));
  }
  const auto p = static_cast<std::int64_t>(tail.pattern().size());
  Word out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t d = 0; d < p; ++d) out.push_back(eval_at(psi, x, anchor + direction * d));
  return TailSpec::periodic(std::move(out));
}

bool tail_carries_window(const TailSpec& t) {
  return t.kind() == TailSpec::Kind::Constant || t.kind() == TailSpec::Kind::Periodic;
}

}  // namespace

std::optional<BiSeq> eval_full(const Morphism& psi, const BiSeq& x) {
  if (member(psi.input_space, x) == Tri::False)
    throw EvalError("sequence is not a member of the morphism's input space");

  if (data_rule_is(psi, DataRule::ZeroLocator)) {
    const std::int64_t z = zero_position(x);
    // y_n = z - n: a progression falling to the right, rising to the left,
    // with its single zero at position z.
    return BiSeq(TailSpec::arithmetic(1, 1), z, {0}, TailSpec::arithmetic(-1, -1));
  }

  const std::int64_t lo = x.center_lo();
  const std::int64_t end = x.center_end();

  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    if (!tail_carries_window(x.left_tail()) || !tail_carries_window(x.right_tail()))
      return std::nullopt;
    const std::int64_t out_lo = lo - w->anticipation;
    const std::int64_t out_hi = end - 1 + w->memory;
    Word center;
    for (std::int64_t i = out_lo; i <= out_hi; ++i) center.push_back(eval_at(psi, x, i));
    TailSpec right = windowed_tail_image(*w, psi, x, out_hi + 1, +1);
    TailSpec left = windowed_tail_image(*w, psi, x, out_lo - 1, -1);
    return BiSeq(std::move(left), out_lo, std::move(center), std::move(right));
  }

  if (const auto* d = std::get_if<DataRule>(&psi.rule);
      d && (*d == DataRule::SumWindow || *d == DataRule::TwoPoint)) {
    if (x.left_tail().kind() != TailSpec::Kind::Constant ||
        x.right_tail().kind() != TailSpec::Kind::Constant)
      return std::nullopt;
    const Symbol cl = x.left_tail().constant_symbol();
    const Symbol cr = x.right_tail().constant_symbol();
    // Beyond these positions the data-dependent window cannot reach back
    // into the center.
    const std::int64_t right_from = end + cr;
    const std::int64_t left_until = lo - 1 - cl;
    const Symbol right_value = (*d == DataRule::TwoPoint) ? 2 * cr : (2 * cr + 1) * cr;
    const Symbol left_value = (*d == DataRule::TwoPoint) ? 2 * cl : (2 * cl + 1) * cl;
    // Stabilization check one extra window deep.
    for (std::int64_t t = 0; t <= 1; ++t) {
      if (eval_at(psi, x, right_from + t) != right_value ||
          eval_at(psi, x, left_until - t) != left_value)
        throw std::logic_error("tail image failed to stabilize at its closed form");
    }
    Word center;
    for (std::int64_t i = left_until + 1; i < right_from; ++i)
      center.push_back(eval_at(psi, x, i));
    return BiSeq(TailSpec::constant(left_value), left_until + 1, std::move(center),
                 TailSpec::constant(right_value));
  }

  return std::nullopt;
}

bool check_shift_commuting(const Morphism& psi, const BiSeq& x, std::int64_t k,
                           std::int64_t a, std::int64_t b) {
  return eval_window(psi, x.shifted(k), a, b) == eval_window(psi, x, a + k, b + k);
}

namespace {

// Words over `pool` of the given length, visited in lexicographic order.
void for_each_word(const Word& pool, std::size_t length, const std::function<void(const Word&)>& fn) {
  Word w(length, pool.empty() ? 0 : pool.front());
  std::vector<std::size_t> idx(length, 0);
  if (length == 0) {
    fn(w);
    return;
  }
  while (true) {
    for (std::size_t i = 0; i < length; ++i) w[i] = pool[idx[i]];
    fn(w);
    std::size_t pos = length;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace

BarrierRule barrier_from_coordinate(const Morphism& psi, std::int64_t symbol_bound,
                                    std::int64_t domain_bound) {
  BarrierRule out;
  const Word pool = psi.input_space.alphabet.enumeration_pool(symbol_bound);

  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    if (domain_bound < std::max(w->memory, w->anticipation))
      throw std::invalid_argument("domain bound is smaller than the rule window");
    for_each_word(pool, static_cast<std::size_t>(w->window_length()), [&](const Word& word) {
      FinMap h;
      for (std::size_t i = 0; i < word.size(); ++i)
        h.set(-w->memory + static_cast<std::int64_t>(i), word[i]);
      out.cylinders.push_back(std::move(h));
      out.values.push_back(w->phi(word));
    });
    return out;
  }

  if (const auto* b = std::get_if<BarrierRule>(&psi.rule)) {
    for (std::size_t i = 0; i < b->cylinders.size(); ++i) {
      const FinMap& h = b->cylinders[i];
      if (!h.empty() && (h.min_position() < -domain_bound || h.max_position() > domain_bound))
        continue;
      bool symbols_ok = true;
      for (const auto& [p, s] : h.entries()) symbols_ok = symbols_ok && s <= symbol_bound;
      if (!symbols_ok) continue;
      out.cylinders.push_back(h);
      out.values.push_back(b->values[i]);
    }
    return out;
  }

  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow: {
      // One cylinder per odd word w_{-c} .. w_c with w_0 = c; its value is
      // the window sum.
      for (Symbol c = 0; c <= std::min(symbol_bound, domain_bound); ++c) {
        const auto flank = static_cast<std::size_t>(2 * c);
        double count = 1;
        for (std::size_t i = 0; i < flank; ++i) count *= static_cast<double>(pool.size());
        if (count > 2e6) throw std::invalid_argument("sum-window enumeration too large");
        for_each_word(pool, flank, [&](const Word& sides) {
          FinMap h;
          Symbol sum = c;
          for (std::int64_t j = -c; j < 0; ++j) {
            const Symbol s = sides[static_cast<std::size_t>(j + c)];
            h.set(j, s);
            sum += s;
          }
          h.set(0, c);
          for (std::int64_t j = 1; j <= c; ++j) {
            const Symbol s = sides[static_cast<std::size_t>(j + c - 1)];
            h.set(j, s);
            sum += s;
          }
          out.cylinders.push_back(std::move(h));
          out.values.push_back(sum);
        });
      }
      return out;
    }
    case DataRule::TwoPoint: {
      out.cylinders.push_back(FinMap({{0, 0}}));
      out.values.push_back(0);
      for (Symbol m = 1; m <= std::min(domain_bound, symbol_bound); ++m)
        for (Symbol a = 0; a <= symbol_bound; ++a)
          for (Symbol b = 0; b <= symbol_bound; ++b) {
            out.cylinders.push_back(FinMap({{-m, a}, {0, m}, {m, b}}));
            out.values.push_back(a + b);
          }
      return out;
    }
    case DataRule::ZeroLocator: {
      for (std::int64_t n = -domain_bound; n <= domain_bound; ++n) {
        out.cylinders.push_back(FinMap({{n, 0}}));
        out.values.push_back(n);
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

FinMap minimal_cylinder_at(const Morphism& psi, const BiSeq& x) {
  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    FinMap h;
    for (std::int64_t i = -w->memory; i <= w->anticipation; ++i) h.set(i, x.at(i));
    return h;
  }
  if (const auto* b = std::get_if<BarrierRule>(&psi.rule)) {
    for (const FinMap& h : b->cylinders)
      if (contains(h, x)) return h;
    throw NoCylinderError("point escapes the listed cylinders");
  }
  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow: {
      FinMap h;
      const Symbol c = x.at(0);
      for (std::int64_t j = -c; j <= c; ++j) h.set(j, x.at(j));
      return h;
    }
    case DataRule::TwoPoint: {
      const Symbol m = x.at(0);
      if (m == 0) return FinMap({{0, 0}});
      return FinMap({{-m, x.at(-m)}, {0, m}, {m, x.at(m)}});
    }
    case DataRule::ZeroLocator:
      return FinMap({{zero_position(x), 0}});
  }
  throw std::logic_error("unreachable");
}

std::vector<std::size_t> coverage_gaps(const BarrierRule& rule, std::span<const BiSeq> probes) {
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    bool covered = false;
    for (const FinMap& h : rule.cylinders)
      if (contains(h, probes[i])) {
        covered = true;
        break;
      }
    if (!covered) gaps.push_back(i);
  }
  return gaps;
}

Tri cylinder_empty_in_space(const ShiftSpaceSpec& space, const FinMap& h) {
  for (const auto& [p, s] : h.entries())
    if (!space.alphabet.contains(s)) return Tri::True;

  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      return Tri::False;
    case ShiftSpaceSpec::Kind::InjectiveWithZero: {
      std::map<Symbol, int> seen;
      for (const auto& [p, s] : h.entries())
        if (++seen[s] > 1) return Tri::True;  // a repeat bars every completion
      return Tri::False;
    }
    case ShiftSpaceSpec::Kind::ForbiddenBlocks: {
      // Check each contiguous run of the partial map for a forbidden block.
      std::vector<Word> runs;
      Word current;
      std::optional<std::int64_t> prev;
      for (const auto& [p, s] : h.entries()) {
        if (prev && p != *prev + 1) {
          runs.push_back(current);
          current.clear();
        }
        current.push_back(s);
        prev = p;
      }
      if (!current.empty()) runs.push_back(current);
      for (const Word& run : runs)
        for (const Word& f : space.forbidden) {
          if (f.size() > run.size()) continue;
          for (std::size_t s = 0; s + f.size() <= run.size(); ++s)
            if (std::equal(f.begin(), f.end(), run.begin() + static_cast<std::ptrdiff_t>(s)))
              return Tri::True;
        }
      // Over N the gaps and surroundings can always be filled with symbols
      // larger than every forbidden entry.
      if (space.alphabet.kind == AlphabetSpec::Kind::Naturals) return Tri::False;
      return Tri::Unknown;
    }
    case ShiftSpaceSpec::Kind::ArreImage: {
      // Each contiguous run of y-values needs its own chain preimage; the
      // runs constrain disjoint stretches of x.
      Word run;
      std::optional<std::int64_t> prev;
      auto run_bad = [&](const Word& r) { return !r.empty() && arre::chain_solutions(r).empty(); };
      for (const auto& [p, s] : h.entries()) {
        if (prev && p != *prev + 1) {
          if (run_bad(run)) return Tri::True;
          run.clear();
        }
        run.push_back(s);
        prev = p;
      }
      if (run_bad(run)) return Tri::True;
      return Tri::False;
    }
  }
  return Tri::Unknown;
}

namespace {

// Partial evaluation against a prefix assignment: positions below the
// frontier carry assigned values, positions outside the support are zero,
// everything else is unknown.
struct PartialSupport {
  std::int64_t radius;
  std::int64_t frontier;  // first unassigned support position
  const Word* values;     // values for [-radius, frontier)

  std::optional<Symbol> at(std::int64_t pos) const {
    if (pos < -radius || pos > radius) return 0;
    if (pos < frontier) return (*values)[static_cast<std::size_t>(pos + radius)];
    return std::nullopt;
  }
};

std::optional<Symbol> partial_output(const Morphism& psi, const PartialSupport& x,
                                     std::int64_t j) {
  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    Word window;
    for (std::int64_t p = j - w->memory; p <= j + w->anticipation; ++p) {
      const auto v = x.at(p);
      if (!v) return std::nullopt;
      window.push_back(*v);
    }
    return w->phi(window);
  }
  if (std::holds_alternative<BarrierRule>(psi.rule)) return std::nullopt;
  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow: {
      const auto v = x.at(j);
      if (!v) return std::nullopt;
      Symbol sum = 0;
      for (Symbol o = -*v; o <= *v; ++o) {
        const auto s = x.at(j + o);
        if (!s) return std::nullopt;
        sum += *s;
      }
      return sum;
    }
    case DataRule::TwoPoint: {
      const auto v = x.at(j);
      if (!v) return std::nullopt;
      const auto a = x.at(j - *v);
      const auto b = x.at(j + *v);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case DataRule::ZeroLocator:
      return std::nullopt;  // global rule: not decidable from a prefix
  }
  return std::nullopt;
}

}  // namespace

PreimageSearchReport search_preimage_finite_support(const Morphism& psi, const BiSeq& target,
                                                    std::int64_t radius, Symbol symbol_bound) {
  PreimageSearchReport report;
  report.label = "bounded-evidence";
  const std::int64_t check_lo = -radius - symbol_bound - 2;
  const std::int64_t check_hi = radius + symbol_bound + 2;

  Word values;
  std::function<bool(std::int64_t)> dfs = [&](std::int64_t frontier) -> bool {
    ++report.nodes_explored;
    const PartialSupport partial{radius, frontier, &values};
    for (std::int64_t j = check_lo; j <= check_hi; ++j) {
      const auto out = partial_output(psi, partial, j);
      if (out && *out != target.at(j)) return false;
    }
    if (frontier > radius) {
      BiSeq candidate(TailSpec::constant(0), -radius, values, TailSpec::constant(0));
      report.found = candidate;
      return true;
    }
    for (Symbol s = 0; s <= symbol_bound; ++s) {
      values.push_back(s);
      if (dfs(frontier + 1)) return true;
      values.pop_back();
    }
    return false;
  };
  dfs(-radius);
  return report;
}

DisjointnessReport check_disjoint(const BarrierRule& rule, const ShiftSpaceSpec& space) {
  DisjointnessReport report;
  for (std::size_t i = 0; i < rule.cylinders.size(); ++i)
    for (std::size_t j = i + 1; j < rule.cylinders.size(); ++j) {
      ++report.checked_pairs;
      JoinResult joined = join(rule.cylinders[i], rule.cylinders[j]);
      if (std::holds_alternative<JoinConflict>(joined)) continue;
      if (cylinder_empty_in_space(space, std::get<FinMap>(joined)) == Tri::True) continue;
      report.overlaps.emplace_back(i, j);
    }
  report.disjoint = report.overlaps.empty();
  return report;
}

}  // namespace shiftlab
