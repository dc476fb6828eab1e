#include "shiftlab/biseq.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace shiftlab {

namespace {

// Smallest p dividing w.size() with w[i] == w[i mod p].
std::size_t primitive_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = (w[i] == w[i % p]);
    if (ok) return p;
  }
  return n;
}

Word rotate_right(Word w) {
  std::rotate(w.rbegin(), w.rbegin() + 1, w.rend());
  return w;
}

}  // namespace

TailSpec TailSpec::constant(Symbol s) {
  TailSpec t;
  t.kind_ = Kind::Constant;
  t.start_ = s;
  return t;
}

TailSpec TailSpec::periodic(Word pattern) {
  if (pattern.empty()) throw std::invalid_argument("periodic tail needs a nonempty pattern");
  TailSpec t;
  t.kind_ = Kind::Periodic;
  t.pattern_ = std::move(pattern);
  return t;
}

TailSpec TailSpec::arithmetic(Symbol start, std::int64_t step) {
  if (step == 0) throw std::invalid_argument("arithmetic tail needs a nonzero step");
  TailSpec t;
  t.kind_ = Kind::Arithmetic;
  t.start_ = start;
  t.step_ = step;
  return t;
}

Symbol TailSpec::at_distance(std::int64_t d) const {
  switch (kind_) {
    case Kind::Constant:
      return start_;
    case Kind::Periodic:
      return pattern_[static_cast<std::size_t>(d % static_cast<std::int64_t>(pattern_.size()))];
    case Kind::Arithmetic:
      return start_ + step_ * d;
  }
  throw std::logic_error("unreachable");
}

Symbol TailSpec::min_value() const {
  switch (kind_) {
    case Kind::Constant:
      return start_;
    case Kind::Periodic:
      return *std::min_element(pattern_.begin(), pattern_.end());
    case Kind::Arithmetic:
      if (step_ > 0) return start_;
      return std::numeric_limits<Symbol>::min();  // unbounded below
  }
  throw std::logic_error("unreachable");
}

std::optional<Symbol> TailSpec::max_value() const {
  switch (kind_) {
    case Kind::Constant:
      return start_;
    case Kind::Periodic:
      return *std::max_element(pattern_.begin(), pattern_.end());
    case Kind::Arithmetic:
      if (step_ < 0) return start_;
      return std::nullopt;  // unbounded above
  }
  throw std::logic_error("unreachable");
}

BiSeq::BiSeq(TailSpec left, std::int64_t center_lo, Word center, TailSpec right)
    : left_(std::move(left)),
      right_(std::move(right)),
      center_lo_(center_lo),
      center_(std::move(center)) {
  normalize();
}

void BiSeq::normalize() {
  auto reduce = [](TailSpec& t) {
    if (t.kind() != TailSpec::Kind::Periodic) return;
    Word p = t.pattern();
    const std::size_t prim = primitive_period(p);
    if (prim == 1) {
      t = TailSpec::constant(p[0]);
    } else if (prim < p.size()) {
      p.resize(prim);
      t = TailSpec::periodic(std::move(p));
    }
  };
  reduce(left_);
  reduce(right_);

  // Absorb the center's right margin into the right tail. Absorbing one
  // symbol re-anchors the tail one position earlier, so a periodic pattern
  // rotates and an arithmetic start slides back one step.
  while (!center_.empty()) {
    const Symbol s = center_.back();
    if (right_.kind() == TailSpec::Kind::Constant && s == right_.constant_symbol()) {
      center_.pop_back();
    } else if (right_.kind() == TailSpec::Kind::Periodic && s == right_.pattern().back()) {
      center_.pop_back();
      right_ = TailSpec::periodic(rotate_right(right_.pattern()));
    } else if (right_.kind() == TailSpec::Kind::Arithmetic &&
               s == right_.start() - right_.step()) {
      center_.pop_back();
      right_ = TailSpec::arithmetic(s, right_.step());
    } else {
      break;
    }
  }

  // Mirror for the left margin.
  while (!center_.empty()) {
    const Symbol s = center_.front();
    if (left_.kind() == TailSpec::Kind::Constant && s == left_.constant_symbol()) {
      center_.erase(center_.begin());
      ++center_lo_;
    } else if (left_.kind() == TailSpec::Kind::Periodic && s == left_.pattern().back()) {
      center_.erase(center_.begin());
      ++center_lo_;
      left_ = TailSpec::periodic(rotate_right(left_.pattern()));
    } else if (left_.kind() == TailSpec::Kind::Arithmetic &&
               s == left_.start() - left_.step()) {
      center_.erase(center_.begin());
      ++center_lo_;
      left_ = TailSpec::arithmetic(s, left_.step());
    } else {
      break;
    }
  }

  // The fully constant sequence has no intrinsic boundary; pin it at 0.
  if (center_.empty() && left_.kind() == TailSpec::Kind::Constant &&
      left_ == right_) {
    center_lo_ = 0;
  }
}

Symbol BiSeq::at(std::int64_t n) const {
  if (n < center_lo_) return left_.at_distance(center_lo_ - 1 - n);
  const std::int64_t end = center_end();
  if (n >= end) return right_.at_distance(n - end);
  return center_[static_cast<std::size_t>(n - center_lo_)];
}

BiSeq BiSeq::shifted(std::int64_t k) const {
  return BiSeq(left_, center_lo_ - k, center_, right_);
}

Word BiSeq::restrict_to(std::int64_t a, std::int64_t b) const {
  if (a > b) throw std::invalid_argument("restrict_to: interval start exceeds end");
  Word out;
  out.reserve(static_cast<std::size_t>(b - a + 1));
  for (std::int64_t n = a; n <= b; ++n) out.push_back(at(n));
  return out;
}

BiSeq constant_seq(Symbol s) {
  return BiSeq(TailSpec::constant(s), 0, {}, TailSpec::constant(s));
}

namespace {

// A tail viewed from a fixed start position outward: value(t) for t >= 0.
// Either eventually-periodic data (period plus values) or affine in t.
struct TailView {
  bool affine = false;
  Symbol a0 = 0;         // affine: value(t) = a0 + slope * t
  std::int64_t slope = 0;
  Word cycle;            // periodic: value(t) = cycle[t % cycle.size()]
};

TailView view_from(const TailSpec& tail, std::int64_t distance_at_start) {
  TailView v;
  switch (tail.kind()) {
    case TailSpec::Kind::Constant:
      v.cycle = {tail.constant_symbol()};
      return v;
    case TailSpec::Kind::Periodic: {
      const Word& p = tail.pattern();
      const auto m = static_cast<std::int64_t>(p.size());
      v.cycle.reserve(p.size());
      for (std::int64_t i = 0; i < m; ++i)
        v.cycle.push_back(p[static_cast<std::size_t>((distance_at_start + i) % m)]);
      return v;
    }
    case TailSpec::Kind::Arithmetic:
      v.affine = true;
      v.a0 = tail.at_distance(distance_at_start);
      v.slope = tail.step();
      return v;
  }
  throw std::logic_error("unreachable");
}

Symbol view_value(const TailView& v, std::int64_t t) {
  if (v.affine) return v.a0 + v.slope * t;
  return v.cycle[static_cast<std::size_t>(t % static_cast<std::int64_t>(v.cycle.size()))];
}

// First t >= 0 where the two views disagree, or nullopt if they agree for
// every t. Exact: periodic pairs are compared over one lcm of periods,
// an affine view escapes any periodic value band, and two affine views
// agree at more than one point only when identical.
std::optional<std::int64_t> first_view_disagreement(const TailView& x, const TailView& y) {
  if (!x.affine && !y.affine) {
    const auto px = static_cast<std::int64_t>(x.cycle.size());
    const auto py = static_cast<std::int64_t>(y.cycle.size());
    const std::int64_t l = std::lcm(px, py);
    for (std::int64_t t = 0; t < l; ++t)
      if (view_value(x, t) != view_value(y, t)) return t;
    return std::nullopt;
  }
  if (x.affine && y.affine) {
    if (x.slope == y.slope) {
      if (x.a0 != y.a0) return 0;
      return std::nullopt;
    }
    // Nonconstant affine difference vanishes at most once.
    if (view_value(x, 0) != view_value(y, 0)) return 0;
    return 1;
  }
  const TailView& aff = x.affine ? x : y;
  const TailView& per = x.affine ? y : x;
  const Symbol lo = *std::min_element(per.cycle.begin(), per.cycle.end());
  const Symbol hi = *std::max_element(per.cycle.begin(), per.cycle.end());
  for (std::int64_t t = 0;; ++t) {
    const Symbol av = view_value(aff, t);
    if (view_value(per, t) != av) return t;
    // Matched, so av sits inside [lo, hi]; a strictly monotone view can do
    // that only (hi - lo) / |slope| + 1 times.
    if (av < lo || av > hi) throw std::logic_error("monotone view matched outside band");
    (void)lo;
    (void)hi;
  }
}

// First disagreement position n >= from, where both sequences are governed
// by their right tails at every n >= from.
std::optional<std::int64_t> first_right_disagreement(const BiSeq& x, const BiSeq& y,
                                                     std::int64_t from) {
  const TailView vx = view_from(x.right_tail(), from - x.center_end());
  const TailView vy = view_from(y.right_tail(), from - y.center_end());
  if (auto t = first_view_disagreement(vx, vy)) return from + *t;
  return std::nullopt;
}

// First disagreement position n <= from scanning leftward, where both are
// governed by their left tails at every n <= from.
std::optional<std::int64_t> first_left_disagreement(const BiSeq& x, const BiSeq& y,
                                                    std::int64_t from) {
  const TailView vx = view_from(x.left_tail(), (x.center_lo() - 1) - from);
  const TailView vy = view_from(y.left_tail(), (y.center_lo() - 1) - from);
  if (auto t = first_view_disagreement(vx, vy)) return from - *t;
  return std::nullopt;
}

}  // namespace

CantorDistance cantor_distance(const BiSeq& x, const BiSeq& y) {
  // Inside [-B, B] both centers are in play; scan by growing |n| so the
  // first hit is the minimum. Beyond it only tail pairs remain.
  const std::int64_t lo = std::min(x.center_lo(), y.center_lo());
  const std::int64_t hi = std::max(x.center_end(), y.center_end());
  const std::int64_t bound = std::max({std::abs(lo), std::abs(hi), std::int64_t{1}});

  for (std::int64_t k = 0; k <= bound; ++k) {
    if (x.at(k) != y.at(k)) return {false, k};
    if (k > 0 && x.at(-k) != y.at(-k)) return {false, k};
  }

  std::optional<std::int64_t> best;
  if (auto r = first_right_disagreement(x, y, bound + 1)) best = *r;
  if (auto l = first_left_disagreement(x, y, -bound - 1)) {
    const std::int64_t abs_l = -*l;
    if (!best || abs_l < *best) best = abs_l;
  }
  if (!best) return {};
  return {false, *best};
}

bool seq_equal(const BiSeq& x, const BiSeq& y) {
  if (x == y) return true;
  return cantor_distance(x, y).zero;
}

bool distance_leq(const CantorDistance& a, const CantorDistance& b) {
  if (a.zero) return true;
  if (b.zero) return false;
  return a.exponent >= b.exponent;
}

}  // namespace shiftlab
