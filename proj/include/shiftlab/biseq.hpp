#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

using Symbol = std::int64_t;
using Word = std::vector<Symbol>;

/// One half of a bi-infinite sequence. A tail is anchored at the first
/// position it governs and generates the symbol at distance d >= 0 from
/// that anchor, counting away from the center.
class TailSpec {
 public:
  enum class Kind { Constant, Periodic, Arithmetic };

  static TailSpec constant(Symbol s);
  static TailSpec periodic(Word pattern);  // pattern nonempty
  static TailSpec arithmetic(Symbol start, std::int64_t step);  // step != 0

  Kind kind() const { return kind_; }
  Symbol constant_symbol() const { return start_; }
  const Word& pattern() const { return pattern_; }
  Symbol start() const { return start_; }
  std::int64_t step() const { return step_; }

  Symbol at_distance(std::int64_t d) const;

  /// Smallest value the tail ever generates, and whether it is bounded above.
  Symbol min_value() const;
  std::optional<Symbol> max_value() const;

  bool operator==(const TailSpec&) const = default;

 private:
  Kind kind_ = Kind::Constant;
  Symbol start_ = 0;       // Constant symbol, or Arithmetic start
  std::int64_t step_ = 0;  // Arithmetic only
  Word pattern_;           // Periodic only
};

/// A finitely-described point of a full shift: an explicit center word at
/// positions [center_lo, center_lo + size) and two tails governing the rest.
///
/// Values are kept in canonical form: periodic patterns are primitive,
/// period-1 patterns collapse to Constant, and the center carries no margin
/// its adjacent tail already generates. Structural equality (operator==)
/// compares canonical forms; semantic equality over all of Z is seq_equal.
class BiSeq {
 public:
  BiSeq(TailSpec left, std::int64_t center_lo, Word center, TailSpec right);

  /// The symbol at coordinate n; total over Z.
  Symbol at(std::int64_t n) const;

  /// y with y_n = x_{n+k}; k = 1 is the shift operator.
  BiSeq shifted(std::int64_t k) const;

  /// The word x_a ... x_b. Rejects a > b.
  Word restrict_to(std::int64_t a, std::int64_t b) const;

  std::int64_t center_lo() const { return center_lo_; }
  /// First position governed by the right tail.
  std::int64_t center_end() const {
    return center_lo_ + static_cast<std::int64_t>(center_.size());
  }
  const Word& center() const { return center_; }
  const TailSpec& left_tail() const { return left_; }
  const TailSpec& right_tail() const { return right_; }

  bool operator==(const BiSeq&) const = default;

 private:
  void normalize();

  TailSpec left_ = TailSpec::constant(0);
  TailSpec right_ = TailSpec::constant(0);
  std::int64_t center_lo_ = 0;
  Word center_;
};

/// Convenience: the constant sequence s^Z.
BiSeq constant_seq(Symbol s);

/// Exact semantic equality over all coordinates.
bool seq_equal(const BiSeq& x, const BiSeq& y);

/// Exact Cantor distance: zero, or 2^(-exponent) with
/// exponent = min{|n| : x_n != y_n}.
struct CantorDistance {
  bool zero = true;
  std::int64_t exponent = 0;

  bool operator==(const CantorDistance&) const = default;
};

/// d(a) <= d(b) in the metric order (zero is smallest; larger exponent
/// means smaller distance).
bool distance_leq(const CantorDistance& a, const CantorDistance& b);

CantorDistance cantor_distance(const BiSeq& x, const BiSeq& y);

}  // namespace shiftlab
