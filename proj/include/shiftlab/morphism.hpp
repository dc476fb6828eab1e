#pragma once

#include <functional>
#include <variant>

#include "shiftlab/cylinder.hpp"
#include "shiftlab/shiftspace.hpp"

namespace shiftlab {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A barrier rule was probed with a point lying in none of its cylinders.
struct NoCylinderError : EvalError {
  using EvalError::EvalError;
};
/// A barrier rule's cylinders failed to be disjoint on a probed point.
struct AmbiguousCylinderError : EvalError {
  using EvalError::EvalError;
};

/// Fixed-window local rule: output_i = phi(x_{i-m} ... x_{i+n}).
struct WindowedRule {
  int memory = 0;
  int anticipation = 0;
  std::string name;  // stable identifier: "arre", "table", ...
  std::function<Symbol(const Word&)> phi;

  int window_length() const { return memory + anticipation + 1; }
};

/// phi(uv) = u + 2v, memory 0, anticipation 1.
WindowedRule arre_rule();
/// Explicit finite table over window words; every evaluated word must be listed.
WindowedRule table_rule(int memory, int anticipation, std::map<Word, Symbol> table);
/// Same code, wider window: phi_hat(a_{-M}..a_N) = phi(a_{-m}..a_n).
WindowedRule widen_rule(const WindowedRule& rule, int wider_memory, int wider_anticipation);

/// Local rule on an explicit list of cylinders: output_0 = value of the
/// cylinder containing the point. The optional fallback keeps evaluation
/// total during exploratory probing; without it escaping points error.
struct BarrierRule {
  std::vector<FinMap> cylinders;
  std::vector<Symbol> values;
  std::optional<Symbol> fallback;
};

/// Closed-form rules whose window depends on the data itself.
enum class DataRule {
  SumWindow,    // output_n = sum of x_{n+j} over |j| <= x_n
  TwoPoint,     // output_j = x_{j - x_j} + x_{j + x_j}
  ZeroLocator,  // output_n = (position of 0 in x) - n
};

struct Morphism {
  std::variant<WindowedRule, BarrierRule, DataRule> rule;
  ShiftSpaceSpec input_space;
  AlphabetSpec output_alphabet;

  std::string name() const;
};

Morphism sum_window_morphism();
Morphism two_point_morphism();
Morphism zero_locator_morphism();
Morphism arre_morphism();
Morphism windowed_morphism(WindowedRule rule, ShiftSpaceSpec input_space,
                           AlphabetSpec output_alphabet);
Morphism barrier_morphism(BarrierRule rule, ShiftSpaceSpec input_space,
                          AlphabetSpec output_alphabet);

/// The position of the unique 0 in a member of the injective-with-zero
/// space. Errors when no zero is representable or it is not unique.
std::int64_t zero_position(const BiSeq& x);

/// The image word output_a ... output_b.
Word eval_window(const Morphism& psi, const BiSeq& x, std::int64_t a, std::int64_t b);

/// Full image as a BiSeq when the tail structure carries through the rule;
/// nullopt means window-only evaluation is available.
std::optional<BiSeq> eval_full(const Morphism& psi, const BiSeq& x);

/// eval(shift(x, k)) on [a, b] equals eval(x) on [a+k, b+k].
bool check_shift_commuting(const Morphism& psi, const BiSeq& x, std::int64_t k,
                           std::int64_t a, std::int64_t b);

/// The canonical attached barrier truncated to the given bounds: all minimal
/// cylinders with domain inside [-domain_bound, domain_bound] and symbols
/// <= symbol_bound on which the 0-coordinate of psi is constant.
BarrierRule barrier_from_coordinate(const Morphism& psi, std::int64_t symbol_bound,
                                    std::int64_t domain_bound);

/// The minimal attached cylinder of the canonical barrier through x,
/// pinning exactly the coordinates the 0-output of psi reads.
FinMap minimal_cylinder_at(const Morphism& psi, const BiSeq& x);

/// Indices of probe points lying in no cylinder of the rule (coverage gaps
/// are reported explicitly, never silently defaulted).
std::vector<std::size_t> coverage_gaps(const BarrierRule& rule,
                                       std::span<const BiSeq> probes);

/// Pairwise disjointness of the rule's cylinders: either the finite maps
/// conflict outright, or the joined constraint is void inside the space.
struct DisjointnessReport {
  bool disjoint = true;
  std::size_t checked_pairs = 0;
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;
};
DisjointnessReport check_disjoint(const BarrierRule& rule, const ShiftSpaceSpec& space);

/// True / False when the emptiness of C_X(h) is decidable for this space.
Tri cylinder_empty_in_space(const ShiftSpaceSpec& space, const FinMap& h);

/// Exhaustive search for a preimage of `target` among sequences supported
/// on [-radius, radius] with symbols <= symbol_bound (zero outside). The
/// search prunes on every output coordinate it can already decide. An empty
/// result is desk-scale corroboration, never a proof; the report says so.
struct PreimageSearchReport {
  std::optional<BiSeq> found;
  std::uint64_t nodes_explored = 0;
  std::string label;  // "bounded-evidence"
};

PreimageSearchReport search_preimage_finite_support(const Morphism& psi, const BiSeq& target,
                                                    std::int64_t radius, Symbol symbol_bound);

}  // namespace shiftlab
