#pragma once

#include "shiftlab/morphism.hpp"

namespace shiftlab {

/// The injective-with-zero member with 0 at zero_pos, odd values rising to
/// the right and even values rising to the left.
BiSeq zigzag(std::int64_t zero_pos);

/// A parameterized family k -> x^k, k >= 1, whose image sequence under the
/// morphism it is probed with converges.
class DistinguishedFamily {
 public:
  enum class Kind { NoImage, Constant, ZeroDrift };

  /// Ramp spikes 3k+1-j on [-k, k] over a 1-left / 0-right background; the
  /// images converge to the all-ones point, the family itself escapes.
  static DistinguishedFamily no_image();
  static DistinguishedFamily constant(BiSeq base);
  /// Members keep their single zero pinned at zero_pos. Drifting members
  /// change with k (values grow); otherwise every member is zigzag(zero_pos).
  static DistinguishedFamily zero_drift(std::int64_t zero_pos, bool drifting = true);

  Kind kind() const { return kind_; }
  BiSeq generate(std::int64_t k) const;  // k >= 1
  std::string name() const;
  const BiSeq& base() const;            // Constant only
  std::int64_t zero_pos() const;        // ZeroDrift only
  bool drifting() const;                // ZeroDrift only

 private:
  Kind kind_ = Kind::Constant;
  std::optional<BiSeq> base_;
  std::int64_t zero_pos_ = 0;
  bool drifting_ = true;
};

struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The stabilized window y|[-w, w] of the image sequence: detected when
/// three consecutive k agree, and confirmed against the closed form for the
/// built-in families. Throws NotStabilized past k_max (0 picks a default).
Word limit_image(const DistinguishedFamily& fam, const Morphism& psi, std::int64_t w,
                 std::int64_t k_max = 0);

/// Supplies, for a probe point, the attached cylinder containing it: the
/// closed-form minimal cylinder of the morphism, or a lookup in an explicit
/// barrier list (nullopt when the point escapes the list).
struct BarrierSource {
  std::string name;
  bool closed_form = false;
  std::function<std::optional<FinMap>(const BiSeq&)> through;
};

BarrierSource closed_form_source(const Morphism& psi);
BarrierSource source_from_barrier(BarrierRule rule);

struct TraceLevel {
  std::int64_t ell = 0;
  FinMap h;                             // joined translated cylinders up to this level
  std::vector<std::int64_t> s_sample;   // sampled members of S_ell
  bool s_closed_form = false;
  std::string s_description;
  Word target;                          // y|[-ell, ell]
};

struct LemmaTrace {
  std::vector<TraceLevel> levels;
  Word limit;  // y|[-L, L]
  std::string family_name;
  std::string morphism_name;
  std::string source_name;
  bool closed_form_pair = false;  // family/morphism pair with analytic h_infinity
};

struct TraceFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The constructive cylinder-selection procedure: per level ell, pick for
/// each |j| <= ell a candidate cylinder through sigma^j(x^k) hit by the tail
/// of the sample, join the translates into h_ell, and narrow S_ell. Retries
/// candidates in a deterministic order on join conflicts.
LemmaTrace build_trace(const DistinguishedFamily& fam, const Morphism& psi,
                       const BarrierSource& source, std::int64_t l_max,
                       std::int64_t k_lo = 1, std::int64_t k_hi = 0);

enum class HClass { C1, C2, C3, C4, C5 };
std::string to_string(HClass c);

struct HInfinityObservation {
  FinMap truncated;        // h at the deepest level
  std::int64_t window = 0; // observation depth
  HClass domain_class = HClass::C1;
  bool closed_form = false;  // analytic for the built-in pairs; otherwise observed-at-truncation
  std::string note;
};

/// Classifies the truncated domain by its growth across levels: bounded
/// extents (C1), filling interval growth (C2), two-sided growth with gaps
/// (C3), one-sided growth (C4 left / C5 right).
HInfinityObservation classify(const LemmaTrace& trace);

struct NiceReport {
  enum class Verdict { NiceWitness, NotNice, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<BiSeq> witness;
  std::string reason;
};

/// Does the family have a convergent subsequence? Decided by closed form
/// for the built-ins and corroborated on the sampled range.
NiceReport nice_check(const DistinguishedFamily& fam, std::int64_t w, std::int64_t k_max);

/// For closed-form C1/C2 observations, a preimage of the limit point:
/// the base sequence itself (C2) or a member of the final cylinder (C1).
/// Verified against the limit window before returning.
std::optional<BiSeq> exhibit_limit_preimage(const DistinguishedFamily& fam, const Morphism& psi,
                                            const LemmaTrace& trace,
                                            const HInfinityObservation& obs);

}  // namespace shiftlab
