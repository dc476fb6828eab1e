#pragma once

#include "shiftlab/morphism.hpp"

namespace shiftlab {

struct DegreeGridPoint {
  std::int64_t symbol_bound = 0;
  std::int64_t domain_bound = 0;
  std::size_t count = 0;
};

enum class DegreeVerdict { FiniteWithWitness, Growing, Inconclusive };

std::string to_string(DegreeVerdict v);

struct DegreeReport {
  Symbol value = 0;
  std::vector<DegreeGridPoint> points;
  DegreeVerdict verdict = DegreeVerdict::Inconclusive;
  std::string witness;  // closed-form justification, when one applies
  std::string note;     // structural observations worth surfacing
};

/// Number of minimal attached cylinders carrying the given output value,
/// per grid point; counts are monotone in both bounds. The verdict reads
/// `growing` only with a closed-form witness and `finite-with-witness`
/// only with a completeness argument; everything else stays inconclusive.
DegreeReport degree_probe(const Morphism& psi, Symbol value,
                          std::span<const std::pair<std::int64_t, std::int64_t>> grid);

std::size_t attached_cylinder_count(const Morphism& psi, Symbol value,
                                    std::int64_t symbol_bound, std::int64_t domain_bound);

struct AttachedCheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::size_t> uncovered;   // samples in no cylinder; reported, not fatal
  std::vector<std::size_t> mismatched;  // cylinder value != 0-coordinate output
};

/// Does the 0-coordinate of psi agree with the cylinder values on every
/// covered sample?
AttachedCheckResult attached_check(const BarrierRule& barrier, const Morphism& psi,
                                   std::span<const BiSeq> samples);

/// Every cylinder of `finer` inside some cylinder of `coarser`; containment
/// C(h') <= C(h) holds exactly when dom(h) is inside dom(h') with matching
/// values (exact for full-shift cylinders).
bool refinement_check(const BarrierRule& finer, const BarrierRule& coarser);

}  // namespace shiftlab
