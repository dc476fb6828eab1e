#pragma once

#include "shiftlab/morphism.hpp"

namespace shiftlab::arre {

/// All u in N^{len+1} with u_i + 2 u_{i+1} = y_i for every i; the block
/// preimages of the word y under the rule u + 2v.
std::vector<Word> chain_solutions(const Word& y);

/// Solutions w_{-N} ... w_{N+1} of the chain w_i + 2 w_{i+1} = y_i over
/// i = -N .. N, for a window y_{-N} ... y_N.
struct SolutionSet {
  std::int64_t n = 0;        // half-width N >= 1
  std::vector<Word> words;   // each of length 2N+2, positions -N .. N+1
};

/// y_window holds y_{-N} .. y_N (odd length >= 3). Empty result means no
/// central preimage block exists.
SolutionSet solve_chain(const Word& y_window);

/// First N >= 1 from which the solution set stays a singleton, verified at
/// N+1; nullopt when no N <= n_max qualifies.
std::optional<std::int64_t> compute_r(const BiSeq& y, std::int64_t n_max);

enum class InvertStatus { Ok, NotInImage, Inconclusive };

struct InvertResult {
  InvertStatus status = InvertStatus::Inconclusive;
  std::optional<BiSeq> preimage;
  std::string detail;
};

/// The unique x with x_n + 2 x_{n+1} = y_n for all n, when one exists.
/// Requires y over N with Constant or Periodic tails; the round trip is
/// verified before a preimage is returned.
InvertResult invert(const BiSeq& y, std::int64_t n_max);

/// Membership of y in the image Y of the full shift under u + 2v.
Tri membership_in_y(const BiSeq& y, std::int64_t n_max);

/// h^y with domain {-r(y), ..., r(y)} and h^y(i) = y_i; the barrier datum
/// through y. Throws when compute_r fails within n_max.
FinMap barrier_h_y(const BiSeq& y, std::int64_t n_max);

/// Evidence that the inverse map admits no finite cylinder list for output
/// symbol 0: one fresh witness point per probed position.
struct WitnessRow {
  std::int64_t position = 0;     // the probed domain candidate
  bool in_image = false;         // witness point inverts
  bool preimage_zero_at_0 = false;
};

struct WitnessReport {
  std::vector<WitnessRow> rows;
  std::vector<std::size_t> counts_per_bound;  // witnesses found at bound 1, 2, ...
  bool all_verified = false;
  bool image_family_ok = false;  // the spike family x^j maps and inverts as expected
};

WitnessReport inverse_degree_witness(std::int64_t bound);

}  // namespace shiftlab::arre
