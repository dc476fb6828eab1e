#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "oracles.hpp"
#include "shiftlab/arre.hpp"

using namespace shiftlab;

namespace {

BiSeq random_image(testgen::Rng& rng, std::int64_t radius, Symbol max_value) {
  const BiSeq x = testgen::finite_support(rng, radius, max_value);
  return *eval_full(arre_morphism(), x);
}

}  // namespace

TEST_CASE("chain solving matches the sweep oracle") {
  testgen::Rng rng(97);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    const Word y = testgen::word(rng, len, 6);
    const auto fast = arre::chain_solutions(y);
    const auto slow = testoracle::chain_solutions_by_sweep(y, testoracle::window_max(y));
    REQUIRE(fast == slow);
  }
}

TEST_CASE("solve_chain on worked instances") {
  // y-window of the spike at position 1 with height 3: [0, 6, 3]
  const auto s = arre::solve_chain({0, 6, 3});
  CHECK(s.n == 1);
  CHECK(s.words == std::vector<Word>{{0, 0, 3, 0}});

  // all-zero window: only the zero block
  const auto z = arre::solve_chain({0, 0, 0});
  CHECK(z.words == std::vector<Word>{{0, 0, 0, 0}});

  // all-ones window: dead chain
  CHECK(arre::solve_chain({1, 1, 1}).words.empty());

  CHECK_THROWS_AS(arre::solve_chain({1, 2}), std::invalid_argument);
}

TEST_CASE("solution sets nest and are rigid") {
  testgen::Rng rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const BiSeq y = random_image(rng, 4, 20);
    const BiSeq x_src = *arre::invert(y, 16).preimage;
    for (std::int64_t n = 2; n <= 4; ++n) {
      const auto here = arre::solve_chain(y.restrict_to(-n, n));
      const auto prev = arre::solve_chain(y.restrict_to(-n + 1, n - 1));
      REQUIRE(!here.words.empty());
      // the true preimage block always solves the chain
      REQUIRE(std::find(here.words.begin(), here.words.end(),
                        x_src.restrict_to(-n, n + 1)) != here.words.end());
      // cardinals shrink as the window widens
      REQUIRE(here.words.size() <= prev.words.size());
      // truncation of any solution solves the narrower chain
      for (const Word& w : here.words) {
        const Word cut(w.begin() + 1, w.end() - 1);
        REQUIRE(std::find(prev.words.begin(), prev.words.end(), cut) != prev.words.end());
      }
      // coordinate rigidity: agreeing anywhere means agreeing everywhere
      for (std::size_t i = 0; i < here.words.size(); ++i)
        for (std::size_t j = i + 1; j < here.words.size(); ++j)
          for (std::size_t c = 0; c < here.words[i].size(); ++c)
            REQUIRE(here.words[i][c] != here.words[j][c]);
      // cardinality bound
      REQUIRE(here.words.size() <=
              static_cast<std::size_t>(y.at(0) / (std::int64_t{1} << n) + 1));
    }
  }
}

TEST_CASE("compute_r agrees with the sweep oracle") {
  testgen::Rng rng(103);
  CHECK(arre::compute_r(constant_seq(0), 16) == 1);
  for (int trial = 0; trial < 100; ++trial) {
    const BiSeq y = random_image(rng, 3, 16);
    const auto fast = arre::compute_r(y, 16);
    const auto slow = testoracle::r_by_sweep(y, 16);
    REQUIRE(fast == slow);
    REQUIRE(fast.has_value());
  }
  CHECK_THROWS_AS(arre::compute_r(BiSeq(TailSpec::constant(0), 0, {},
                                        TailSpec::arithmetic(0, 2)),
                                  8),
                  std::invalid_argument);
}

TEST_CASE("inversion round-trips random finite-support points") {
  testgen::Rng rng(107);
  for (int trial = 0; trial < 300; ++trial) {
    const BiSeq x = testgen::finite_support(rng, 5, 32);
    const auto y = eval_full(arre_morphism(), x);
    REQUIRE(y.has_value());
    const auto inverted = arre::invert(*y, 32);
    REQUIRE(inverted.status == arre::InvertStatus::Ok);
    REQUIRE(seq_equal(*inverted.preimage, x));
  }
}

TEST_CASE("inversion handles periodic and constant tails") {
  // periodic preimage: x = ...(1,2)(1,2)... gives periodic y
  const BiSeq x(TailSpec::periodic({2, 1}), 0, {5, 0, 7}, TailSpec::periodic({1, 2}));
  const auto y = eval_full(arre_morphism(), x);
  REQUIRE(y.has_value());
  const auto inverted = arre::invert(*y, 32);
  REQUIRE(inverted.status == arre::InvertStatus::Ok);
  CHECK(seq_equal(*inverted.preimage, x));

  // constant-3 background: y = 9^Z pulls back to 3^Z
  const auto nines = arre::invert(constant_seq(9), 32);
  REQUIRE(nines.status == arre::InvertStatus::Ok);
  CHECK(seq_equal(*nines.preimage, constant_seq(3)));
}

TEST_CASE("obstructions are recognized") {
  CHECK(arre::invert(constant_seq(1), 32).status == arre::InvertStatus::NotInImage);

  // No chain survives a lone odd spike on a zero background: parity dies.
  const BiSeq odd_spike(TailSpec::constant(0), 0, {1}, TailSpec::constant(0));
  CHECK(arre::invert(odd_spike, 32).status == arre::InvertStatus::NotInImage);

  // Negative symbols are outside N.
  const BiSeq negative(TailSpec::constant(0), 0, {-3}, TailSpec::constant(0));
  CHECK(arre::invert(negative, 32).status == arre::InvertStatus::NotInImage);

  // Arithmetic tails fall outside the invertible fragment.
  const BiSeq growing(TailSpec::constant(0), 0, {}, TailSpec::arithmetic(0, 2));
  CHECK(arre::invert(growing, 32).status == arre::InvertStatus::Inconclusive);
}

TEST_CASE("membership in the image space") {
  const auto y_space = ShiftSpaceSpec::arre_image();
  const BiSeq x(TailSpec::constant(0), -2, {4, 1, 0, 3}, TailSpec::constant(0));
  const auto y = eval_full(arre_morphism(), x);
  CHECK(member(y_space, *y) == Tri::True);
  CHECK(member(y_space, constant_seq(1)) == Tri::False);
  const BiSeq growing(TailSpec::constant(0), 0, {}, TailSpec::arithmetic(0, 2));
  CHECK(member(y_space, growing) == Tri::Unknown);
}

TEST_CASE("the image set is shift invariant on samples") {
  // Instance-level view of the closed-image results: Y behaves like a
  // shift space under membership probes.
  testgen::Rng rng(127);
  const auto y_space = ShiftSpaceSpec::arre_image();
  for (int trial = 0; trial < 60; ++trial) {
    const bool inside = trial % 2 == 0;
    const BiSeq probe = inside ? random_image(rng, 3, 12)
                               : testgen::finite_support(rng, 3, 12);
    const auto k = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    REQUIRE(member(y_space, probe, 16) == member(y_space, probe.shifted(k), 16));
  }
}

TEST_CASE("forward injectivity on random pairs") {
  testgen::Rng rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const BiSeq a = testgen::finite_support(rng, 4, 16);
    const BiSeq b = testgen::finite_support(rng, 4, 16);
    if (seq_equal(a, b)) continue;
    const auto ya = eval_full(arre_morphism(), a);
    const auto yb = eval_full(arre_morphism(), b);
    REQUIRE_FALSE(cantor_distance(*ya, *yb).zero);
  }
}

TEST_CASE("the barrier datum h^y") {
  const FinMap h0 = arre::barrier_h_y(constant_seq(0), 16);
  CHECK(h0 == FinMap({{-1, 0}, {0, 0}, {1, 0}}));

  testgen::Rng rng(113);
  for (int trial = 0; trial < 40; ++trial) {
    const BiSeq x = testgen::finite_support(rng, 3, 12);
    const auto y = eval_full(arre_morphism(), x);
    const auto r = arre::compute_r(*y, 16);
    REQUIRE(r.has_value());
    const FinMap hy = arre::barrier_h_y(*y, 16);
    REQUIRE(hy.size() == static_cast<std::size_t>(2 * *r + 1));
    for (std::int64_t i = -*r; i <= *r; ++i) REQUIRE(hy.get(i) == y->at(i));

    // Sampled members of C_Y(h^y): change the preimage outside [-r-1, r+2]
    // and confirm the stabilization index and inverse 0-coordinate persist.
    for (Symbol bump = 1; bump <= 3; ++bump) {
      Word patched;
      const std::int64_t lo = -*r - 2, hi = *r + 2 + bump;
      for (std::int64_t p = lo; p <= hi; ++p)
        patched.push_back(p <= *r + 1 ? x.at(p) : (p == hi ? bump : x.at(p)));
      const BiSeq xz(TailSpec::constant(0), lo, patched, TailSpec::constant(0));
      const auto z = eval_full(arre_morphism(), xz);
      if (!contains(hy, *z)) continue;  // the tail edit can leak into the window
      REQUIRE(arre::compute_r(*z, 16) == r);
      REQUIRE(arre::invert(*z, 16).preimage->at(0) == x.at(0));
    }
  }
}

TEST_CASE("no finite cylinder list serves the inverse at value 0") {
  const auto report = arre::inverse_degree_witness(10);
  CHECK(report.all_verified);
  CHECK(report.image_family_ok);
  REQUIRE(report.counts_per_bound.size() == 10);
  for (std::size_t i = 1; i < report.counts_per_bound.size(); ++i)
    CHECK(report.counts_per_bound[i] == report.counts_per_bound[i - 1] + 1);
  for (const auto& row : report.rows) {
    CHECK(row.in_image);
    CHECK(row.preimage_zero_at_0);
  }
}
