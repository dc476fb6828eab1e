#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "shiftlab/biseq.hpp"

using namespace shiftlab;

namespace {

BiSeq noimage_member(std::int64_t k) {
  Word center;
  for (std::int64_t j = -k; j <= k; ++j) center.push_back(3 * k + 1 - j);
  return BiSeq(TailSpec::constant(1), -k, std::move(center), TailSpec::constant(0));
}

}  // namespace

TEST_CASE("symbol_at reads center and tails") {
  const BiSeq x(TailSpec::constant(1), -1, {5, 0, 2}, TailSpec::constant(0));
  CHECK(x.at(0) == 0);
  CHECK(x.at(-1) == 5);
  CHECK(x.at(1) == 2);
  CHECK(x.at(2) == 0);
  CHECK(x.at(-100) == 1);

  // Right tail starting at position 0 with values 2, 4, 6, ...
  const BiSeq y(TailSpec::constant(0), -2, {5, 5}, TailSpec::arithmetic(2, 2));
  CHECK(y.at(3) == 8);
  CHECK(y.at(0) == 2);
}

TEST_CASE("shift moves coordinates") {
  const BiSeq x(TailSpec::constant(0), 0, {7}, TailSpec::constant(0));
  CHECK(x.shifted(0) == x);
  CHECK(x.shifted(1).at(-1) == 7);
  CHECK(x.shifted(1).at(0) == 0);
}

TEST_CASE("shift composes additively") {
  testgen::Rng rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    const BiSeq x = testgen::biseq(rng);
    const auto a = std::uniform_int_distribution<std::int64_t>(-7, 7)(rng);
    const auto b = std::uniform_int_distribution<std::int64_t>(-7, 7)(rng);
    const BiSeq lhs = x.shifted(a).shifted(b);
    const BiSeq rhs = x.shifted(a + b);
    for (std::int64_t n = -50; n <= 50; ++n) REQUIRE(lhs.at(n) == rhs.at(n));
    REQUIRE(seq_equal(lhs, rhs));
  }
}

TEST_CASE("shift round-trips through its inverse") {
  testgen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const BiSeq x = testgen::biseq(rng);
    const auto k = std::uniform_int_distribution<std::int64_t>(-9, 9)(rng);
    REQUIRE(seq_equal(x.shifted(k).shifted(-k), x));
  }
}

TEST_CASE("symbol_at commutes with shift") {
  testgen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const BiSeq x = testgen::biseq(rng);
    const auto k = std::uniform_int_distribution<std::int64_t>(-9, 9)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(-20, 20)(rng);
    REQUIRE(x.shifted(k).at(n) == x.at(n + k));
  }
}

TEST_CASE("restrict_to extracts words") {
  const BiSeq zeros = constant_seq(0);
  CHECK(zeros.restrict_to(-2, 2) == Word{0, 0, 0, 0, 0});

  // ramp member at k = 1 around the seam into its 0-tail
  CHECK(noimage_member(1).restrict_to(-1, 2) == Word{5, 4, 3, 0});

  CHECK_THROWS_AS(zeros.restrict_to(3, 1), std::invalid_argument);
}

TEST_CASE("restrict commutes with shift") {
  testgen::Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const BiSeq x = testgen::biseq(rng);
    const auto k = std::uniform_int_distribution<std::int64_t>(-6, 6)(rng);
    const auto a = std::uniform_int_distribution<std::int64_t>(-10, 5)(rng);
    const auto b = a + std::uniform_int_distribution<std::int64_t>(0, 8)(rng);
    REQUIRE(x.shifted(k).restrict_to(a, b) == x.restrict_to(a + k, b + k));
  }
}

TEST_CASE("seq_equal decides tail pairs exactly") {
  const BiSeq a(TailSpec::constant(0), 0, {1, 2}, TailSpec::constant(0));
  CHECK(seq_equal(a, a));

  // A period-1 pattern is the constant tail in disguise.
  const BiSeq b(TailSpec::periodic({0}), 0, {1, 2}, TailSpec::periodic({0}));
  CHECK(seq_equal(a, b));
  CHECK(a == b);  // canonical forms collapse

  const BiSeq c(TailSpec::constant(0), 0, {1, 2}, TailSpec::arithmetic(0, 1));
  CHECK_FALSE(seq_equal(a, c));

  // Same values, different center presentation.
  const BiSeq d(TailSpec::constant(0), -3, {0, 0, 0, 1, 2, 0, 0}, TailSpec::constant(0));
  CHECK(seq_equal(a, d));
  CHECK(a == d);

  // Periodic tails compared across different phases and periods.
  const BiSeq p1(TailSpec::constant(0), 0, {}, TailSpec::periodic({1, 2}));
  const BiSeq p2(TailSpec::constant(0), 0, {1}, TailSpec::periodic({2, 1}));
  CHECK(seq_equal(p1, p2));
  const BiSeq p3(TailSpec::constant(0), 0, {}, TailSpec::periodic({1, 2, 1, 2, 2, 1}));
  CHECK_FALSE(seq_equal(p1, p3));

  // Aligned vs misaligned arithmetic tails.
  const BiSeq a1(TailSpec::constant(0), 0, {}, TailSpec::arithmetic(5, 3));
  const BiSeq a2(TailSpec::constant(0), 0, {5}, TailSpec::arithmetic(8, 3));
  CHECK(seq_equal(a1, a2));
  const BiSeq a3(TailSpec::constant(0), 0, {}, TailSpec::arithmetic(5, 2));
  CHECK_FALSE(seq_equal(a1, a3));
}

TEST_CASE("seq_equal agrees with wide-window comparison on random pairs") {
  testgen::Rng rng(17);
  int equal_seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const BiSeq x = testgen::biseq(rng, 4);
    const BiSeq y = (trial % 3 == 0) ? x.shifted(0) : testgen::biseq(rng, 4);
    bool window_same = true;
    for (std::int64_t n = -80; n <= 80 && window_same; ++n) window_same = (x.at(n) == y.at(n));
    if (seq_equal(x, y)) {
      REQUIRE(window_same);
      ++equal_seen;
    }
    // The generator's tails disagree well inside the scan width, so
    // agreement across it implies equality.
    if (window_same) REQUIRE(seq_equal(x, y));
  }
  CHECK(equal_seen > 100);
}

TEST_CASE("normalization is idempotent and absorbs tail margins") {
  testgen::Rng rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    const BiSeq x = testgen::biseq(rng);
    const BiSeq renormalized(x.left_tail(), x.center_lo(), x.center(), x.right_tail());
    REQUIRE(x == renormalized);
  }
  // Margins generated by the tails never survive.
  const BiSeq z(TailSpec::constant(0), -2, {0, 0, 7, 0, 0, 0}, TailSpec::constant(0));
  CHECK(z.center() == Word{7});
  CHECK(z.center_lo() == 0);

  // center 1,2,1,2 continued by 1,2,1,2,... is one periodic stream
  const BiSeq p(TailSpec::constant(9), 0, {1, 2, 1, 2}, TailSpec::periodic({1, 2}));
  CHECK(p.center().empty());
  CHECK(p.right_tail() == TailSpec::periodic({1, 2}));

  const BiSeq ar(TailSpec::constant(9), 0, {4, 6}, TailSpec::arithmetic(8, 2));
  CHECK(ar.center().empty());
  CHECK(ar.right_tail().start() == 4);
}

TEST_CASE("cantor distance on worked instances") {
  const BiSeq zeros = constant_seq(0);
  CHECK(cantor_distance(zeros, zeros) == CantorDistance{true, 0});

  BiSeq bumped(TailSpec::constant(0), 3, {1}, TailSpec::constant(0));
  CHECK(cantor_distance(zeros, bumped) == CantorDistance{false, 3});

  // Disagreement only deep inside a tail pair.
  const BiSeq p1(TailSpec::constant(0), 0, {}, TailSpec::periodic({0, 0, 0, 0, 0, 1}));
  const auto d = cantor_distance(zeros, p1);
  CHECK_FALSE(d.zero);
  CHECK(d.exponent == 5);
}

TEST_CASE("cantor distance is an ultrametric") {
  testgen::Rng rng(20260501);
  for (int trial = 0; trial < 1200; ++trial) {
    const BiSeq x = testgen::biseq(rng, 3);
    const BiSeq y = testgen::biseq(rng, 3);
    const BiSeq z = testgen::biseq(rng, 3);
    const auto dxy = cantor_distance(x, y);
    const auto dyx = cantor_distance(y, x);
    REQUIRE(dxy == dyx);
    REQUIRE(dxy.zero == seq_equal(x, y));
    const auto dxz = cantor_distance(x, z);
    const auto dyz = cantor_distance(y, z);
    // d(x,z) <= max(d(x,y), d(y,z))
    const CantorDistance max_leg = distance_leq(dxy, dyz) ? dyz : dxy;
    REQUIRE(distance_leq(dxz, max_leg));
  }
}
