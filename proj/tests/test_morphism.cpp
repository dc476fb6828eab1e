#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "shiftlab/lemma.hpp"
#include "shiftlab/morphism.hpp"

using namespace shiftlab;

namespace {

BiSeq noimage_member(std::int64_t k) {
  Word center;
  for (std::int64_t j = -k; j <= k; ++j) center.push_back(3 * k + 1 - j);
  return BiSeq(TailSpec::constant(1), -k, std::move(center), TailSpec::constant(0));
}

}  // namespace

TEST_CASE("window evaluation of the built-in rules") {
  const BiSeq zeros = constant_seq(0);
  CHECK(eval_window(sum_window_morphism(), zeros, -2, 2) == Word{0, 0, 0, 0, 0});

  for (std::int64_t k = 1; k <= 12; ++k) {
    const Word w = eval_window(two_point_morphism(), noimage_member(k), -k, k);
    CHECK(w == Word(static_cast<std::size_t>(2 * k + 1), 1));
  }

  const Symbol j = 5;
  const BiSeq spike(TailSpec::constant(0), 1, {j}, TailSpec::constant(0));
  CHECK(eval_window(arre_morphism(), spike, -1, 2) == Word{0, 2 * j, j, 0});
}

TEST_CASE("zero locator needs a unique zero") {
  const BiSeq x = zigzag(3);
  CHECK(eval_window(zero_locator_morphism(), x, 0, 0) == Word{3});
  CHECK_THROWS_AS(zero_position(constant_seq(0)), EvalError);
  const BiSeq no_zero(TailSpec::arithmetic(1, 2), 0, {7}, TailSpec::arithmetic(2, 2));
  CHECK_THROWS_AS(zero_position(no_zero), EvalError);
}

TEST_CASE("full evaluation carries tails through the rules") {
  // Windowed rule over constant background.
  const auto zero_image = eval_full(arre_morphism(), constant_seq(0));
  REQUIRE(zero_image.has_value());
  CHECK(seq_equal(*zero_image, constant_seq(0)));

  // Zero locator: y_n = z - n entirely from the closed form.
  const auto y = eval_full(zero_locator_morphism(), zigzag(3));
  REQUIRE(y.has_value());
  for (std::int64_t n = -10; n <= 10; ++n) CHECK(y->at(n) == 3 - n);

  // Data rule over constant tails: the ramp member's image settles to
  // 2*0 = 0 on the right and 2*1 = 2 on the left.
  const auto image = eval_full(two_point_morphism(), noimage_member(1));
  REQUIRE(image.has_value());
  CHECK(image->right_tail() == TailSpec::constant(0));
  CHECK(image->left_tail() == TailSpec::constant(2));
  for (std::int64_t n = -6; n <= 6; ++n)
    CHECK(image->at(n) == eval_window(two_point_morphism(), noimage_member(1), n, n)[0]);

  // Periodic tails map to periodic tails under a windowed rule.
  const BiSeq per(TailSpec::periodic({1, 2}), 0, {9}, TailSpec::periodic({0, 3}));
  const auto per_image = eval_full(arre_morphism(), per);
  REQUIRE(per_image.has_value());
  for (std::int64_t n = -12; n <= 12; ++n)
    CHECK(per_image->at(n) == per.at(n) + 2 * per.at(n + 1));

  // Arithmetic tails under a windowed rule: window-only.
  const BiSeq arith(TailSpec::constant(0), 0, {}, TailSpec::arithmetic(0, 1));
  CHECK_FALSE(eval_full(arre_morphism(), arith).has_value());

  // Data rules over periodic tails: window-only.
  CHECK_FALSE(eval_full(two_point_morphism(), per).has_value());
}

TEST_CASE("full evaluation agrees with window evaluation on random input") {
  testgen::Rng rng(47);
  const Morphism rules[] = {arre_morphism(), sum_window_morphism(), two_point_morphism()};
  for (int trial = 0; trial < 150; ++trial) {
    const BiSeq x = testgen::biseq(rng, 5);
    for (const Morphism& psi : rules) {
      const auto full = eval_full(psi, x);
      if (!full) continue;
      const Word window = eval_window(psi, x, -25, 25);
      REQUIRE(full->restrict_to(-25, 25) == window);
    }
  }
}

TEST_CASE("every built-in morphism is shift-commuting") {
  testgen::Rng rng(53);
  const Morphism rules[] = {arre_morphism(), sum_window_morphism(), two_point_morphism()};
  for (const Morphism& psi : rules)
    for (int trial = 0; trial < 120; ++trial) {
      const BiSeq x = testgen::biseq(rng, 5);
      const auto k = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
      const auto a = std::uniform_int_distribution<std::int64_t>(-20, 10)(rng);
      const auto b = a + std::uniform_int_distribution<std::int64_t>(0, 10)(rng);
      REQUIRE(check_shift_commuting(psi, x, k, a, b));
    }
  for (int trial = 0; trial < 120; ++trial) {
    const BiSeq x = testgen::injective_with_zero(
        rng, std::uniform_int_distribution<std::int64_t>(-5, 5)(rng));
    const auto k = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
    REQUIRE(check_shift_commuting(zero_locator_morphism(), x, k, -10, 10));
  }
}

TEST_CASE("coordinate evaluation decomposes through shifts") {
  testgen::Rng rng(59);
  const Morphism psi = sum_window_morphism();
  for (int trial = 0; trial < 100; ++trial) {
    const BiSeq x = testgen::biseq(rng, 4);
    const auto n = std::uniform_int_distribution<std::int64_t>(-12, 12)(rng);
    REQUIRE(eval_window(psi, x, n, n) == eval_window(psi, x.shifted(n), 0, 0));
  }
}

TEST_CASE("widening a rule never changes its code") {
  const WindowedRule base = arre_rule();
  CHECK(widen_rule(base, 0, 1).name == base.name);
  CHECK_THROWS_AS(widen_rule(base, 0, 0), std::invalid_argument);

  const WindowedRule wide = widen_rule(base, 1, 1);
  CHECK(wide.memory == 1);
  CHECK(wide.anticipation == 1);
  CHECK(wide.phi({9, 3, 4}) == 3 + 2 * 4);

  testgen::Rng rng(61);
  const Morphism narrow = arre_morphism();
  const Morphism wide_m = windowed_morphism(wide, narrow.input_space, narrow.output_alphabet);
  const Morphism wider_m = windowed_morphism(widen_rule(base, 2, 3), narrow.input_space,
                                             narrow.output_alphabet);
  for (int trial = 0; trial < 100; ++trial) {
    const BiSeq x = testgen::biseq(rng, 6);
    const auto a = std::uniform_int_distribution<std::int64_t>(-10, 5)(rng);
    const auto b = a + std::uniform_int_distribution<std::int64_t>(0, 8)(rng);
    const Word expected = eval_window(narrow, x, a, b);
    REQUIRE(eval_window(wide_m, x, a, b) == expected);
    REQUIRE(eval_window(wider_m, x, a, b) == expected);
  }
}

TEST_CASE("canonical barrier of the window-sum rule") {
  const Morphism psi = sum_window_morphism();
  const BarrierRule barrier = barrier_from_coordinate(psi, 2, 2);

  // value 0: only the single-point cylinder {0:0}
  std::vector<FinMap> value0;
  for (std::size_t i = 0; i < barrier.cylinders.size(); ++i)
    if (barrier.values[i] == 0) value0.push_back(barrier.cylinders[i]);
  CHECK(value0 == std::vector<FinMap>{FinMap({{0, 0}})});

  // value 1: brute-force enumeration over center words with window sum 1
  std::vector<FinMap> value1;
  for (std::size_t i = 0; i < barrier.cylinders.size(); ++i)
    if (barrier.values[i] == 1) value1.push_back(barrier.cylinders[i]);
  std::vector<FinMap> expected;
  for (Symbol a = 0; a <= 2; ++a)
    for (Symbol b = 0; b <= 2; ++b)
      if (a + 1 + b == 1) expected.push_back(FinMap({{-1, a}, {0, 1}, {1, b}}));
  // w_0 = 0 forces sum 0, so every value-1 window has w_0 = 1 and flanks 0.
  CHECK(value1 == expected);
  CHECK(value1.size() == 1);

  // the barrier is an attached partition on probes within bounds
  const auto report = check_disjoint(barrier, psi.input_space);
  CHECK(report.disjoint);
}

TEST_CASE("canonical barrier of the two-point rule") {
  const BarrierRule barrier = barrier_from_coordinate(two_point_morphism(), 2, 3);
  std::size_t three_point = 0;
  for (std::size_t i = 0; i < barrier.cylinders.size(); ++i) {
    const FinMap& h = barrier.cylinders[i];
    if (h.size() == 3) {
      ++three_point;
      const Symbol m = *h.get(0);
      REQUIRE(m >= 1);
      REQUIRE(h.get(-m).has_value());
      REQUIRE(h.get(m).has_value());
      REQUIRE(barrier.values[i] == *h.get(-m) + *h.get(m));
    }
  }
  // m in {1, 2} (capped by the symbol bound), 3x3 flank pairs each
  CHECK(three_point == 2 * 9);
}

TEST_CASE("zero-locator barrier pins single zeros and certifies disjointness in-space") {
  const Morphism psi = zero_locator_morphism();
  const BarrierRule barrier = barrier_from_coordinate(psi, 4, 4);
  CHECK(barrier.cylinders.size() == 9);
  // The f_n are pairwise compatible as maps, but no injective sequence has
  // two zeros, so the space certifies disjointness.
  const auto report = check_disjoint(barrier, psi.input_space);
  CHECK(report.disjoint);
  const auto naive = check_disjoint(barrier, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()));
  CHECK_FALSE(naive.disjoint);
}

TEST_CASE("barrier evaluation locates the unique cylinder") {
  BarrierRule rule;
  rule.cylinders = {FinMap({{0, 0}}), FinMap({{0, 1}})};
  rule.values = {10, 20};
  const Morphism psi =
      barrier_morphism(rule, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
                       AlphabetSpec::naturals());
  const BiSeq alt(TailSpec::periodic({0, 1}), 0, {}, TailSpec::periodic({0, 1}));
  CHECK(eval_window(psi, alt, 0, 1) == Word{10, 20});

  const BiSeq two = constant_seq(2);
  CHECK_THROWS_AS(eval_window(psi, two, 0, 0), NoCylinderError);

  BarrierRule with_default = rule;
  with_default.fallback = 99;
  const Morphism psi2 =
      barrier_morphism(with_default, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
                       AlphabetSpec::naturals());
  CHECK(eval_window(psi2, two, 0, 0) == Word{99});

  BarrierRule overlapping;
  overlapping.cylinders = {FinMap({{0, 0}}), FinMap({{1, 1}})};
  overlapping.values = {1, 2};
  const Morphism psi3 =
      barrier_morphism(overlapping, ShiftSpaceSpec::full_shift(AlphabetSpec::naturals()),
                       AlphabetSpec::naturals());
  CHECK_THROWS_AS(eval_window(psi3, alt, 0, 0), AmbiguousCylinderError);
}

TEST_CASE("minimal cylinders pin exactly what the 0-coordinate reads") {
  testgen::Rng rng(67);
  const Morphism rules[] = {arre_morphism(), sum_window_morphism(), two_point_morphism()};
  for (const Morphism& psi : rules)
    for (int trial = 0; trial < 80; ++trial) {
      const BiSeq x = testgen::biseq(rng, 4);
      const FinMap h = minimal_cylinder_at(psi, x);
      REQUIRE(contains(h, x));
      // Every point of the cylinder shares the 0-output.
      const Word here = eval_window(psi, x, 0, 0);
      BiSeq other = testgen::biseq(rng, 4);
      Word patched_center;
      const std::int64_t lo = h.min_position() - 1, hi = h.max_position() + 1;
      for (std::int64_t p = lo; p <= hi; ++p) {
        const auto pinned = h.get(p);
        patched_center.push_back(pinned ? *pinned : other.at(p));
      }
      const BiSeq patched(other.left_tail(), lo, patched_center, other.right_tail());
      REQUIRE(contains(h, patched));
      REQUIRE(eval_window(psi, patched, 0, 0) == here);
    }
}

TEST_CASE("preimage search explores and prunes") {
  // Inverting a known image succeeds inside the bounds.
  const Morphism psi = two_point_morphism();
  const BiSeq zeros = constant_seq(0);
  const auto hit = search_preimage_finite_support(psi, zeros, 2, 2);
  REQUIRE(hit.found.has_value());
  CHECK(seq_equal(*hit.found, zeros));

  // No finite-support point maps to all ones: coordinates outside the
  // support force output 0.
  const auto miss = search_preimage_finite_support(psi, constant_seq(1), 3, 4);
  CHECK_FALSE(miss.found.has_value());
  CHECK(miss.label == "bounded-evidence");
}
