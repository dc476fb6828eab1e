#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "generators.hpp"
#include "shiftlab/textio.hpp"

using namespace shiftlab;

TEST_CASE("sequence format round-trips bit-exactly") {
  const BiSeq x(TailSpec::constant(1), -1, {5, 0, 2}, TailSpec::constant(0));
  const std::string text = format_biseq(x);
  CHECK(text == "left=const:1;center@-1=[5,0,2];right=const:0");
  CHECK(parse_biseq(text) == x);

  CHECK(format_biseq(constant_seq(0)) == "left=const:0;center@0=[];right=const:0");

  const BiSeq y(TailSpec::periodic({1, 2}), 3, {9}, TailSpec::arithmetic(4, -2));
  CHECK(parse_biseq(format_biseq(y)) == y);

  testgen::Rng rng(127);
  for (int trial = 0; trial < 200; ++trial) {
    const BiSeq z = testgen::biseq(rng);
    REQUIRE(parse_biseq(format_biseq(z)) == z);
  }
}

TEST_CASE("sequence parser rejects malformed text") {
  CHECK_THROWS_AS(parse_biseq("left=const:0;center@0=[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_biseq("left=bogus:0;center@0=[];right=const:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_biseq("left=const:0;center@x=[];right=const:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_biseq("left=const:0;center@0=[1;right=const:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tail("per:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tail("arith:1"), std::invalid_argument);
}

TEST_CASE("finmap format round-trips with ascending positions") {
  FinMap h;
  h.set(3, 7);
  h.set(-2, 0);
  h.set(0, 1);
  CHECK(format_finmap(h) == "{-2:0,0:1,3:7}");
  CHECK(parse_finmap("{-2:0,0:1,3:7}") == h);
  CHECK(format_finmap(FinMap{}) == "{}");
  CHECK(parse_finmap("{}") == FinMap{});
  CHECK_THROWS_AS(parse_finmap("{0:1,0:2}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_finmap("0:1"), std::invalid_argument);

  testgen::Rng rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    const FinMap m = testgen::finmap(rng);
    REQUIRE(parse_finmap(format_finmap(m)) == m);
  }
}

TEST_CASE("space specs round-trip") {
  const char* specs[] = {
      "full:nat",
      "full:fin[0,1,2]",
      "forbid:nat{[1,1],[2,0,2]}",
      "forbid:fin[0,1]{[0,0]}",
      "builtin:injective-with-zero",
      "builtin:arre-image",
  };
  for (const char* s : specs) CHECK(format_space(parse_space(s)) == s);
  CHECK_THROWS_AS(parse_space("full:int"), std::invalid_argument);
  CHECK_THROWS_AS(parse_space("forbid:nat[1,1]"), std::invalid_argument);
}

TEST_CASE("words parse from comma or space separated text") {
  CHECK(parse_word("1,2,3") == Word{1, 2, 3});
  CHECK(parse_word("1 2 3") == Word{1, 2, 3});
  CHECK(parse_word("-1, 4") == Word{-1, 4});
  CHECK(format_word(Word{1, 2, 3}) == "1 2 3");
  CHECK(format_word_bracketed(Word{1, 2, 3}) == "[1,2,3]");
}

TEST_CASE("morphism and family names resolve") {
  CHECK(parse_morphism("arre").name() == "arre");
  CHECK(parse_morphism("sum-window").name() == "sum-window");
  CHECK(parse_morphism("two-point").name() == "two-point");
  CHECK(parse_morphism("zero-locator").name() == "zero-locator");
  CHECK_THROWS_AS(parse_morphism("mystery"), std::invalid_argument);

  CHECK(parse_family("no-image").kind() == DistinguishedFamily::Kind::NoImage);
  CHECK(parse_family("zero-drift:4").zero_pos() == 4);
  CHECK_FALSE(parse_family("zero-drift:4:fixed").drifting());
  const auto fam = parse_family("constant:left=const:0;center@0=[7];right=const:0");
  CHECK(fam.kind() == DistinguishedFamily::Kind::Constant);
  CHECK(fam.base().at(0) == 7);
}

TEST_CASE("windowed table rules load from disk") {
  const std::string path = "xor_rule.txt";
  {
    std::ofstream out(path);
    out << "m=0 n=1\n";
    out << "0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> 0\n";
  }
  const Morphism psi = parse_morphism("windowed:" + path);
  const BiSeq alt(TailSpec::periodic({0, 1}), 0, {}, TailSpec::periodic({0, 1}));
  CHECK(eval_window(psi, alt, 0, 3) == Word{1, 1, 1, 1});
  std::remove(path.c_str());
}
