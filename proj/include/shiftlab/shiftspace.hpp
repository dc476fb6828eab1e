#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shiftlab/biseq.hpp"

namespace shiftlab {

/// Thrown when a sequence or word uses symbols outside the space's alphabet.
struct AlphabetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AlphabetSpec {
  enum class Kind { Finite, Naturals };

  Kind kind = Kind::Naturals;
  Word symbols;  // Finite: nonempty, duplicate-free
  std::int64_t enumeration_bound = 16;  // Naturals: used only by searches

  static AlphabetSpec naturals(std::int64_t enumeration_bound = 16);
  static AlphabetSpec finite(Word symbols);

  bool contains(Symbol s) const;
  /// Symbols searched by enumeration operations, capped at symbol_bound
  /// for the Naturals case.
  Word enumeration_pool(std::int64_t symbol_bound) const;
};

enum class Tri { False, True, Unknown };

struct ShiftSpaceSpec {
  enum class Kind { FullShift, ForbiddenBlocks, InjectiveWithZero, ArreImage };

  Kind kind = Kind::FullShift;
  AlphabetSpec alphabet;
  std::vector<Word> forbidden;  // ForbiddenBlocks: nonempty words over the alphabet

  static ShiftSpaceSpec full_shift(AlphabetSpec alphabet);
  static ShiftSpaceSpec forbidden_blocks(AlphabetSpec alphabet, std::vector<Word> blocks);
  /// All injective sequences over N in which 0 appears.
  static ShiftSpaceSpec injective_with_zero();
  /// The image of the full shift over N under x_n + 2 x_{n+1}.
  static ShiftSpaceSpec arre_image();

  std::string describe() const;
};

/// Rejects sequences whose symbols leave the alphabet (a tail that is
/// unbounded over a finite alphabet, or negative over N).
void require_over_alphabet(const AlphabetSpec& alphabet, const BiSeq& x);

/// Exact membership wherever the representation permits: FullShift always,
/// ForbiddenBlocks and InjectiveWithZero by case analysis on the tails,
/// ArreImage by bounded inversion (Unknown when the bound runs out).
Tri member(const ShiftSpaceSpec& space, const BiSeq& x, std::int64_t n_max);
Tri member(const ShiftSpaceSpec& space, const BiSeq& x);

/// Words of length n that occur in some point of the space, restricted to
/// symbols <= symbol_bound over N (the whole alphabet when finite).
std::set<Word> allowed_blocks(const ShiftSpaceSpec& space, std::int64_t n,
                              std::int64_t symbol_bound);

struct FollowerResult {
  std::set<Symbol> symbols;
  bool exhaustive = false;   // true when the set is provably the whole answer
  std::string closed_form;   // nonempty when a closed-form description is known
};

/// {b : ab is allowed}, within the enumeration pool.
FollowerResult follower_set(const ShiftSpaceSpec& space, Symbol a, std::int64_t symbol_bound);
/// {b : ba is allowed}, within the enumeration pool.
FollowerResult predecessor_set(const ShiftSpaceSpec& space, Symbol a, std::int64_t symbol_bound);

enum class Side { Right, Left, Bilateral };

enum class FinitenessVerdict { Finite, Infinite, InconclusiveAtBound };

struct FinitenessRow {
  Symbol symbol = 0;
  std::size_t count_at_bound = 0;
  std::size_t count_at_double_bound = 0;
  bool exhaustive = false;
};

struct FinitenessReport {
  Side side = Side::Right;
  FinitenessVerdict verdict = FinitenessVerdict::InconclusiveAtBound;
  std::vector<FinitenessRow> rows;
  std::string explanation;
};

FinitenessReport finiteness_probe(const ShiftSpaceSpec& space, Side side,
                                  std::int64_t symbol_bound);

/// Default bound for search-style operations; reads SHIFTLAB_NMAX_DEFAULT.
std::int64_t default_nmax();

}  // namespace shiftlab
