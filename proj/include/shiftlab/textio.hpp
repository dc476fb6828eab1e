#pragma once

#include "shiftlab/lemma.hpp"
#include "shiftlab/morphism.hpp"

namespace shiftlab {

/// Line formats, one value per line:
///   sequence   left=<tail>;center@<lo>=[s0,s1,...];right=<tail>
///   tail       const:<s> | per:<s0,s1,...> | arith:<start>,<step>
///   finmap     {p1:s1,p2:s2,...} with ascending positions; {} when empty
///   space      full:nat | full:fin[0,1,2] | forbid:nat{[1,1],[2,0,2]}
///              | builtin:injective-with-zero | builtin:arre-image
/// Parsing rejects malformed text with std::invalid_argument.

std::string format_tail(const TailSpec& t);
TailSpec parse_tail(const std::string& text);

std::string format_biseq(const BiSeq& x);
BiSeq parse_biseq(const std::string& text);

std::string format_finmap(const FinMap& h);
FinMap parse_finmap(const std::string& text);

std::string format_space(const ShiftSpaceSpec& space);
ShiftSpaceSpec parse_space(const std::string& text);

std::string format_word(const Word& w, char separator = ' ');
std::string format_word_bracketed(const Word& w);
Word parse_word(const std::string& text);  // comma- or space-separated symbols

/// CLI rule names: sum-window | two-point | zero-locator | arre
/// | windowed:<table-file>. A table file holds a header line
/// `m=<int> n=<int>` and one `s0 s1 ... -> out` line per window word;
/// its alphabet is the finite set of symbols appearing in the words.
Morphism parse_morphism(const std::string& rule_name);

/// Family names: no-image | constant:<sequence> | zero-drift:<n>
/// | zero-drift:<n>:fixed.
DistinguishedFamily parse_family(const std::string& text);

}  // namespace shiftlab
