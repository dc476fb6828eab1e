#include "shiftlab/textio.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace shiftlab {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw std::invalid_argument(what + ": '" + text + "'");
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    bad("expected integer", text);
  }
  if (used != text.size()) bad("trailing characters after integer", text);
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Word parse_symbol_list(const std::string& text) {
  Word out;
  if (text.empty()) return out;
  for (const std::string& piece : split(text, ','))
    out.push_back(parse_int(piece));
  return out;
}

std::string join_symbols(const Word& w, char sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << sep;
    out << w[i];
  }
  return out.str();
}

bool consume_prefix(std::string& text, const std::string& prefix) {
  if (text.rfind(prefix, 0) != 0) return false;
  text.erase(0, prefix.size());
  return true;
}

}  // namespace

std::string format_tail(const TailSpec& t) {
  switch (t.kind()) {
    case TailSpec::Kind::Constant:
      return "const:" + std::to_string(t.constant_symbol());
    case TailSpec::Kind::Periodic:
      return "per:" + join_symbols(t.pattern(), ',');
    case TailSpec::Kind::Arithmetic:
      return "arith:" + std::to_string(t.start()) + "," + std::to_string(t.step());
  }
  return "?";
}

TailSpec parse_tail(const std::string& text) {
  std::string rest = text;
  if (consume_prefix(rest, "const:")) return TailSpec::constant(parse_int(rest));
  if (consume_prefix(rest, "per:")) {
    Word pattern = parse_symbol_list(rest);
    if (pattern.empty()) bad("periodic tail needs symbols", text);
    return TailSpec::periodic(std::move(pattern));
  }
  if (consume_prefix(rest, "arith:")) {
    const auto parts = split(rest, ',');
    if (parts.size() != 2) bad("arithmetic tail needs start,step", text);
    return TailSpec::arithmetic(parse_int(parts[0]), parse_int(parts[1]));
  }
  bad("unknown tail kind", text);
}

std::string format_biseq(const BiSeq& x) {
  std::ostringstream out;
  out << "left=" << format_tail(x.left_tail()) << ";center@" << x.center_lo() << "=["
      << join_symbols(x.center(), ',') << "];right=" << format_tail(x.right_tail());
  return out.str();
}

BiSeq parse_biseq(const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) bad("sequence needs left;center;right", text);
  std::string left = parts[0], center = parts[1], right = parts[2];
  if (!consume_prefix(left, "left=")) bad("missing left=", text);
  if (!consume_prefix(right, "right=")) bad("missing right=", text);
  if (!consume_prefix(center, "center@")) bad("missing center@", text);
  const auto eq = center.find("=[");
  if (eq == std::string::npos || center.back() != ']') bad("malformed center", text);
  const std::int64_t lo = parse_int(center.substr(0, eq));
  const std::string body = center.substr(eq + 2, center.size() - eq - 3);
  return BiSeq(parse_tail(left), lo, parse_symbol_list(body), parse_tail(right));
}

std::string format_finmap(const FinMap& h) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [p, s] : h.entries()) {
    if (!first) out << ",";
    out << p << ":" << s;
    first = false;
  }
  out << "}";
  return out.str();
}

FinMap parse_finmap(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') bad("malformed finmap", text);
  const std::string body = text.substr(1, text.size() - 2);
  FinMap h;
  if (body.empty()) return h;
  for (const std::string& piece : split(body, ',')) {
    const auto parts = split(piece, ':');
    if (parts.size() != 2) bad("finmap entry needs position:symbol", piece);
    const std::int64_t p = parse_int(parts[0]);
    if (h.get(p)) bad("duplicate position in finmap", text);
    h.set(p, parse_int(parts[1]));
  }
  return h;
}

namespace {

std::string format_alphabet(const AlphabetSpec& a) {
  if (a.kind == AlphabetSpec::Kind::Naturals) return "nat";
  return "fin[" + join_symbols(a.symbols, ',') + "]";
}

AlphabetSpec parse_alphabet(const std::string& text) {
  std::string rest = text;
  if (rest == "nat") return AlphabetSpec::naturals();
  if (consume_prefix(rest, "fin[") && !rest.empty() && rest.back() == ']')
    return AlphabetSpec::finite(parse_symbol_list(rest.substr(0, rest.size() - 1)));
  bad("unknown alphabet", text);
}

}  // namespace

std::string format_space(const ShiftSpaceSpec& space) {
  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      return "full:" + format_alphabet(space.alphabet);
    case ShiftSpaceSpec::Kind::ForbiddenBlocks: {
      std::ostringstream out;
      out << "forbid:" << format_alphabet(space.alphabet) << "{";
      for (std::size_t i = 0; i < space.forbidden.size(); ++i) {
        if (i) out << ",";
        out << "[" << join_symbols(space.forbidden[i], ',') << "]";
      }
      out << "}";
      return out.str();
    }
    case ShiftSpaceSpec::Kind::InjectiveWithZero:
      return "builtin:injective-with-zero";
    case ShiftSpaceSpec::Kind::ArreImage:
      return "builtin:arre-image";
  }
  return "?";
}

ShiftSpaceSpec parse_space(const std::string& text) {
  std::string rest = text;
  if (consume_prefix(rest, "full:")) return ShiftSpaceSpec::full_shift(parse_alphabet(rest));
  if (consume_prefix(rest, "forbid:")) {
    const auto brace = rest.find('{');
    if (brace == std::string::npos || rest.back() != '}') bad("malformed forbidden set", text);
    AlphabetSpec alphabet = parse_alphabet(rest.substr(0, brace));
    const std::string body = rest.substr(brace + 1, rest.size() - brace - 2);
    std::vector<Word> blocks;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',') {
        ++i;
        continue;
      }
      if (body[i] != '[') bad("expected [ in forbidden set", text);
      const auto close = body.find(']', i);
      if (close == std::string::npos) bad("unclosed block in forbidden set", text);
      blocks.push_back(parse_symbol_list(body.substr(i + 1, close - i - 1)));
      i = close + 1;
    }
    return ShiftSpaceSpec::forbidden_blocks(std::move(alphabet), std::move(blocks));
  }
  if (rest == "builtin:injective-with-zero") return ShiftSpaceSpec::injective_with_zero();
  if (rest == "builtin:arre-image") return ShiftSpaceSpec::arre_image();
  bad("unknown space spec", text);
}

std::string format_word(const Word& w, char separator) { return join_symbols(w, separator); }

std::string format_word_bracketed(const Word& w) { return "[" + join_symbols(w, ',') + "]"; }

Word parse_word(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ' ', ',');
  Word out;
  for (const std::string& piece : split(cleaned, ','))
    if (!piece.empty()) out.push_back(parse_int(piece));
  return out;
}

Morphism parse_morphism(const std::string& rule_name) {
  if (rule_name == "sum-window") return sum_window_morphism();
  if (rule_name == "two-point") return two_point_morphism();
  if (rule_name == "zero-locator") return zero_locator_morphism();
  if (rule_name == "arre") return arre_morphism();
  std::string rest = rule_name;
  if (consume_prefix(rest, "windowed:")) {
    std::ifstream in(rest);
    if (!in) bad("cannot open rule table", rest);
    std::string line;
    int m = -1, n = -1;
    std::map<Word, Symbol> table;
    std::set<Symbol> alphabet_symbols;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("m=", 0) == 0) {
        std::istringstream header(line);
        std::string mt, nt;
        header >> mt >> nt;
        m = static_cast<int>(parse_int(mt.substr(2)));
        if (nt.rfind("n=", 0) != 0) bad("table header needs m=<int> n=<int>", line);
        n = static_cast<int>(parse_int(nt.substr(2)));
        continue;
      }
      const auto arrow = line.find("->");
      if (arrow == std::string::npos) bad("table line needs ->", line);
      Word key = parse_word(line.substr(0, arrow));
      const Symbol out = parse_int(
          line.substr(arrow + 2).erase(0, line.substr(arrow + 2).find_first_not_of(' ')));
      for (Symbol s : key) alphabet_symbols.insert(s);
      table[std::move(key)] = out;
    }
    if (m < 0 || n < 0) bad("rule table missing header", rule_name);
    for (const auto& [key, out] : table)
      if (key.size() != static_cast<std::size_t>(m + n + 1))
        bad("table word length disagrees with header", rule_name);
    Word symbols(alphabet_symbols.begin(), alphabet_symbols.end());
    return windowed_morphism(table_rule(m, n, table),
                             ShiftSpaceSpec::full_shift(AlphabetSpec::finite(symbols)),
                             AlphabetSpec::naturals());
  }
  bad("unknown rule", rule_name);
}

DistinguishedFamily parse_family(const std::string& text) {
  if (text == "no-image") return DistinguishedFamily::no_image();
  std::string rest = text;
  if (consume_prefix(rest, "constant:")) return DistinguishedFamily::constant(parse_biseq(rest));
  if (consume_prefix(rest, "zero-drift:")) {
    const auto parts = split(rest, ':');
    if (parts.size() == 1) return DistinguishedFamily::zero_drift(parse_int(parts[0]));
    if (parts.size() == 2 && parts[1] == "fixed")
      return DistinguishedFamily::zero_drift(parse_int(parts[0]), false);
    bad("malformed zero-drift family", text);
  }
  bad("unknown family", text);
}

}  // namespace shiftlab
