#include "shiftlab/shiftspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "shiftlab/arre.hpp"

namespace shiftlab {

AlphabetSpec AlphabetSpec::naturals(std::int64_t enumeration_bound) {
  if (enumeration_bound < 1) throw std::invalid_argument("enumeration bound must be positive");
  AlphabetSpec a;
  a.kind = Kind::Naturals;
  a.enumeration_bound = enumeration_bound;
  return a;
}

AlphabetSpec AlphabetSpec::finite(Word symbols) {
  if (symbols.empty()) throw std::invalid_argument("finite alphabet must be nonempty");
  Word sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("finite alphabet has duplicate symbols");
  AlphabetSpec a;
  a.kind = Kind::Finite;
  a.symbols = std::move(symbols);
  return a;
}

bool AlphabetSpec::contains(Symbol s) const {
  if (kind == Kind::Naturals) return s >= 0;
  return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

Word AlphabetSpec::enumeration_pool(std::int64_t symbol_bound) const {
  Word pool;
  if (kind == Kind::Finite) {
    pool = symbols;
    std::sort(pool.begin(), pool.end());
  } else {
    for (Symbol s = 0; s <= symbol_bound; ++s) pool.push_back(s);
  }
  return pool;
}

ShiftSpaceSpec ShiftSpaceSpec::full_shift(AlphabetSpec alphabet) {
  ShiftSpaceSpec s;
  s.kind = Kind::FullShift;
  s.alphabet = std::move(alphabet);
  return s;
}

ShiftSpaceSpec ShiftSpaceSpec::forbidden_blocks(AlphabetSpec alphabet, std::vector<Word> blocks) {
  ShiftSpaceSpec s;
  s.kind = Kind::ForbiddenBlocks;
  s.alphabet = std::move(alphabet);
  for (const Word& w : blocks) {
    if (w.empty()) throw std::invalid_argument("forbidden block must be nonempty");
    for (Symbol sym : w)
      if (!s.alphabet.contains(sym)) throw AlphabetError("forbidden block symbol outside alphabet");
  }
  s.forbidden = std::move(blocks);
  return s;
}

ShiftSpaceSpec ShiftSpaceSpec::injective_with_zero() {
  ShiftSpaceSpec s;
  s.kind = Kind::InjectiveWithZero;
  s.alphabet = AlphabetSpec::naturals();
  return s;
}

ShiftSpaceSpec ShiftSpaceSpec::arre_image() {
  ShiftSpaceSpec s;
  s.kind = Kind::ArreImage;
  s.alphabet = AlphabetSpec::naturals();
  return s;
}

std::string ShiftSpaceSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::FullShift:
      out << "full shift";
      break;
    case Kind::ForbiddenBlocks:
      out << "forbidden-block space (" << forbidden.size() << " blocks)";
      break;
    case Kind::InjectiveWithZero:
      out << "injective sequences over N containing 0";
      break;
    case Kind::ArreImage:
      out << "image of N^Z under u+2v";
      break;
  }
  out << (alphabet.kind == AlphabetSpec::Kind::Finite ? " over a finite alphabet" : " over N");
  return out.str();
}

void require_over_alphabet(const AlphabetSpec& alphabet, const BiSeq& x) {
  for (Symbol s : x.center())
    if (!alphabet.contains(s)) throw AlphabetError("center symbol outside alphabet");
  auto check_tail = [&](const TailSpec& t) {
    switch (t.kind()) {
      case TailSpec::Kind::Constant:
        if (!alphabet.contains(t.constant_symbol()))
          throw AlphabetError("tail symbol outside alphabet");
        return;
      case TailSpec::Kind::Periodic:
        for (Symbol s : t.pattern())
          if (!alphabet.contains(s)) throw AlphabetError("tail symbol outside alphabet");
        return;
      case TailSpec::Kind::Arithmetic:
        // An unbounded progression leaves any finite alphabet, and a
        // negative-step one eventually leaves N.
        if (alphabet.kind == AlphabetSpec::Kind::Finite)
          throw AlphabetError("arithmetic tail is unbounded over a finite alphabet");
        if (t.start() < 0 || t.step() < 0)
          throw AlphabetError("arithmetic tail leaves N");
        return;
    }
  };
  check_tail(x.left_tail());
  check_tail(x.right_tail());
}

namespace {

// Does f occur somewhere fully inside the outward symbol stream of a tail?
// Outward index d >= 0; for the left tail the caller passes f reversed.
bool occurs_in_tail(const TailSpec& tail, const Word& f) {
  const auto len = static_cast<std::int64_t>(f.size());
  switch (tail.kind()) {
    case TailSpec::Kind::Constant:
      return std::all_of(f.begin(), f.end(),
                         [&](Symbol s) { return s == tail.constant_symbol(); });
    case TailSpec::Kind::Periodic: {
      const auto p = static_cast<std::int64_t>(tail.pattern().size());
      for (std::int64_t phase = 0; phase < p; ++phase) {
        bool match = true;
        for (std::int64_t i = 0; i < len && match; ++i)
          match = (f[static_cast<std::size_t>(i)] == tail.at_distance(phase + i));
        if (match) return true;
      }
      return false;
    }
    case TailSpec::Kind::Arithmetic: {
      // Increasing values leave the range of f's symbols after finitely
      // many starts; nothing can match beyond that.
      const Symbol fmax = *std::max_element(f.begin(), f.end());
      for (std::int64_t d = 0; tail.at_distance(d) <= fmax; ++d) {
        bool match = true;
        for (std::int64_t i = 0; i < len && match; ++i)
          match = (f[static_cast<std::size_t>(i)] == tail.at_distance(d + i));
        if (match) return true;
      }
      return false;
    }
  }
  return false;
}

bool forbidden_occurs(const std::vector<Word>& forbidden, const BiSeq& x) {
  for (const Word& f : forbidden) {
    const auto len = static_cast<std::int64_t>(f.size());
    // Occurrences overlapping the center word.
    const std::int64_t first = x.center_lo() - len + 1;
    const std::int64_t last = x.center_end() - 1;
    for (std::int64_t start = first; start <= last; ++start) {
      bool match = true;
      for (std::int64_t i = 0; i < len && match; ++i) match = (x.at(start + i) == f[i]);
      if (match) return true;
    }
    // Occurrences fully inside a tail.
    if (occurs_in_tail(x.right_tail(), f)) return true;
    Word rev(f.rbegin(), f.rend());
    if (occurs_in_tail(x.left_tail(), rev)) return true;
  }
  return false;
}

// Is v generated by the progression start + step*d, d >= 0?
bool in_progression(Symbol v, Symbol start, std::int64_t step) {
  return v >= start && (v - start) % step == 0;
}

bool injective_with_zero_decide(const BiSeq& x) {
  // Constant and periodic tails repeat a symbol at infinitely many
  // positions, so only strictly monotone tails can be injective.
  if (x.left_tail().kind() != TailSpec::Kind::Arithmetic) return false;
  if (x.right_tail().kind() != TailSpec::Kind::Arithmetic) return false;
  const TailSpec& lt = x.left_tail();
  const TailSpec& rt = x.right_tail();

  const Word& c = x.center();
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[i] == c[j]) return false;

  for (Symbol v : c) {
    if (in_progression(v, lt.start(), lt.step())) return false;
    if (in_progression(v, rt.start(), rt.step())) return false;
  }

  // Two infinite progressions share a value iff the congruences are
  // compatible modulo the gcd of their steps.
  const std::int64_t g = std::gcd(lt.step(), rt.step());
  if ((rt.start() - lt.start()) % g == 0) return false;

  std::size_t zeros = static_cast<std::size_t>(std::count(c.begin(), c.end(), 0));
  if (lt.start() == 0) ++zeros;
  if (rt.start() == 0) ++zeros;
  return zeros == 1;
}

// Single-word allowedness; the shared core of allowed_blocks and the
// follower/predecessor probes.
bool word_allowed(const ShiftSpaceSpec& space, const Word& w) {
  for (Symbol s : w)
    if (!space.alphabet.contains(s)) return false;
  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      return true;
    case ShiftSpaceSpec::Kind::ForbiddenBlocks: {
      auto clean = [&](const Word& v) {
        for (const Word& f : space.forbidden) {
          if (f.size() > v.size()) continue;
          for (std::size_t s = 0; s + f.size() <= v.size(); ++s)
            if (std::equal(f.begin(), f.end(), v.begin() + static_cast<std::ptrdiff_t>(s)))
              return false;
        }
        return true;
      };
      if (!clean(w)) return false;
      if (space.alphabet.kind == AlphabetSpec::Kind::Naturals) {
        // Over N a symbol above every forbidden entry extends any clean
        // word, so cleanliness settles membership.
        return true;
      }
      // Finite alphabet: search for a clean extension of one forbidden
      // length on each side.
      std::size_t max_f = 0;
      for (const Word& f : space.forbidden) max_f = std::max(max_f, f.size());
      if (max_f == 0) return true;
      Word padded(w.begin(), w.end());
      std::function<bool(std::size_t, bool)> extend = [&](std::size_t remaining, bool right) {
        if (remaining == 0) {
          if (right) return extend(max_f, false);
          return true;
        }
        for (Symbol s : space.alphabet.symbols) {
          if (right)
            padded.push_back(s);
          else
            padded.insert(padded.begin(), s);
          if (clean(padded) && extend(remaining - 1, right)) return true;
          if (right)
            padded.pop_back();
          else
            padded.erase(padded.begin());
        }
        return false;
      };
      return extend(max_f, true);
    }
    case ShiftSpaceSpec::Kind::InjectiveWithZero: {
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          if (w[i] == w[j]) return false;
      return true;
    }
    case ShiftSpaceSpec::Kind::ArreImage:
      return !arre::chain_solutions(w).empty();
  }
  return false;
}

}  // namespace

Tri member(const ShiftSpaceSpec& space, const BiSeq& x, std::int64_t n_max) {
  require_over_alphabet(space.alphabet, x);
  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      return Tri::True;
    case ShiftSpaceSpec::Kind::ForbiddenBlocks:
      return forbidden_occurs(space.forbidden, x) ? Tri::False : Tri::True;
    case ShiftSpaceSpec::Kind::InjectiveWithZero:
      return injective_with_zero_decide(x) ? Tri::True : Tri::False;
    case ShiftSpaceSpec::Kind::ArreImage:
      return arre::membership_in_y(x, n_max);
  }
  return Tri::Unknown;
}

Tri member(const ShiftSpaceSpec& space, const BiSeq& x) {
  return member(space, x, default_nmax());
}

std::set<Word> allowed_blocks(const ShiftSpaceSpec& space, std::int64_t n,
                              std::int64_t symbol_bound) {
  if (n < 1) throw std::invalid_argument("block length must be >= 1");
  const Word pool = space.alphabet.enumeration_pool(symbol_bound);
  double estimate = 1;
  for (std::int64_t i = 0; i < n; ++i) estimate *= static_cast<double>(pool.size());
  if (estimate > 4e6) throw std::invalid_argument("block enumeration too large at this bound");

  std::set<Word> out;
  Word w(static_cast<std::size_t>(n), pool.front());
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    for (std::size_t i = 0; i < idx.size(); ++i) w[i] = pool[idx[i]];
    if (word_allowed(space, w)) out.insert(w);
    std::size_t pos = idx.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

namespace {

FollowerResult neighbor_set(const ShiftSpaceSpec& space, Symbol a, std::int64_t symbol_bound,
                            bool follower) {
  if (!word_allowed(space, {a}))
    throw std::invalid_argument("symbol is not allowed in the space");
  FollowerResult r;
  for (Symbol b : space.alphabet.enumeration_pool(symbol_bound)) {
    const Word w = follower ? Word{a, b} : Word{b, a};
    if (word_allowed(space, w)) r.symbols.insert(b);
  }
  r.exhaustive = (space.alphabet.kind == AlphabetSpec::Kind::Finite);
  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      if (!r.exhaustive) r.closed_form = "all of N";
      break;
    case ShiftSpaceSpec::Kind::ForbiddenBlocks:
      if (!r.exhaustive)
        r.closed_form = "co-finite: every symbol above the largest forbidden entry qualifies";
      break;
    case ShiftSpaceSpec::Kind::InjectiveWithZero:
      r.closed_form = "N minus the symbol itself";
      break;
    case ShiftSpaceSpec::Kind::ArreImage:
      if (follower)
        r.closed_form = (a >= 2) ? "all of N" : "even naturals";
      else
        r.closed_form = (a % 2 == 0) ? "all of N" : "naturals >= 2";
      break;
  }
  return r;
}

}  // namespace

FollowerResult follower_set(const ShiftSpaceSpec& space, Symbol a, std::int64_t symbol_bound) {
  return neighbor_set(space, a, symbol_bound, true);
}

FollowerResult predecessor_set(const ShiftSpaceSpec& space, Symbol a, std::int64_t symbol_bound) {
  return neighbor_set(space, a, symbol_bound, false);
}

FinitenessReport finiteness_probe(const ShiftSpaceSpec& space, Side side,
                                  std::int64_t symbol_bound) {
  FinitenessReport report;
  report.side = side;
  const Word pool = space.alphabet.enumeration_pool(symbol_bound);

  auto probe_direction = [&](bool follower) {
    std::size_t sampled = 0;
    for (Symbol a : pool) {
      if (sampled >= 5) break;
      if (!word_allowed(space, {a})) continue;
      ++sampled;
      FinitenessRow row;
      row.symbol = a;
      auto at_bound = neighbor_set(space, a, symbol_bound, follower);
      auto at_double = neighbor_set(space, a, symbol_bound * 2, follower);
      row.count_at_bound = at_bound.symbols.size();
      row.count_at_double_bound = at_double.symbols.size();
      row.exhaustive = at_bound.exhaustive;
      report.rows.push_back(row);
    }
  };
  if (side == Side::Right || side == Side::Bilateral) probe_direction(true);
  if (side == Side::Left || side == Side::Bilateral) probe_direction(false);

  if (space.alphabet.kind == AlphabetSpec::Kind::Finite) {
    report.verdict = FinitenessVerdict::Finite;
    report.explanation = "finite alphabet: every follower/predecessor set is finite";
    return report;
  }
  const bool growth = std::any_of(report.rows.begin(), report.rows.end(), [](const auto& r) {
    return r.count_at_double_bound > r.count_at_bound;
  });
  switch (space.kind) {
    case ShiftSpaceSpec::Kind::FullShift:
      report.verdict = FinitenessVerdict::Infinite;
      report.explanation = "every symbol of N follows every symbol";
      break;
    case ShiftSpaceSpec::Kind::InjectiveWithZero:
      report.verdict = FinitenessVerdict::Infinite;
      report.explanation = "follower sets are co-finite (N minus one symbol)";
      break;
    case ShiftSpaceSpec::Kind::ForbiddenBlocks:
      report.verdict = FinitenessVerdict::Infinite;
      report.explanation = "symbols above the largest forbidden entry always extend";
      break;
    case ShiftSpaceSpec::Kind::ArreImage:
      report.verdict = FinitenessVerdict::Infinite;
      report.explanation = "a free chain variable keeps every follower set infinite";
      break;
  }
  if (!growth && report.verdict == FinitenessVerdict::Infinite)
    report.verdict = FinitenessVerdict::InconclusiveAtBound;
  return report;
}

std::int64_t default_nmax() {
  if (const char* env = std::getenv("SHIFTLAB_NMAX_DEFAULT")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 32;
}

}  // namespace shiftlab
