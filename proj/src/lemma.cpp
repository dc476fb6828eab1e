#include "shiftlab/lemma.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace shiftlab {

BiSeq zigzag(std::int64_t zero_pos) {
  return BiSeq(TailSpec::arithmetic(2, 2), zero_pos, {0}, TailSpec::arithmetic(1, 2));
}

DistinguishedFamily DistinguishedFamily::no_image() {
  DistinguishedFamily f;
  f.kind_ = Kind::NoImage;
  return f;
}

DistinguishedFamily DistinguishedFamily::constant(BiSeq base) {
  DistinguishedFamily f;
  f.kind_ = Kind::Constant;
  f.base_ = std::move(base);
  return f;
}

DistinguishedFamily DistinguishedFamily::zero_drift(std::int64_t zero_pos, bool drifting) {
  DistinguishedFamily f;
  f.kind_ = Kind::ZeroDrift;
  f.zero_pos_ = zero_pos;
  f.drifting_ = drifting;
  return f;
}

BiSeq DistinguishedFamily::generate(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("family members are indexed by k >= 1");
  switch (kind_) {
    case Kind::NoImage: {
      Word center;
      for (std::int64_t j = -k; j <= k; ++j) center.push_back(3 * k + 1 - j);
      return BiSeq(TailSpec::constant(1), -k, std::move(center), TailSpec::constant(0));
    }
    case Kind::Constant:
      return *base_;
    case Kind::ZeroDrift:
      if (!drifting_) return zigzag(zero_pos_);
      // Zero stays pinned; all other values climb with k, odd to the right
      // of the zero and even to the left.
      return BiSeq(TailSpec::arithmetic(2 * k + 2, 2), zero_pos_, {0},
                   TailSpec::arithmetic(2 * k + 1, 2));
  }
  throw std::logic_error("unreachable");
}

std::string DistinguishedFamily::name() const {
  switch (kind_) {
    case Kind::NoImage:
      return "no-image";
    case Kind::Constant:
      return "constant";
    case Kind::ZeroDrift:
      return drifting_ ? "zero-drift" : "zero-drift(fixed)";
  }
  return "?";
}

const BiSeq& DistinguishedFamily::base() const {
  if (kind_ != Kind::Constant) throw std::logic_error("base() on a non-constant family");
  return *base_;
}

std::int64_t DistinguishedFamily::zero_pos() const {
  if (kind_ != Kind::ZeroDrift) throw std::logic_error("zero_pos() on a non-zero-drift family");
  return zero_pos_;
}

bool DistinguishedFamily::drifting() const {
  if (kind_ != Kind::ZeroDrift) throw std::logic_error("drifting() on a non-zero-drift family");
  return drifting_;
}

Word limit_image(const DistinguishedFamily& fam, const Morphism& psi, std::int64_t w,
                 std::int64_t k_max) {
  if (w < 0) throw std::invalid_argument("window half-width must be nonnegative");
  if (k_max <= 0) k_max = 3 * w + 30;

  std::optional<Word> stabilized;
  std::optional<Word> prev1, prev2;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    Word window = eval_window(psi, fam.generate(k), -w, w);
    if (prev1 && prev2 && window == *prev1 && window == *prev2) {
      stabilized = window;
      break;
    }
    prev2 = std::move(prev1);
    prev1 = std::move(window);
  }
  if (!stabilized) throw NotStabilized("image windows did not stabilize within the k bound");

  // Closed-form confirmation for the built-in families.
  std::optional<Word> expected;
  if (fam.kind() == DistinguishedFamily::Kind::Constant)
    expected = eval_window(psi, fam.base(), -w, w);
  else if (fam.kind() == DistinguishedFamily::Kind::NoImage &&
           std::holds_alternative<DataRule>(psi.rule) &&
           std::get<DataRule>(psi.rule) == DataRule::TwoPoint)
    expected = Word(static_cast<std::size_t>(2 * w + 1), 1);
  else if (fam.kind() == DistinguishedFamily::Kind::ZeroDrift &&
           std::holds_alternative<DataRule>(psi.rule) &&
           std::get<DataRule>(psi.rule) == DataRule::ZeroLocator) {
    expected = Word();
    for (std::int64_t m = -w; m <= w; ++m) expected->push_back(fam.zero_pos() - m);
  }
  if (expected && *expected != *stabilized)
    throw std::logic_error("stabilized window disagrees with the family's closed form");
  return *stabilized;
}

BarrierSource closed_form_source(const Morphism& psi) {
  BarrierSource s;
  s.name = psi.name() + "-minimal";
  s.closed_form = true;
  s.through = [psi](const BiSeq& probe) -> std::optional<FinMap> {
    return minimal_cylinder_at(psi, probe);
  };
  return s;
}

BarrierSource source_from_barrier(BarrierRule rule) {
  BarrierSource s;
  s.name = "explicit-barrier";
  s.closed_form = false;
  s.through = [rule = std::move(rule)](const BiSeq& probe) -> std::optional<FinMap> {
    for (const FinMap& h : rule.cylinders)
      if (contains(h, probe)) return h;
    return std::nullopt;
  };
  return s;
}

namespace {

// Candidate order: hit throughout the tail of the sample first, then by
// total hits, then smallest domain, then lexicographic.
struct Candidate {
  FinMap h;
  std::size_t tail_hits = 0;
  std::size_t hits = 0;
};

std::vector<Candidate> collect_candidates(const BarrierSource& source,
                                          const DistinguishedFamily& fam, std::int64_t j,
                                          std::span<const std::int64_t> sample) {
  std::map<FinMap, Candidate> groups;
  const std::size_t tail_from = sample.size() / 2;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const BiSeq probe = fam.generate(sample[i]).shifted(j);
    const auto h = source.through(probe);
    if (!h) continue;
    auto& cand = groups[*h];
    cand.h = *h;
    ++cand.hits;
    if (i >= tail_from) ++cand.tail_hits;
  }
  std::vector<Candidate> out;
  out.reserve(groups.size());
  for (auto& [_, cand] : groups) out.push_back(std::move(cand));
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.tail_hits != b.tail_hits) return a.tail_hits > b.tail_hits;
    if (a.hits != b.hits) return a.hits > b.hits;
    if (a.h.size() != b.h.size()) return a.h.size() < b.h.size();
    return a.h < b.h;
  });
  return out;
}

std::string finmap_brief(const FinMap& h) {
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

}  // namespace

LemmaTrace build_trace(const DistinguishedFamily& fam, const Morphism& psi,
                       const BarrierSource& source, std::int64_t l_max,
                       std::int64_t k_lo, std::int64_t k_hi) {
  if (l_max < 0) throw std::invalid_argument("trace depth must be nonnegative");
  if (k_hi <= 0) k_hi = std::max(3 * l_max + 12, k_lo + 20);
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("bad sample range");

  LemmaTrace trace;
  trace.family_name = fam.name();
  trace.morphism_name = psi.name();
  trace.source_name = source.name;
  trace.limit = limit_image(fam, psi, l_max);
  trace.closed_form_pair =
      (fam.kind() == DistinguishedFamily::Kind::Constant &&
       std::holds_alternative<WindowedRule>(psi.rule)) ||
      (fam.kind() == DistinguishedFamily::Kind::ZeroDrift &&
       std::holds_alternative<DataRule>(psi.rule) &&
       std::get<DataRule>(psi.rule) == DataRule::ZeroLocator);

  std::vector<std::int64_t> sample;
  for (std::int64_t k = k_lo; k <= k_hi; ++k) sample.push_back(k);

  auto target_at = [&](std::int64_t ell) {
    const auto off = static_cast<std::size_t>(l_max - ell);
    return Word(trace.limit.begin() + static_cast<std::ptrdiff_t>(off),
                trace.limit.end() - static_cast<std::ptrdiff_t>(off));
  };

  FinMap h_prev;
  std::vector<std::int64_t> s_prev = sample;
  for (std::int64_t ell = 0; ell <= l_max; ++ell) {
    std::vector<std::int64_t> coords;
    if (ell == 0)
      coords = {0};
    else
      coords = {-ell, ell};

    std::vector<std::vector<Candidate>> options;
    for (std::int64_t j : coords) {
      // Only members whose image already agrees with the limit at j can
      // sit in an attached cylinder of value y_j.
      const Symbol y_j = trace.limit[static_cast<std::size_t>(l_max + j)];
      std::vector<std::int64_t> agreeing;
      for (std::int64_t k : s_prev)
        if (eval_window(psi, fam.generate(k), j, j)[0] == y_j) agreeing.push_back(k);
      if (agreeing.empty())
        throw TraceFailed("no sampled member matches the limit at coordinate " +
                          std::to_string(j));
      auto cands = collect_candidates(source, fam, j, agreeing);
      if (cands.empty())
        throw TraceFailed("no candidate cylinder through the sampled points at coordinate " +
                          std::to_string(j));
      options.push_back(std::move(cands));
    }

    // Deterministic retry over candidate combinations on join conflicts.
    std::optional<FinMap> h_next;
    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::vector<FinMap> parts{h_prev};
      for (std::size_t c = 0; c < coords.size(); ++c)
        parts.push_back(options[c][pick[c]].h.translated(coords[c]));
      JoinResult joined = join(parts);
      if (const auto* h = std::get_if<FinMap>(&joined)) {
        h_next = *h;
        break;
      }
      // advance the combination odometer
      std::size_t c = pick.size();
      bool advanced = false;
      while (c > 0) {
        --c;
        if (++pick[c] < options[c].size()) {
          advanced = true;
          break;
        }
        pick[c] = 0;
      }
      if (!advanced) {
        const auto* conflict = std::get_if<JoinConflict>(&joined);
        std::ostringstream diag;
        diag << "candidate cylinders exhausted at level " << ell;
        if (conflict)
          diag << " (last conflict at position " << conflict->position << ": "
               << conflict->existing << " vs " << conflict->incoming << ")";
        throw TraceFailed(diag.str());
      }
    }

    TraceLevel level;
    level.ell = ell;
    level.h = *h_next;
    level.target = target_at(ell);
    for (std::int64_t k : s_prev)
      if (contains(level.h, fam.generate(k))) level.s_sample.push_back(k);
    if (level.s_sample.empty())
      throw TraceFailed("sampled index set emptied at level " + std::to_string(ell));

    // A closed-form S_ell needs a family-level certificate that every k
    // satisfies the constraint, not just the sampled ones.
    const bool full_sample = level.s_sample.size() == s_prev.size() && s_prev.size() == sample.size();
    if (full_sample && fam.kind() == DistinguishedFamily::Kind::Constant) {
      level.s_closed_form = true;
      level.s_description = "all k >= 1 (constant family)";
    } else if (full_sample && fam.kind() == DistinguishedFamily::Kind::ZeroDrift &&
               level.h == FinMap({{fam.zero_pos(), 0}})) {
      level.s_closed_form = true;
      level.s_description = "all k >= 1 (every member pins 0 at the same position)";
    } else {
      std::ostringstream desc;
      desc << "sampled{" << level.s_sample.size() << " of [" << k_lo << "," << k_hi
           << "]} at-sample-size";
      level.s_description = desc.str();
    }

    // Nesting invariants, checked structurally on every build.
    for (const auto& [p, s] : h_prev.entries())
      if (level.h.get(p) != s)
        throw std::logic_error("h_{ell+1} failed to extend h_ell at " + finmap_brief(level.h));
    for (std::int64_t k : level.s_sample)
      if (std::find(s_prev.begin(), s_prev.end(), k) == s_prev.end())
        throw std::logic_error("S_{ell+1} escaped S_ell");

    h_prev = level.h;
    s_prev = level.s_sample;
    trace.levels.push_back(std::move(level));
  }
  return trace;
}

std::string to_string(HClass c) {
  switch (c) {
    case HClass::C1:
      return "C1";
    case HClass::C2:
      return "C2";
    case HClass::C3:
      return "C3";
    case HClass::C4:
      return "C4";
    case HClass::C5:
      return "C5";
  }
  return "?";
}

HInfinityObservation classify(const LemmaTrace& trace) {
  if (trace.levels.empty()) throw std::invalid_argument("classify: empty trace");
  HInfinityObservation obs;
  obs.truncated = trace.levels.back().h;
  obs.window = trace.levels.back().ell;

  if (obs.truncated.empty()) {
    // An empty constraint (full-shift cylinders all the way down) has a
    // bounded, indeed empty, domain.
    obs.domain_class = HClass::C1;
    obs.note = "empty domain at depth " + std::to_string(obs.window);
    return obs;
  }

  // Growth of the domain extents across the deepest levels.
  std::vector<std::int64_t> mins, maxs;
  for (const auto& level : trace.levels) {
    if (level.h.empty()) continue;
    mins.push_back(level.h.min_position());
    maxs.push_back(level.h.max_position());
  }
  auto grew = [](const std::vector<std::int64_t>& v, bool leftward) {
    const std::size_t n = v.size();
    if (n < 2) return false;
    const std::size_t lookback = std::min<std::size_t>(3, n - 1);
    for (std::size_t i = n - lookback; i < n; ++i) {
      if (leftward && v[i] < v[i - 1]) return true;
      if (!leftward && v[i] > v[i - 1]) return true;
    }
    return false;
  };
  const bool left_grows = grew(mins, true);
  const bool right_grows = grew(maxs, false);

  const FinMap& h = obs.truncated;
  bool gaps = false;
  for (std::int64_t p = h.min_position(); p <= h.max_position(); ++p)
    if (!h.get(p)) {
      gaps = true;
      break;
    }

  if (!left_grows && !right_grows)
    obs.domain_class = HClass::C1;
  else if (left_grows && right_grows)
    obs.domain_class = gaps ? HClass::C3 : HClass::C2;
  else if (left_grows)
    obs.domain_class = HClass::C4;
  else
    obs.domain_class = HClass::C5;

  obs.closed_form = trace.closed_form_pair &&
                    (obs.domain_class == HClass::C1 || obs.domain_class == HClass::C2);

  std::ostringstream note;
  note << "extent [" << h.min_position() << "," << h.max_position() << "] depth " << obs.window
       << (gaps ? " with gaps" : " gap-free")
       << (obs.closed_form ? "" : " (observed-at-truncation)");
  obs.note = note.str();
  return obs;
}

NiceReport nice_check(const DistinguishedFamily& fam, std::int64_t w, std::int64_t k_max) {
  if (k_max < 3) k_max = 3;
  NiceReport report;
  switch (fam.kind()) {
    case DistinguishedFamily::Kind::Constant: {
      report.verdict = NiceReport::Verdict::NiceWitness;
      report.witness = fam.base();
      report.reason = "constant family: every subsequence converges to the base point";
      for (std::int64_t k = 1; k <= k_max; ++k)
        if (!seq_equal(fam.generate(k), fam.base()))
          throw std::logic_error("constant family produced a differing member");
      return report;
    }
    case DistinguishedFamily::Kind::ZeroDrift: {
      if (!fam.drifting()) {
        report.verdict = NiceReport::Verdict::NiceWitness;
        report.witness = fam.generate(1);
        report.reason = "fixed zigzag member repeats: a constant subsequence converges";
        return report;
      }
      report.verdict = NiceReport::Verdict::NotNice;
      report.reason =
          "off-zero coordinates take value 2k+1 or 2k+2: they diverge at every fixed position";
      const std::int64_t probe = fam.zero_pos() + std::max<std::int64_t>(1, w);
      Symbol prev = fam.generate(1).at(probe);
      for (std::int64_t k = 2; k <= k_max; ++k) {
        const Symbol cur = fam.generate(k).at(probe);
        if (cur <= prev) throw std::logic_error("drifting family failed to grow at a fixed coordinate");
        prev = cur;
      }
      return report;
    }
    case DistinguishedFamily::Kind::NoImage: {
      report.verdict = NiceReport::Verdict::NotNice;
      report.reason = "x^k at any fixed coordinate j eventually equals 3k+1-j, which diverges";
      const std::int64_t probe = std::min<std::int64_t>(w, 0);
      Symbol prev = fam.generate(std::max<std::int64_t>(std::abs(probe) + 1, 1)).at(probe);
      for (std::int64_t k = std::abs(probe) + 2; k <= std::abs(probe) + k_max; ++k) {
        const Symbol cur = fam.generate(k).at(probe);
        if (cur <= prev) throw std::logic_error("ramp family failed to grow at a fixed coordinate");
        prev = cur;
      }
      return report;
    }
  }
  return report;
}

std::optional<BiSeq> exhibit_limit_preimage(const DistinguishedFamily& fam, const Morphism& psi,
                                            const LemmaTrace& trace,
                                            const HInfinityObservation& obs) {
  if (!obs.closed_form) return std::nullopt;
  std::optional<BiSeq> candidate;
  if (obs.domain_class == HClass::C2 && fam.kind() == DistinguishedFamily::Kind::Constant) {
    candidate = fam.base();
  } else if (obs.domain_class == HClass::C1 &&
             fam.kind() == DistinguishedFamily::Kind::ZeroDrift) {
    candidate = zigzag(fam.zero_pos());
    if (!contains(obs.truncated, *candidate)) return std::nullopt;
  }
  if (!candidate) return std::nullopt;
  const std::int64_t l = trace.levels.back().ell;
  if (eval_window(psi, *candidate, -l, l) != trace.limit) return std::nullopt;
  return candidate;
}

}  // namespace shiftlab
