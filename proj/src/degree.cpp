#include "shiftlab/degree.hpp"

#include <algorithm>
#include <sstream>

namespace shiftlab {

std::string to_string(DegreeVerdict v) {
  switch (v) {
    case DegreeVerdict::FiniteWithWitness:
      return "finite-with-witness";
    case DegreeVerdict::Growing:
      return "growing";
    case DegreeVerdict::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

std::size_t count_windowed(const WindowedRule& rule, const AlphabetSpec& alphabet, Symbol value,
                           std::int64_t symbol_bound) {
  const Word pool = alphabet.enumeration_pool(symbol_bound);
  const auto len = static_cast<std::size_t>(rule.window_length());
  double estimate = 1;
  for (std::size_t i = 0; i < len; ++i) estimate *= static_cast<double>(pool.size());
  if (estimate > 4e6) throw std::invalid_argument("window enumeration too large at this bound");

  std::size_t count = 0;
  Word w(len, pool.front());
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) w[i] = pool[idx[i]];
    if (rule.phi(w) == value) ++count;
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < pool.size()) break;
      idx[pos] = 0;
      if (pos == 0) return count;
    }
  }
}

// Words w_{-c} .. w_c with w_0 = c, entries in [0, symbol_bound], summing to
// `value`: compositions of value - c into 2c capped parts.
std::size_t count_sum_window(Symbol value, std::int64_t symbol_bound, std::int64_t domain_bound) {
  std::size_t total = 0;
  for (Symbol c = 0; c <= std::min({symbol_bound, domain_bound, value}); ++c) {
    const Symbol remainder = value - c;
    const std::int64_t parts = 2 * c;
    if (parts == 0) {
      if (remainder == 0) ++total;
      continue;
    }
    // dp[s] = ways to reach sum s with the parts placed so far
    std::vector<std::size_t> dp(static_cast<std::size_t>(remainder) + 1, 0);
    dp[0] = 1;
    for (std::int64_t p = 0; p < parts; ++p) {
      std::vector<std::size_t> next(dp.size(), 0);
      for (std::size_t s = 0; s < dp.size(); ++s) {
        if (dp[s] == 0) continue;
        for (Symbol v = 0; v <= symbol_bound && s + static_cast<std::size_t>(v) < next.size();
             ++v)
          next[s + static_cast<std::size_t>(v)] += dp[s];
      }
      dp = std::move(next);
    }
    total += dp[static_cast<std::size_t>(remainder)];
  }
  return total;
}

std::size_t count_two_point(Symbol value, std::int64_t symbol_bound, std::int64_t domain_bound) {
  std::size_t total = (value == 0) ? 1 : 0;  // the reach-0 cylinder {0 -> 0}
  std::size_t pairs = 0;
  for (Symbol a = 0; a <= std::min(value, symbol_bound); ++a) {
    const Symbol b = value - a;
    if (b >= 0 && b <= symbol_bound) ++pairs;
  }
  const std::int64_t reaches = std::min(domain_bound, symbol_bound);
  total += pairs * static_cast<std::size_t>(std::max<std::int64_t>(reaches, 0));
  return total;
}

}  // namespace

std::size_t attached_cylinder_count(const Morphism& psi, Symbol value,
                                    std::int64_t symbol_bound, std::int64_t domain_bound) {
  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    if (domain_bound < std::max(w->memory, w->anticipation))
      return 0;  // the rule window does not fit inside the domain bound
    return count_windowed(*w, psi.input_space.alphabet, value, symbol_bound);
  }
  if (const auto* b = std::get_if<BarrierRule>(&psi.rule)) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < b->cylinders.size(); ++i) {
      if (b->values[i] != value) continue;
      const FinMap& h = b->cylinders[i];
      if (!h.empty() && (h.min_position() < -domain_bound || h.max_position() > domain_bound))
        continue;
      bool ok = true;
      for (const auto& [p, s] : h.entries()) ok = ok && s <= symbol_bound;
      if (ok) ++count;
    }
    return count;
  }
  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow:
      return count_sum_window(value, symbol_bound, domain_bound);
    case DataRule::TwoPoint:
      return count_two_point(value, symbol_bound, domain_bound);
    case DataRule::ZeroLocator:
      return (value >= -domain_bound && value <= domain_bound) ? 1 : 0;
  }
  throw std::logic_error("unreachable");
}

DegreeReport degree_probe(const Morphism& psi, Symbol value,
                          std::span<const std::pair<std::int64_t, std::int64_t>> grid) {
  if (grid.empty()) throw std::invalid_argument("degree_probe needs a nonempty grid");
  DegreeReport report;
  report.value = value;
  for (const auto& [sb, db] : grid) {
    DegreeGridPoint point;
    point.symbol_bound = sb;
    point.domain_bound = db;
    point.count = attached_cylinder_count(psi, value, sb, db);
    report.points.push_back(point);
  }
  // Counts must be monotone along monotone grids.
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    const auto& a = report.points[i - 1];
    const auto& b = report.points[i];
    if (a.symbol_bound <= b.symbol_bound && a.domain_bound <= b.domain_bound &&
        a.count > b.count)
      throw std::logic_error("cylinder counts decreased along growing bounds");
  }

  const std::size_t first = report.points.front().count;
  const std::size_t last = report.points.back().count;
  const bool stabilized =
      report.points.size() >= 2 &&
      report.points[report.points.size() - 2].count == last;
  const bool strictly_growing = [&] {
    for (std::size_t i = 1; i < report.points.size(); ++i)
      if (report.points[i].count <= report.points[i - 1].count) return false;
    return report.points.size() >= 2;
  }();
  (void)first;

  if (const auto* w = std::get_if<WindowedRule>(&psi.rule)) {
    if (psi.input_space.alphabet.kind == AlphabetSpec::Kind::Finite) {
      report.verdict = DegreeVerdict::FiniteWithWitness;
      report.witness = "finitely many window words over a finite alphabet";
      return report;
    }
    if (w->name == "arre") {
      const auto expected = static_cast<std::size_t>(value / 2 + 1);
      const auto& tail = report.points.back();
      if (value >= 0 && tail.symbol_bound >= value && last == expected) {
        report.verdict = DegreeVerdict::FiniteWithWitness;
        report.witness =
            "u + 2v = " + std::to_string(value) + " has exactly " + std::to_string(expected) +
            " solutions over N";
        return report;
      }
    }
    report.verdict = DegreeVerdict::Inconclusive;
    return report;
  }

  if (std::holds_alternative<BarrierRule>(psi.rule)) {
    report.verdict = DegreeVerdict::Inconclusive;
    report.note = "explicit cylinder list: counts reflect the listed truncation only";
    return report;
  }

  switch (std::get<DataRule>(psi.rule)) {
    case DataRule::SumWindow:
      if (stabilized && report.points.back().symbol_bound >= value &&
          report.points.back().domain_bound >= value) {
        report.verdict = DegreeVerdict::FiniteWithWitness;
        report.witness = "every cylinder with this value has center symbol w_0 <= the value";
        report.note =
            "counts stop growing once both bounds pass the value; boundedness of w_0 caps the family";
      } else {
        report.verdict = DegreeVerdict::Inconclusive;
      }
      return report;
    case DataRule::TwoPoint:
      if (strictly_growing) {
        report.verdict = DegreeVerdict::Growing;
        report.witness = "one three-point cylinder family per reach m <= domain bound";
      } else {
        report.verdict = DegreeVerdict::Inconclusive;
      }
      return report;
    case DataRule::ZeroLocator:
      report.verdict = DegreeVerdict::FiniteWithWitness;
      report.witness = "a single cylinder pins the zero for each output value";
      return report;
  }
  return report;
}

AttachedCheckResult attached_check(const BarrierRule& barrier, const Morphism& psi,
                                   std::span<const BiSeq> samples) {
  AttachedCheckResult result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const BiSeq& x = samples[i];
    std::optional<std::size_t> hit;
    for (std::size_t c = 0; c < barrier.cylinders.size(); ++c)
      if (contains(barrier.cylinders[c], x)) {
        hit = c;
        break;
      }
    if (!hit) {
      result.uncovered.push_back(i);
      continue;
    }
    ++result.checked;
    const Word out = eval_window(psi, x, 0, 0);
    if (out[0] != barrier.values[*hit]) {
      result.mismatched.push_back(i);
      result.ok = false;
    }
  }
  return result;
}

bool refinement_check(const BarrierRule& finer, const BarrierRule& coarser) {
  for (const FinMap& h_fine : finer.cylinders) {
    bool covered = false;
    for (const FinMap& h_coarse : coarser.cylinders) {
      bool inside = true;
      for (const auto& [p, s] : h_coarse.entries()) {
        const auto v = h_fine.get(p);
        if (!v || *v != s) {
          inside = false;
          break;
        }
      }
      if (inside) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace shiftlab
