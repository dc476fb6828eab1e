#include "shiftlab/examples.hpp"

#include <sstream>

#include "shiftlab/textio.hpp"

namespace shiftlab {

namespace {

class CaseBuilder {
 public:
  explicit CaseBuilder(std::string id) { report_.id = std::move(id); }

  void check(const std::string& description, bool pass, std::string detail = "") {
    report_.checks.push_back({description, pass, std::move(detail)});
    report_.pass = report_.pass && pass;
  }

  CaseReport take() { return std::move(report_); }

 private:
  CaseReport report_;
};

// The ramp-spike family against the two-point rule: images converge to the
// all-ones point, which has no preimage at desk scale, and the family has
// no convergent subsequence.
CaseReport run_noimage() {
  CaseBuilder c("noimage");
  const Morphism psi = two_point_morphism();
  const DistinguishedFamily fam = DistinguishedFamily::no_image();

  bool windows_ok = true;
  for (std::int64_t k = 1; k <= 50 && windows_ok; ++k) {
    const Word w = eval_window(psi, fam.generate(k), -k, k);
    windows_ok = (w == Word(static_cast<std::size_t>(2 * k + 1), 1));
  }
  c.check("image windows are all ones on [-k,k] for k = 1..50", windows_ok);

  const BiSeq ones = constant_seq(1);
  bool converges = true;
  for (std::int64_t k = 1; k <= 12 && converges; ++k) {
    const auto image = eval_full(psi, fam.generate(k));
    const CantorDistance d = cantor_distance(*image, ones);
    converges = !d.zero && d.exponent >= k + 1;
  }
  c.check("distance from the image to the all-ones point shrinks below 2^-k", converges);

  const auto search = search_preimage_finite_support(psi, ones, 10, 20);
  c.check("preimage search for the all-ones point comes back empty (" + search.label + ")",
          !search.found.has_value(),
          "nodes explored: " + std::to_string(search.nodes_explored));

  const NiceReport nice = nice_check(fam, 5, 30);
  c.check("the family has no convergent subsequence", nice.verdict == NiceReport::Verdict::NotNice,
          nice.reason);
  return c.take();
}

// The window-sum rule: its canonical barrier, the refinement splitting the
// x_0 = 0 cylinder, and explicit coverage failure reporting.
CaseReport run_sum_window_barrier() {
  CaseBuilder c("sum-window-barrier");
  const Morphism psi = sum_window_morphism();
  // Cylinder counts blow up as (bound+1)^(2c); stay small.
  const std::int64_t bound = 2;

  const BarrierRule b0 = barrier_from_coordinate(psi, bound, bound);
  std::vector<FinMap> value0;
  for (std::size_t i = 0; i < b0.cylinders.size(); ++i)
    if (b0.values[i] == 0) value0.push_back(b0.cylinders[i]);
  c.check("the only value-0 cylinder is {0:0}",
          value0.size() == 1 && value0[0] == FinMap({{0, 0}}));

  // Splitting {0:0} by the symbol at position 1 refines the barrier and
  // keeps the 0-coordinate value 0 on every piece.
  BarrierRule b1;
  for (std::size_t i = 0; i < b0.cylinders.size(); ++i) {
    if (b0.values[i] == 0) continue;
    b1.cylinders.push_back(b0.cylinders[i]);
    b1.values.push_back(b0.values[i]);
  }
  std::vector<BiSeq> split_samples;
  for (Symbol v = 0; v <= bound; ++v) {
    b1.cylinders.push_back(FinMap({{0, 0}, {1, v}}));
    b1.values.push_back(0);
    split_samples.push_back(BiSeq(TailSpec::constant(2), 0, {0, v}, TailSpec::constant(3)));
  }
  c.check("the split barrier refines the original", refinement_check(b1, b0));
  c.check("the original does not refine the split", !refinement_check(b0, b1));

  const auto attached = attached_check(b1, psi, split_samples);
  c.check("0-coordinate value is 0 on every split cylinder",
          attached.ok && attached.checked == split_samples.size());

  const BiSeq escaper(TailSpec::constant(0), 0, {bound + 5}, TailSpec::constant(0));
  const BiSeq probes[] = {escaper};
  const auto gaps = coverage_gaps(b0, probes);
  c.check("a point beyond the bounds is reported as uncovered", gaps.size() == 1);

  const auto disjoint = check_disjoint(b0, psi.input_space);
  c.check("the truncated barrier is pairwise disjoint", disjoint.disjoint,
          std::to_string(disjoint.checked_pairs) + " pairs");
  return c.take();
}

// The two-point rule is attached to the three-point cylinder barrier and no
// finite list per value can cover it.
CaseReport run_twopoint_degree() {
  CaseBuilder c("twopoint-degree");
  const Morphism psi = two_point_morphism();

  // The reach m is the symbol at coordinate 0, so the symbol bound must
  // cover every probed reach.
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t d = 1; d <= 12; ++d) grid.emplace_back(13, d);
  const DegreeReport report = degree_probe(psi, 1, grid);
  bool counts_ok = true;
  for (std::size_t i = 0; i < grid.size(); ++i)
    counts_ok = counts_ok && report.points[i].count == 2 * static_cast<std::size_t>(grid[i].second);
  c.check("value-1 cylinder counts are 2 per reach m <= domain bound", counts_ok);
  c.check("the probe reports growth", report.verdict == DegreeVerdict::Growing, report.witness);

  const BarrierRule b = barrier_from_coordinate(psi, 5, 5);
  std::vector<BiSeq> samples;
  for (Symbol m = 0; m <= 4; ++m)
    samples.push_back(BiSeq(TailSpec::constant(1), 0, {m, 2, 3, 1 + m}, TailSpec::constant(0)));
  const auto attached = attached_check(b, psi, samples);
  c.check("three-point cylinders carry the 0-coordinate value", attached.ok,
          std::to_string(attached.checked) + " samples inside the truncation");
  return c.take();
}

// The zero-locator on injective sequences: single-cylinder fibers, a
// discrete image, and the cylinder trace landing in class C1.
CaseReport run_exam2() {
  CaseBuilder c("exam2");
  const Morphism psi = zero_locator_morphism();
  const std::int64_t n = 3;

  const BiSeq x1 = zigzag(n);
  const BiSeq x2 = DistinguishedFamily::zero_drift(n).generate(7);
  const auto y1 = eval_full(psi, x1);
  const auto y2 = eval_full(psi, x2);
  bool closed_form = true;
  for (std::int64_t m = -6; m <= 6; ++m) closed_form = closed_form && y1->at(m) == n - m;
  c.check("the image of a zero-at-n member is m -> n-m", closed_form);
  c.check("distinct members with the same zero position share one image",
          !seq_equal(x1, x2) && seq_equal(*y1, *y2));

  const auto yn = eval_full(psi, zigzag(0));
  const auto ym = eval_full(psi, zigzag(5));
  const CantorDistance d = cantor_distance(*yn, *ym);
  c.check("images with different zero positions differ already at coordinate 0",
          !d.zero && d.exponent == 0);

  const DistinguishedFamily fam = DistinguishedFamily::zero_drift(n);
  const LemmaTrace trace = build_trace(fam, psi, closed_form_source(psi), 4);
  bool pinned = true;
  for (const auto& level : trace.levels)
    pinned = pinned && level.h == FinMap({{n, 0}}) && level.s_closed_form;
  c.check("every trace level pins exactly {n:0} with a closed-form index set", pinned);

  const HInfinityObservation obs = classify(trace);
  c.check("the truncated domain classifies as C1 in closed form",
          obs.domain_class == HClass::C1 && obs.closed_form, obs.note);

  const auto preimage = exhibit_limit_preimage(fam, psi, trace, obs);
  c.check("the limit point has an exhibited preimage",
          preimage.has_value() &&
              eval_window(psi, *preimage, -4, 4) == trace.limit);

  const NiceReport nice = nice_check(fam, 4, 24);
  c.check("the drifting family itself is not nice",
          nice.verdict == NiceReport::Verdict::NotNice, nice.reason);
  return c.take();
}

// Core behaviour of the u + 2v code: solution-set laws, stabilization,
// inversion, and the barrier h^y.
CaseReport run_arre_basic() {
  CaseBuilder c("arre-basic");
  const Morphism psi = arre_morphism();

  const BiSeq x(TailSpec::constant(0), 0, {3, 0, 5, 1}, TailSpec::constant(0));
  const auto y = eval_full(psi, x);
  const auto inverted = arre::invert(*y, 32);
  c.check("inversion round-trips a finite-support point",
          inverted.status == arre::InvertStatus::Ok && seq_equal(*inverted.preimage, x),
          inverted.detail);

  const auto r = arre::compute_r(*y, 32);
  c.check("a stabilization index exists", r.has_value(),
          r ? "r = " + std::to_string(*r) : "");

  bool bounds_ok = true;
  for (std::int64_t n = 1; n <= 6 && bounds_ok; ++n) {
    const auto s = arre::solve_chain(y->restrict_to(-n, n));
    const auto cap = static_cast<std::size_t>(y->at(0) / (std::int64_t{1} << n) + 1);
    bounds_ok = !s.words.empty() && s.words.size() <= cap;
  }
  c.check("solution-set sizes respect 1 <= #S_N <= floor(y_0/2^N)+1", bounds_ok);

  if (r) {
    const FinMap hy = arre::barrier_h_y(*y, 32);
    bool dom_ok = hy.size() == static_cast<std::size_t>(2 * *r + 1);
    for (std::int64_t i = -*r; i <= *r; ++i) dom_ok = dom_ok && hy.get(i) == y->at(i);
    c.check("h^y reads y off the interval [-r, r]", dom_ok, format_finmap(hy));

    // Vary the preimage outside [-r, r+1] and confirm both r and the
    // 0-coordinate of the inverse stay put on C_Y(h^y).
    bool stable = true;
    for (Symbol extra = 1; extra <= 3 && stable; ++extra) {
      BiSeq x2(TailSpec::constant(0), *r + 2, {extra, 2 * extra}, TailSpec::constant(0));
      Word merged;
      for (std::int64_t p = -*r - 1; p <= *r + 3; ++p)
        merged.push_back(p <= *r + 1 ? x.at(p) : x2.at(p));
      const BiSeq xz(TailSpec::constant(0), -*r - 1, merged, TailSpec::constant(0));
      const auto z = eval_full(psi, xz);
      stable = contains(hy, *z) && arre::compute_r(*z, 32) == r &&
               arre::invert(*z, 32).preimage->at(0) == x.at(0);
    }
    c.check("r(z) = r(y) and the inverse 0-coordinate is constant on C_Y(h^y)", stable);
  }

  const BiSeq ones = constant_seq(1);
  c.check("the all-ones point is recognized as outside the image",
          arre::invert(ones, 32).status == arre::InvertStatus::NotInImage);

  const auto witness = arre::inverse_degree_witness(8);
  bool growing = witness.counts_per_bound.size() == 8;
  for (std::size_t i = 0; growing && i < witness.counts_per_bound.size(); ++i)
    growing = witness.counts_per_bound[i] == i + 1;
  c.check("one fresh inverse-degree witness appears per probed position",
          growing && witness.all_verified && witness.image_family_ok);

  std::vector<std::pair<std::int64_t, std::int64_t>> grid{{8, 1}, {16, 1}, {32, 1}};
  const DegreeReport probe = degree_probe(psi, 9, grid);
  c.check("the forward code has floor(9/2)+1 = 5 value-9 cylinders",
          probe.points.back().count == 5 &&
              probe.verdict == DegreeVerdict::FiniteWithWitness,
          probe.witness);
  return c.take();
}

// The half-width-1 ambiguity: two points share the central image block
// [16, 8, 4] yet differ at coordinate 0.
CaseReport run_arre_ambiguity() {
  CaseBuilder c("arre-ambiguity");
  const Morphism psi = arre_morphism();

  auto power_ramp = [](std::int64_t l) {
    Word center;
    for (std::int64_t k = -l; k <= l + 1; ++k)
      center.push_back(std::int64_t{1} << (l + 1 - k));
    return BiSeq(TailSpec::constant(0), -l, std::move(center), TailSpec::constant(0));
  };
  auto sparse_powers = [](std::int64_t l) {
    FinMap support;
    for (std::int64_t t = 0; t <= l; ++t)
      support.set(l - 2 * t + 1, std::int64_t{1} << (2 * t + 1));
    Word center;
    for (std::int64_t k = -l - 1; k <= l + 1; ++k) {
      const auto v = support.get(k);
      center.push_back(v ? *v : 0);
    }
    return BiSeq(TailSpec::constant(0), -l - 1, std::move(center), TailSpec::constant(0));
  };

  for (std::int64_t l = 1; l <= 3; ++l) {
    const BiSeq x = power_ramp(l);
    const BiSeq xp = sparse_powers(l);
    const Word wy = eval_window(psi, x, -l, l);
    const Word wz = eval_window(psi, xp, -l, l);
    std::ostringstream detail;
    detail << "blocks " << format_word_bracketed(wy) << " vs " << format_word_bracketed(wz);
    c.check("half-width " + std::to_string(l) + ": central blocks agree, coordinate 0 differs",
            wy == wz && x.at(0) != xp.at(0), detail.str());
    if (l == 1)
      c.check("the half-width-1 block is exactly [16,8,4]", wy == Word{16, 8, 4},
              format_word_bracketed(wy));
  }
  return c.take();
}

}  // namespace

const std::vector<ExampleCase>& example_registry() {
  static const std::vector<ExampleCase> cases = {
      {"noimage", "ramp spikes under the two-point rule: convergent images, escaping family",
       run_noimage},
      {"sum-window-barrier", "canonical barrier of the window-sum rule and its refinement",
       run_sum_window_barrier},
      {"twopoint-degree", "growing cylinder counts for the two-point rule", run_twopoint_degree},
      {"exam2", "zero-locator on injective sequences: discrete image, C1 trace", run_exam2},
      {"arre-basic", "the u+2v code: chains, stabilization, inversion, h^y", run_arre_basic},
      {"arre-ambiguity", "shared central image blocks with differing preimages", run_arre_ambiguity},
  };
  return cases;
}

std::vector<std::string> example_ids() {
  std::vector<std::string> ids;
  for (const auto& e : example_registry()) ids.push_back(e.id);
  return ids;
}

CaseReport run_example(const std::string& id) {
  for (const auto& e : example_registry())
    if (e.id == id) return e.run();
  throw std::invalid_argument("unknown example id: " + id);
}

}  // namespace shiftlab
