#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <random>

#include "shiftlab/arre.hpp"
#include "shiftlab/degree.hpp"
#include "shiftlab/examples.hpp"
#include "shiftlab/lemma.hpp"
#include "shiftlab/textio.hpp"

using namespace shiftlab;
using nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  std::uint32_t seed = 12345;
};

void emit(const Options& opt, const std::string& plain, const json& record) {
  if (opt.json_output)
    std::cout << record.dump() << "\n";
  else
    std::cout << plain << "\n";
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  const Word w = parse_word(text);
  if (w.size() != 2 || w[0] > w[1])
    throw CLI::ValidationError("--window", "expected a,b with a <= b");
  return {w[0], w[1]};
}

std::vector<std::pair<std::int64_t, std::int64_t>> parse_grid(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    const auto colon = current.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("--grid", "expected symbol:domain pairs");
    grid.emplace_back(std::stoll(current.substr(0, colon)),
                      std::stoll(current.substr(colon + 1)));
    current.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");
  return grid;
}

BiSeq random_member(const ShiftSpaceSpec& space, std::mt19937& rng) {
  if (space.kind == ShiftSpaceSpec::Kind::InjectiveWithZero) {
    const auto zero = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    Word center;
    Symbol odd = 1, even = 2;
    const auto flank = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    for (std::size_t i = 0; i < flank; ++i, odd += 2) center.push_back(odd);
    center.push_back(0);
    for (std::size_t i = 0; i < flank; ++i, even += 2) center.push_back(even);
    return BiSeq(TailSpec::arithmetic(odd, 2), zero - static_cast<std::int64_t>(flank),
                 std::move(center), TailSpec::arithmetic(even, 2));
  }
  std::uniform_int_distribution<Symbol> sym(0, 6);
  const auto len = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
  Word center;
  for (std::size_t i = 0; i < len; ++i) center.push_back(sym(rng));
  auto tail = [&]() -> TailSpec {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0:
        return TailSpec::constant(sym(rng));
      case 1: {
        Word p{sym(rng), sym(rng)};
        return TailSpec::periodic(p);
      }
      default:
        return TailSpec::arithmetic(sym(rng), 1 + sym(rng) % 3);
    }
  };
  return BiSeq(tail(), std::uniform_int_distribution<std::int64_t>(-4, 4)(rng),
               std::move(center), tail());
}

json finmap_json(const FinMap& h) {
  json entries = json::array();
  for (const auto& [p, s] : h.entries()) entries.push_back({{"position", p}, {"symbol", s}});
  return entries;
}

int run(int argc, char** argv) {
  Options opt;
  CLI::App app{"shiftlab: shift spaces over countable alphabets, extended sliding block codes, "
               "finite-degree analysis and chain inversion"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json_output, "one structured record per output line");
  app.add_option("--seed", opt.seed, "seed for randomized sampling subcommands");

  int exit_code = 0;

  // -------------------------------------------------------------- seq
  auto* seq = app.add_subcommand("seq", "sequence operations");
  seq->require_subcommand(1);
  {
    auto* eval = seq->add_subcommand("eval", "symbol at a coordinate");
    auto seq_text = std::make_shared<std::string>();
    auto at = std::make_shared<std::int64_t>(0);
    eval->add_option("--seq", *seq_text, "sequence")->required();
    eval->add_option("--at", *at, "coordinate")->required();
    eval->callback([&opt, seq_text, at] {
      const Symbol s = parse_biseq(*seq_text).at(*at);
      emit(opt, std::to_string(s), {{"cmd", "seq.eval"}, {"at", *at}, {"symbol", s}});
    });

    auto* dist = seq->add_subcommand("dist", "Cantor distance of two sequences");
    auto a_text = std::make_shared<std::string>();
    auto b_text = std::make_shared<std::string>();
    dist->add_option("--a", *a_text, "first sequence")->required();
    dist->add_option("--b", *b_text, "second sequence")->required();
    dist->callback([&opt, a_text, b_text] {
      const auto d = cantor_distance(parse_biseq(*a_text), parse_biseq(*b_text));
      const std::string plain = d.zero ? "0" : "2^-" + std::to_string(d.exponent);
      emit(opt, plain,
           {{"cmd", "seq.dist"}, {"zero", d.zero}, {"exponent", d.zero ? 0 : d.exponent}});
    });

    auto* shift = seq->add_subcommand("shift", "shift a sequence");
    auto s_text = std::make_shared<std::string>();
    auto by = std::make_shared<std::int64_t>(1);
    shift->add_option("--seq", *s_text, "sequence")->required();
    shift->add_option("--by", *by, "shift amount (y_n = x_{n+k})");
    shift->callback([&opt, s_text, by] {
      const std::string out = format_biseq(parse_biseq(*s_text).shifted(*by));
      emit(opt, out, {{"cmd", "seq.shift"}, {"by", *by}, {"seq", out}});
    });
  }

  // -------------------------------------------------------------- morph
  auto* morph = app.add_subcommand("morph", "morphism evaluation and checks");
  morph->require_subcommand(1);
  {
    auto* apply = morph->add_subcommand("apply", "evaluate a rule on a window");
    auto rule = std::make_shared<std::string>();
    auto seq_text = std::make_shared<std::string>();
    auto window = std::make_shared<std::string>();
    apply->add_option("--rule", *rule, "rule name")->required();
    apply->add_option("--seq", *seq_text, "input sequence")->required();
    apply->add_option("--window", *window, "a,b")->required();
    apply->callback([&opt, rule, seq_text, window] {
      const auto [a, b] = parse_window(*window);
      const Word out = eval_window(parse_morphism(*rule), parse_biseq(*seq_text), a, b);
      emit(opt, format_word(out),
           {{"cmd", "morph.apply"}, {"rule", *rule}, {"window", {a, b}}, {"word", out}});
    });

    auto* commute =
        morph->add_subcommand("commute-check", "compare both sides of the shift square");
    auto c_rule = std::make_shared<std::string>();
    auto c_seq = std::make_shared<std::string>();
    auto c_k = std::make_shared<std::int64_t>(1);
    auto c_window = std::make_shared<std::string>("-10,10");
    auto c_trials = std::make_shared<std::int64_t>(0);
    commute->add_option("--rule", *c_rule, "rule name")->required();
    commute->add_option("--seq", *c_seq, "input sequence (omit with --trials)");
    commute->add_option("--k", *c_k, "shift amount");
    commute->add_option("--window", *c_window, "a,b");
    commute->add_option("--trials", *c_trials, "random (x, k, window) triples instead");
    commute->callback([&opt, &exit_code, c_rule, c_seq, c_k, c_window, c_trials] {
      const Morphism psi = parse_morphism(*c_rule);
      std::size_t failures = 0;
      std::size_t checked = 0;
      if (*c_trials > 0) {
        std::mt19937 rng(opt.seed);
        for (std::int64_t t = 0; t < *c_trials; ++t) {
          const BiSeq x = random_member(psi.input_space, rng);
          const auto k = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
          const auto a = std::uniform_int_distribution<std::int64_t>(-20, 10)(rng);
          const auto b = a + std::uniform_int_distribution<std::int64_t>(0, 10)(rng);
          ++checked;
          if (!check_shift_commuting(psi, x, k, a, b)) ++failures;
        }
      } else {
        if (c_seq->empty()) throw CLI::ValidationError("--seq", "required without --trials");
        const auto [a, b] = parse_window(*c_window);
        ++checked;
        if (!check_shift_commuting(psi, parse_biseq(*c_seq), *c_k, a, b)) ++failures;
      }
      const bool ok = failures == 0;
      emit(opt, ok ? "COMMUTES" : "MISMATCH",
           {{"cmd", "morph.commute-check"}, {"checked", checked}, {"failures", failures}});
      if (!ok) exit_code = 1;
    });

    auto* widen = morph->add_subcommand("widen", "evaluate through a widened window");
    auto w_rule = std::make_shared<std::string>();
    auto w_m = std::make_shared<int>(0);
    auto w_n = std::make_shared<int>(0);
    auto w_seq = std::make_shared<std::string>();
    auto w_window = std::make_shared<std::string>();
    widen->add_option("--rule", *w_rule, "windowed rule name")->required();
    widen->add_option("--memory", *w_m, "widened memory")->required();
    widen->add_option("--anticipation", *w_n, "widened anticipation")->required();
    widen->add_option("--seq", *w_seq, "input sequence")->required();
    widen->add_option("--window", *w_window, "a,b")->required();
    widen->callback([&opt, &exit_code, w_rule, w_m, w_n, w_seq, w_window] {
      const Morphism psi = parse_morphism(*w_rule);
      const auto* rule = std::get_if<WindowedRule>(&psi.rule);
      if (!rule) throw CLI::ValidationError("--rule", "widen needs a windowed rule");
      const Morphism wide =
          windowed_morphism(widen_rule(*rule, *w_m, *w_n), psi.input_space, psi.output_alphabet);
      const auto [a, b] = parse_window(*w_window);
      const BiSeq x = parse_biseq(*w_seq);
      const Word narrow_out = eval_window(psi, x, a, b);
      const Word wide_out = eval_window(wide, x, a, b);
      const bool agree = narrow_out == wide_out;
      emit(opt, format_word(wide_out) + (agree ? " AGREE" : " DISAGREE"),
           {{"cmd", "morph.widen"}, {"word", wide_out}, {"agree", agree}});
      if (!agree) exit_code = 1;
    });
  }

  // -------------------------------------------------------------- degree
  auto* degree = app.add_subcommand("degree", "finite-degree analysis");
  degree->require_subcommand(1);
  {
    auto* probe = degree->add_subcommand("probe", "count attached cylinders per value");
    auto d_rule = std::make_shared<std::string>();
    auto d_value = std::make_shared<Symbol>(0);
    auto d_grid = std::make_shared<std::string>("8:4,16:8");
    probe->add_option("--rule", *d_rule, "rule name")->required();
    probe->add_option("--value", *d_value, "output value")->required();
    probe->add_option("--grid", *d_grid, "symbol:domain bound pairs");
    probe->callback([&opt, d_rule, d_value, d_grid] {
      const auto grid = parse_grid(*d_grid);
      const DegreeReport report = degree_probe(parse_morphism(*d_rule), *d_value, grid);
      for (const auto& point : report.points) {
        std::ostringstream line;
        line << "ℓ=" << report.value << " bound=(" << point.symbol_bound << ","
             << point.domain_bound << ") count=" << point.count
             << " verdict=" << to_string(report.verdict);
        emit(opt, line.str(),
             {{"cmd", "degree.probe"},
              {"value", report.value},
              {"symbol_bound", point.symbol_bound},
              {"domain_bound", point.domain_bound},
              {"count", point.count},
              {"verdict", to_string(report.verdict)}});
      }
      if (!report.witness.empty() && !opt.json_output)
        std::cout << "witness: " << report.witness << "\n";
      if (!report.note.empty() && !opt.json_output) std::cout << "note: " << report.note << "\n";
    });
  }

  // -------------------------------------------------------------- lemma
  auto* lemma = app.add_subcommand("lemma", "cylinder-trace machinery");
  lemma->require_subcommand(1);
  {
    auto fam_text = std::make_shared<std::string>();
    auto l_rule = std::make_shared<std::string>();
    auto l_max = std::make_shared<std::int64_t>(4);

    auto* trace_cmd = lemma->add_subcommand("trace", "build the cylinder trace");
    trace_cmd->add_option("--family", *fam_text, "family name")->required();
    trace_cmd->add_option("--rule", *l_rule, "rule name")->required();
    trace_cmd->add_option("--lmax", *l_max, "trace depth");
    trace_cmd->callback([&opt, fam_text, l_rule, l_max] {
      const Morphism psi = parse_morphism(*l_rule);
      const LemmaTrace trace =
          build_trace(parse_family(*fam_text), psi, closed_form_source(psi), *l_max);
      for (const auto& level : trace.levels) {
        std::ostringstream line;
        line << "ell=" << level.ell << " h=" << format_finmap(level.h)
             << " S=" << level.s_description << " y=" << format_word_bracketed(level.target);
        emit(opt, line.str(),
             {{"cmd", "lemma.trace"},
              {"ell", level.ell},
              {"h", finmap_json(level.h)},
              {"s", level.s_description},
              {"s_closed_form", level.s_closed_form},
              {"target", level.target}});
      }
    });

    auto* classify_cmd = lemma->add_subcommand("classify", "classify the truncated domain");
    classify_cmd->add_option("--family", *fam_text, "family name")->required();
    classify_cmd->add_option("--rule", *l_rule, "rule name")->required();
    classify_cmd->add_option("--lmax", *l_max, "trace depth");
    classify_cmd->callback([&opt, fam_text, l_rule, l_max] {
      const Morphism psi = parse_morphism(*l_rule);
      const LemmaTrace trace =
          build_trace(parse_family(*fam_text), psi, closed_form_source(psi), *l_max);
      const auto obs = classify(trace);
      std::ostringstream line;
      line << "class=" << to_string(obs.domain_class)
           << " tag=" << (obs.closed_form ? "closed-form" : "observed-at-truncation")
           << " h=" << format_finmap(obs.truncated) << " note=" << obs.note;
      emit(opt, line.str(),
           {{"cmd", "lemma.classify"},
            {"class", to_string(obs.domain_class)},
            {"closed_form", obs.closed_form},
            {"h", finmap_json(obs.truncated)},
            {"note", obs.note}});
    });

    auto* nice_cmd = lemma->add_subcommand("nice", "convergent-subsequence check");
    auto n_window = std::make_shared<std::int64_t>(5);
    auto n_kmax = std::make_shared<std::int64_t>(30);
    nice_cmd->add_option("--family", *fam_text, "family name")->required();
    nice_cmd->add_option("--window", *n_window, "witness window half-width");
    nice_cmd->add_option("--kmax", *n_kmax, "sample depth");
    nice_cmd->callback([&opt, fam_text, n_window, n_kmax] {
      const NiceReport report = nice_check(parse_family(*fam_text), *n_window, *n_kmax);
      std::string verdict;
      switch (report.verdict) {
        case NiceReport::Verdict::NiceWitness:
          verdict = "nice-witness";
          break;
        case NiceReport::Verdict::NotNice:
          verdict = "not-nice";
          break;
        case NiceReport::Verdict::Inconclusive:
          verdict = "inconclusive";
          break;
      }
      std::ostringstream line;
      line << verdict;
      if (report.witness) line << " witness=" << format_biseq(*report.witness);
      line << " reason=" << report.reason;
      emit(opt, line.str(),
           {{"cmd", "lemma.nice"},
            {"verdict", verdict},
            {"witness", report.witness ? format_biseq(*report.witness) : ""},
            {"reason", report.reason}});
    });
  }

  // -------------------------------------------------------------- arre
  auto* arre_cmd = app.add_subcommand("arre", "chain solving and inversion for u + 2v");
  arre_cmd->require_subcommand(1);
  {
    auto* solve = arre_cmd->add_subcommand("solve", "solution set of a window chain");
    auto window_text = std::make_shared<std::string>();
    solve->add_option("--window", *window_text, "y_{-N} .. y_N, odd length >= 3")->required();
    solve->callback([&opt, window_text] {
      const auto set = arre::solve_chain(parse_word(*window_text));
      for (const Word& w : set.words)
        emit(opt, format_word_bracketed(w), {{"cmd", "arre.solve"}, {"word", w}});
      if (!opt.json_output) std::cout << "count=" << set.words.size() << "\n";
    });

    auto y_text = std::make_shared<std::string>();
    auto nmax = std::make_shared<std::int64_t>(default_nmax());

    auto* r_cmd = arre_cmd->add_subcommand("r", "stabilization index r(y)");
    r_cmd->add_option("--seq", *y_text, "image-side sequence")->required();
    r_cmd->add_option("--nmax", *nmax, "half-width bound");
    r_cmd->callback([&opt, y_text, nmax] {
      const auto r = arre::compute_r(parse_biseq(*y_text), *nmax);
      emit(opt, r ? std::to_string(*r) : "NOT-FOUND",
           {{"cmd", "arre.r"}, {"found", r.has_value()}, {"r", r ? *r : 0}});
    });

    auto* invert_cmd = arre_cmd->add_subcommand("invert", "reconstruct the preimage");
    invert_cmd->add_option("--seq", *y_text, "image-side sequence")->required();
    invert_cmd->add_option("--nmax", *nmax, "half-width bound");
    invert_cmd->callback([&opt, y_text, nmax] {
      const auto result = arre::invert(parse_biseq(*y_text), *nmax);
      std::string plain;
      std::string status;
      switch (result.status) {
        case arre::InvertStatus::Ok:
          plain = format_biseq(*result.preimage);
          status = "ok";
          break;
        case arre::InvertStatus::NotInImage:
          plain = "NOT-IN-IMAGE";
          status = "not-in-image";
          break;
        case arre::InvertStatus::Inconclusive:
          plain = "INCONCLUSIVE";
          status = "inconclusive";
          break;
      }
      emit(opt, plain,
           {{"cmd", "arre.invert"},
            {"status", status},
            {"preimage", result.preimage ? format_biseq(*result.preimage) : ""},
            {"detail", result.detail}});
    });

    auto* barrier_cmd = arre_cmd->add_subcommand("barrier", "the cylinder datum h^y");
    barrier_cmd->add_option("--seq", *y_text, "image-side sequence")->required();
    barrier_cmd->add_option("--nmax", *nmax, "half-width bound");
    barrier_cmd->callback([&opt, y_text, nmax] {
      const FinMap h = arre::barrier_h_y(parse_biseq(*y_text), *nmax);
      emit(opt, format_finmap(h), {{"cmd", "arre.barrier"}, {"h", finmap_json(h)}});
    });

    auto* witness_cmd = arre_cmd->add_subcommand("witness", "inverse-degree growth witnesses");
    auto bound = std::make_shared<std::int64_t>(8);
    witness_cmd->add_option("--bound", *bound, "probe positions 1..bound");
    witness_cmd->callback([&opt, &exit_code, bound] {
      const auto report = arre::inverse_degree_witness(*bound);
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& row = report.rows[i];
        std::ostringstream line;
        line << "position=" << row.position << " in-image=" << (row.in_image ? "yes" : "no")
             << " inverse-zero-at-0=" << (row.preimage_zero_at_0 ? "yes" : "no")
             << " witnesses<=bound=" << report.counts_per_bound[i];
        emit(opt, line.str(),
             {{"cmd", "arre.witness"},
              {"position", row.position},
              {"in_image", row.in_image},
              {"inverse_zero_at_0", row.preimage_zero_at_0},
              {"count", report.counts_per_bound[i]}});
      }
      if (!report.all_verified || !report.image_family_ok) exit_code = 1;
    });
  }

  // -------------------------------------------------------------- lang
  auto* lang = app.add_subcommand("lang", "language of a shift space");
  lang->require_subcommand(1);
  {
    auto space_text = std::make_shared<std::string>();
    auto bound = std::make_shared<std::int64_t>(8);

    auto* blocks = lang->add_subcommand("blocks", "allowed blocks of a length");
    auto n = std::make_shared<std::int64_t>(2);
    blocks->add_option("--space", *space_text, "space spec")->required();
    blocks->add_option("--n", *n, "block length");
    blocks->add_option("--bound", *bound, "symbol bound for N-alphabets");
    blocks->callback([&opt, space_text, n, bound] {
      for (const Word& w : allowed_blocks(parse_space(*space_text), *n, *bound))
        emit(opt, format_word_bracketed(w), {{"cmd", "lang.blocks"}, {"word", w}});
    });

    auto* followers = lang->add_subcommand("followers", "follower/predecessor set of a symbol");
    auto symbol = std::make_shared<Symbol>(0);
    auto side = std::make_shared<std::string>("right");
    followers->add_option("--space", *space_text, "space spec")->required();
    followers->add_option("--symbol", *symbol, "symbol")->required();
    followers->add_option("--bound", *bound, "symbol bound");
    followers->add_option("--side", *side, "right|left");
    followers->callback([&opt, space_text, symbol, bound, side] {
      const auto space = parse_space(*space_text);
      const FollowerResult r = (*side == "left") ? predecessor_set(space, *symbol, *bound)
                                                 : follower_set(space, *symbol, *bound);
      Word listed(r.symbols.begin(), r.symbols.end());
      std::ostringstream line;
      line << "{" << format_word(listed, ',') << "} exhaustive=" << (r.exhaustive ? "yes" : "no");
      if (!r.closed_form.empty()) line << " closed-form=" << r.closed_form;
      emit(opt, line.str(),
           {{"cmd", "lang.followers"},
            {"symbols", listed},
            {"exhaustive", r.exhaustive},
            {"closed_form", r.closed_form}});
    });

    auto* finiteness = lang->add_subcommand("finiteness", "right/left-finiteness probe");
    auto side2 = std::make_shared<std::string>("right");
    finiteness->add_option("--space", *space_text, "space spec")->required();
    finiteness->add_option("--side", *side2, "right|left|bilateral");
    finiteness->add_option("--bound", *bound, "symbol bound");
    finiteness->callback([&opt, space_text, side2, bound] {
      const Side side_value = (*side2 == "left")        ? Side::Left
                              : (*side2 == "bilateral") ? Side::Bilateral
                                                        : Side::Right;
      const auto report = finiteness_probe(parse_space(*space_text), side_value, *bound);
      std::string verdict;
      switch (report.verdict) {
        case FinitenessVerdict::Finite:
          verdict = "finite";
          break;
        case FinitenessVerdict::Infinite:
          verdict = "infinite";
          break;
        case FinitenessVerdict::InconclusiveAtBound:
          verdict = "inconclusive-at-bound";
          break;
      }
      for (const auto& row : report.rows) {
        std::ostringstream line;
        line << "symbol=" << row.symbol << " count@bound=" << row.count_at_bound
             << " count@2bound=" << row.count_at_double_bound
             << " exhaustive=" << (row.exhaustive ? "yes" : "no");
        emit(opt, line.str(),
             {{"cmd", "lang.finiteness"},
              {"symbol", row.symbol},
              {"count_at_bound", row.count_at_bound},
              {"count_at_double_bound", row.count_at_double_bound},
              {"exhaustive", row.exhaustive}});
      }
      emit(opt, "verdict=" + verdict + " (" + report.explanation + ")",
           {{"cmd", "lang.finiteness"}, {"verdict", verdict}, {"explanation", report.explanation}});
    });
  }

  // -------------------------------------------------------------- examples
  auto* examples = app.add_subcommand("examples", "runnable worked constructions");
  examples->require_subcommand(1);
  {
    auto* list = examples->add_subcommand("list", "list example ids");
    list->callback([&opt] {
      for (const auto& e : example_registry())
        emit(opt, e.id + "  " + e.summary,
             {{"cmd", "examples.list"}, {"id", e.id}, {"summary", e.summary}});
    });

    auto* run_cmd = examples->add_subcommand("run", "run one example or all");
    auto id = std::make_shared<std::string>();
    run_cmd->add_option("id", *id, "example id or 'all'")->required();
    run_cmd->callback([&opt, &exit_code, id] {
      std::vector<std::string> ids;
      if (*id == "all")
        ids = example_ids();
      else
        ids.push_back(*id);
      for (const std::string& one : ids) {
        const CaseReport report = run_example(one);
        for (const auto& check : report.checks) {
          const std::string status = check.pass ? "[PASS]" : "[FAIL]";
          std::string plain = status + " " + report.id + ": " + check.description;
          if (!check.detail.empty()) plain += " (" + check.detail + ")";
          emit(opt, plain,
               {{"cmd", "examples.run"},
                {"id", report.id},
                {"check", check.description},
                {"pass", check.pass},
                {"detail", check.detail}});
        }
        if (!report.pass) exit_code = 1;
      }
    });
  }

  // Let --json / --seed appear anywhere on the command line.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* node) {
    node->fallthrough();
    for (CLI::App* sub : node->get_subcommands({})) allow_fallthrough(sub);
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << std::flush;
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
