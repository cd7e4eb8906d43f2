#include "lacunary/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "lacunary/bound_all.hpp"
#include "lacunary/constructions.hpp"
#include "lacunary/redei.hpp"
#include "lacunary/report.hpp"
#include "lacunary/sweep.hpp"
#include "lacunary/verify.hpp"

namespace lacunary {

namespace {

enum class Format { Csv, Table, Json };

struct RunConfig {
  std::string field = "";
  std::string poly = "";
  std::optional<u64> d;
  bool oracle = false;
  bool materialize = false;
  bool reduce = false;
  u64 seed = 1;
  u64 trials = 10000;
  std::string out_path;
  std::string format = "table";
  std::string svg_path;
  std::string color = "region";
  u64 cap = Field::kDefaultCap;
  u64 enumeration_cap = 1'000'000;
  std::string family;
  std::optional<u64> r1, r2, big_d, n;
};

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Table;
}

Field load_field(const RunConfig& c) {
  if (c.field.empty()) throw Error(ErrorCode::InvalidArgument, "--q is required");
  return Field::parse(c.field, c.cap);
}

SparsePoly load_poly(const RunConfig& c, const Field& field) {
  if (c.poly.empty()) throw Error(ErrorCode::InvalidArgument, "--f is required");
  SparsePoly f = parse_poly(c.poly, field);
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "the polynomial is zero");
  return c.reduce ? reduce_exponents(f) : f;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------

int cmd_bound(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Field field = load_field(c);
  const SparsePoly f = load_poly(c, field);
  std::optional<RootReport> roots;
  if (c.oracle || field.q() <= field.cap()) roots = count_roots_bruteforce(f);
  const std::vector<BoundOutcome> outcomes = bound_all(f, c.d, roots);
  const auto best = best_outcome(outcomes);
  switch (parse_format(c.format)) {
    case Format::Csv:
      write_outcomes_csv(out, outcomes);
      if (c.oracle) {
        out << '\n';
        write_roots_csv(out, f, *roots);
      }
      break;
    case Format::Json: {
      Json j{{"field", field.describe()}, {"poly", render(f)}, {"outcomes", outcomes_json(outcomes)}};
      if (best) j["best"] = outcome_json(*best);
      if (c.oracle) {
        Json r = Json::array();
        for (Element e : roots->roots) r.push_back(field.format(e));
        j["oracle"] = Json{{"count", roots->count()}, {"roots", r}};
      }
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Table:
      out << "f = " << render(f) << " over " << field.describe() << '\n';
      write_outcomes_table(out, outcomes);
      if (best) {
        out << "best: " << *best->value << " (" << best->method
            << (best->d ? ", d=" + std::to_string(*best->d) : "") << ")\n";
      }
      if (c.oracle) {
        out << "oracle: " << roots->count() << " roots {" << join_roots(field, *roots) << "}\n";
      }
      break;
  }
  if (c.oracle) {
    for (const BoundOutcome& o : outcomes) {
      if (o.applicable && *o.value < roots->count()) {
        err << "SoundnessViolation: " << o.method << " gives " << *o.value << " < "
            << roots->count() << " for " << render(f) << '\n';
        return kExitUnsound;
      }
    }
  }
  if (!best) {
    err << "no bound applies\n";
    return kExitPreconditions;
  }
  return kExitOk;
}

int cmd_iterate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Field field = load_field(c);
  const SparsePoly f = load_poly(c, field);
  if (!c.d) throw Error(ErrorCode::InvalidArgument, "iterate needs --d");
  if (*c.d == 1) {
    err << "DEqualsOne: the iteration needs d >= 2; for d = 1 use `bound` (Theorem 1 reduces to "
           "the exponent-gap lemma)\n";
    return kExitPreconditions;
  }
  const LacunaryForm form = decompose_lacunary(make_monic(strip_x_power(f).second), *c.d);
  const IterationTrace trace = build_trace(form, kIterationCap, c.materialize);
  const BoundOutcome lemma = min_bound_lemma(form.params());
  const BoundOutcome thm4 = best_bound_thm4(form);
  const u64 lemma_index = lemma.witness["index"].get<u64>();
  switch (parse_format(c.format)) {
    case Format::Csv:
      out << "i,ell,g_degree,bound,condition" << (c.materialize ? ",poly" : "") << '\n';
      for (const TraceEntry& e : trace.entries) {
        out << e.i << ',' << e.ell << ',' << e.g_degree << ',' << e.bound << ','
            << bool_text(e.condition);
        if (c.materialize) out << ',' << (e.poly ? csv_cell(render(*e.poly)) : "");
        out << '\n';
      }
      break;
    case Format::Json: {
      Json rows = Json::array();
      for (const TraceEntry& e : trace.entries) {
        Json r{{"i", e.i},
               {"ell", e.ell.str()},
               {"g_degree", e.g_degree.str()},
               {"bound", e.bound.str()},
               {"condition", e.condition}};
        if (e.poly) r["poly"] = render(*e.poly);
        rows.push_back(r);
      }
      out << Json{{"field", field.describe()},
                  {"poly", render(form.poly())},
                  {"trace", rows},
                  {"stop", trace_stop_name(trace.stop)},
                  {"lemma", outcome_json(lemma)},
                  {"thm4", outcome_json(thm4)}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> rows = {{"i", "ell", "g_degree", "d(ell+g)", "condition"}};
      if (c.materialize) rows[0].push_back("f_i");
      for (const TraceEntry& e : trace.entries) {
        rows.push_back({std::to_string(e.i), e.ell.str(), e.g_degree.str(), e.bound.str(),
                        bool_text(e.condition)});
        if (c.materialize) rows.back().push_back(e.poly ? render(*e.poly) : "");
      }
      write_table(out, rows);
      out << "stop: " << trace_stop_name(trace.stop) << '\n';
      out << "best: " << *lemma.value << " at i=" << lemma_index << '\n';
      out << "thm4: case " << thm4.witness["case"].get<int>() << ", i="
          << thm4.witness["i"].get<i64>() << ", value " << *thm4.value << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Field field = load_field(c);
  if (!c.d) throw Error(ErrorCode::InvalidArgument, "sweep needs --d");
  const std::vector<SweepRow> rows = sweep(field.q() - 1, *c.d);
  write_sweep_csv(out, rows);
  if (!c.svg_path.empty()) {
    std::ofstream svg(c.svg_path);
    if (!svg) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.svg_path);
    const SvgColoring coloring = c.color == "case"    ? SvgColoring::Case
                                 : c.color == "lemma" ? SvgColoring::LemmaIndex
                                                      : SvgColoring::Region;
    write_sweep_svg(svg, rows, field.q() - 1, *c.d, coloring);
  }
  return kExitOk;
}

int cmd_construct(const RunConfig& c, std::ostream& out, std::ostream&) {
  auto prime = [&] {
    if (c.field.empty()) throw Error(ErrorCode::InvalidArgument, "--q is required");
    return std::stoull(c.field);
  };
  std::optional<ConstructedExample> ex;
  if (c.family == "ex1") {
    ex = construct_ex1(prime());
  } else if (c.family == "ex2") {
    ex = construct_ex2(prime(), c.r1, c.r2);
  } else if (c.family == "ex3") {
    ex = construct_ex3(prime());
  } else if (c.family == "cyclotomic") {
    if (!c.big_d || !c.n) throw Error(ErrorCode::InvalidArgument, "cyclotomic needs --D and --n");
    ex = construct_cyclotomic(load_field(c), *c.big_d, *c.n);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + c.family + "'");
  }
  const RootReport roots{ex->expected_roots};
  switch (parse_format(c.format)) {
    case Format::Json: {
      Json r = Json::array();
      for (Element e : ex->expected_roots) r.push_back(ex->poly.field().format(e));
      out << Json{{"family", family_name(ex->family)},
                  {"params", ex->params},
                  {"poly", render(ex->poly)},
                  {"roots", r},
                  {"bound_method", ex->bound_method},
                  {"claimed_bound", ex->claimed_bound}}
                 .dump(2)
          << '\n';
      break;
    }
    case Format::Csv:
    case Format::Table:
      out << render(ex->poly) << '\n';
      write_roots_csv(out, ex->poly, roots);
      break;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyConfig vc;
  vc.seed = c.seed;
  vc.trials = c.trials;
  if (!c.field.empty()) {
    std::stringstream ss(c.field);
    std::string item;
    while (std::getline(ss, item, ',')) vc.q_list.push_back(Field::parse(item).q());
  }
  const VerifyReport report = run_verify(vc);
  switch (parse_format(c.format)) {
    case Format::Json:
      out << Json{{"seed", c.seed},
                  {"trials", report.trials},
                  {"outcomes_checked", report.outcomes_checked},
                  {"max_tightness", report.max_tightness},
                  {"tightest", report.tightest},
                  {"violations", report.violations.size()}}
                 .dump(2)
          << '\n';
      break;
    case Format::Csv:
      out << "seed,trials,outcomes_checked,max_tightness,violations\n"
          << c.seed << ',' << report.trials << ',' << report.outcomes_checked << ','
          << report.max_tightness << ',' << report.violations.size() << '\n';
      break;
    case Format::Table:
      out << "trials: " << report.trials << '\n'
          << "outcomes checked: " << report.outcomes_checked << '\n'
          << "max tightness: " << report.max_tightness << " (" << report.tightest << ")\n"
          << "violations: " << report.violations.size() << '\n';
      break;
  }
  for (const Violation& v : report.violations) {
    err << "SoundnessViolation: trial " << v.trial << ": " << v.outcome.method
        << (v.outcome.d ? " d=" + std::to_string(*v.outcome.d) : "") << " gives "
        << *v.outcome.value << " < " << v.count << " for " << v.poly << " over " << v.field << '\n';
  }
  return report.violations.empty() ? kExitOk : kExitUnsound;
}

int cmd_redei(const RunConfig& c, std::ostream& out, std::ostream&) {
  const Field field = load_field(c);
  std::vector<u64> ds;
  if (c.d) {
    ds.push_back(*c.d);
  } else {
    for (u64 d : divisors(field.q() - 1)) {
      if (d > 1) ds.push_back(d);
    }
  }
  bool all_passed = true;
  std::vector<std::vector<std::string>> rows = {
      {"q", "d", "subsets", "survivors", "expected", "status"}};
  std::vector<RedeiReport> reports;
  for (u64 d : ds) {
    RedeiReport r = redei_check(field, d, c.enumeration_cap);
    all_passed = all_passed && r.passed();
    rows.push_back({std::to_string(r.q), std::to_string(r.d), std::to_string(r.subsets),
                    std::to_string(r.survivors.size()), std::to_string(r.expected.size()),
                    r.passed() ? "pass" : "FAIL"});
    reports.push_back(std::move(r));
  }
  const Format format = parse_format(c.format);
  if (format == Format::Csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  } else if (format == Format::Json) {
    Json arr = Json::array();
    for (const RedeiReport& r : reports) {
      Json s = Json::array(), u = Json::array(), m = Json::array();
      for (const auto& f : r.survivors) s.push_back(render(f));
      for (const auto& f : r.unexpected) u.push_back(render(f));
      for (const auto& f : r.missing) m.push_back(render(f));
      arr.push_back(Json{{"q", r.q}, {"d", r.d}, {"subsets", r.subsets}, {"survivors", s},
                         {"unexpected", u}, {"missing", m}, {"passed", r.passed()}});
    }
    out << arr.dump(2) << '\n';
  } else {
    write_table(out, rows);
    for (const RedeiReport& r : reports) {
      out << "d=" << r.d << " survivors:";
      for (const auto& f : r.survivors) out << "  " << render(f);
      out << '\n';
      for (const auto& f : r.unexpected) out << "  unexpected: " << render(f) << '\n';
      for (const auto& f : r.missing) out << "  missing: " << render(f) << '\n';
    }
  }
  return all_passed ? kExitOk : kExitError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root-count bounds for lacunary polynomials over finite fields", "lacunary"};
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.out_path, "Write results to this file");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"csv", "table", "json"}));
    sub->add_option("--cap", c.cap, "Largest q the brute-force oracles accept");
  };
  CLI::App* bound = app.add_subcommand("bound", "Every applicable bound for a polynomial");
  bound->add_option("--q", c.field, "Field: p, p^k, p^k:c0,c1,... or a prime power")->required();
  bound->add_option("--f", c.poly, "Polynomial text")->required();
  bound->add_option("--d", c.d, "Restrict to one divisor d of q-1");
  bound->add_flag("--oracle", c.oracle, "Also count roots by brute force");
  bound->add_flag("--reduce-exponents", c.reduce, "Reduce exponents modulo q-1 first");
  common(bound);

  CLI::App* iterate = app.add_subcommand("iterate", "Iterated bounds f_0, f_1, ...");
  iterate->add_option("--q", c.field, "Field")->required();
  iterate->add_option("--f", c.poly, "Polynomial text")->required();
  iterate->add_option("--d", c.d, "Divisor d of q-1 (d >= 2)")->required();
  iterate->add_flag("--materialize", c.materialize, "Build and print each f_i");
  iterate->add_flag("--reduce-exponents", c.reduce, "Reduce exponents modulo q-1 first");
  common(iterate);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Region map over all (l, g°)");
  sweep_cmd->add_option("--q", c.field, "Field")->required();
  sweep_cmd->add_option("--d", c.d, "Divisor d of q-1 (d >= 2)")->required();
  sweep_cmd->add_option("--svg", c.svg_path, "Also write an SVG region map");
  sweep_cmd->add_option("--color", c.color, "SVG coloring")
      ->check(CLI::IsMember({"region", "case", "lemma"}));
  common(sweep_cmd);

  CLI::App* construct = app.add_subcommand("construct", "Tight example families");
  construct->add_option("family", c.family, "ex1, ex2, ex3 or cyclotomic")->required();
  construct->add_option("--q", c.field, "Prime p (ex1-ex3) or field (cyclotomic)")->required();
  construct->add_option("--r1", c.r1, "ex2: first square");
  construct->add_option("--r2", c.r2, "ex2: second square");
  construct->add_option("--D", c.big_d, "cyclotomic: D");
  construct->add_option("--n", c.n, "cyclotomic: n");
  common(construct);

  CLI::App* verify = app.add_subcommand("verify", "Seeded soundness check of every bound");
  verify->add_option("--seed", c.seed, "RNG seed");
  verify->add_option("--trials", c.trials, "Number of random instances");
  verify->add_option("--q", c.field, "Comma-separated field orders (default: odd q <= 997)");
  common(verify);

  CLI::App* redei = app.add_subcommand("redei-check", "Exhaustive check of the Euler-binomial theorem");
  redei->add_option("--q", c.field, "Field")->required();
  redei->add_option("--d", c.d, "Divisor d > 1 (default: all that fit the cap)");
  redei->add_option("--enum-cap", c.enumeration_cap, "Largest number of root subsets");
  common(redei);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot write " << c.out_path << '\n';
      return kExitError;
    }
  }
  std::ostream& sink = c.out_path.empty() ? out : file;
  try {
    if (bound->parsed()) return cmd_bound(c, sink, err);
    if (iterate->parsed()) return cmd_iterate(c, sink, err);
    if (sweep_cmd->parsed()) return cmd_sweep(c, sink, err);
    if (construct->parsed()) return cmd_construct(c, sink, err);
    if (verify->parsed()) return cmd_verify(c, sink, err);
    if (redei->parsed()) return cmd_redei(c, sink, err);
  } catch (const Error& e) {
    err << e.what() << '\n';
    if (e.code() == ErrorCode::SoundnessViolation) return kExitUnsound;
    if (e.code() == ErrorCode::DEqualsOne) return kExitPreconditions;
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace lacunary
