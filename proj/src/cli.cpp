#include "centdian/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "centdian/approx.hpp"
#include "centdian/errors.hpp"
#include "centdian/exact.hpp"
#include "centdian/graph.hpp"
#include "centdian/instance_io.hpp"
#include "centdian/models.hpp"
#include "centdian/numfmt.hpp"
#include "centdian/reductions.hpp"
#include "centdian/report.hpp"

namespace centdian {

namespace {

struct Options {
  std::string input;
  Index p = 0;
  Scalar budget = 0;
  Scalar epsilon = 0.5;
  std::uint64_t cap = kDefaultEnumerationCap;
  Index kappa = 0;
  std::string format = "json";

  // generator / bench knobs
  std::string kind = "gnp";
  Index n = 0;
  double prob = 0.5;
  int wmin = 1;
  int wmax = 9;
  int grid = 100;
  std::uint64_t seed = 1;
  int trials = 20;
};

using Clock = std::chrono::steady_clock;

// Timing goes to the diagnostic stream only; stdout stays byte-stable
// across runs so reports can be diffed.
void note_wall_time(Clock::time_point t0, std::ostream& err) {
  const double ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  err << "# wall_ms " << format_number(ms) << "\n";
}

Graph load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open instance file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void emit(const Report& rep, const Options& opt, std::ostream& out) {
  if (opt.format == "json")
    out << rep.json() << "\n";
  else
    out << rep.text();
}

int cmd_pdp_exact(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(opt.input);
  const PdpInstance inst(metric_closure(g), opt.p);
  const auto t0 = Clock::now();
  const ExactResult r = solve_pdp_exact(inst, opt.cap);
  note_wall_time(t0, err);

  Report rep;
  rep.add_str("problem", "pdp");
  rep.add_str("method", "exact");
  rep.add_str("digest", instance_digest(g));
  rep.add_int("n", g.n());
  rep.add_int("p", opt.p);
  rep.add_set("solution", r.solution);
  rep.add_num("eccentricity", r.evaluation.eccentricity);
  rep.add_num("median", r.evaluation.median);
  rep.add_num("centdian", r.evaluation.centdian());
  rep.add_count("subsets_examined", r.subsets_examined);
  emit(rep, opt, out);
  return 0;
}

int cmd_pdp_apx(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(opt.input);
  const PdpInstance inst(metric_closure(g), opt.p);
  const auto t0 = Clock::now();
  const ApproxResult r = apx_pdp(inst, opt.epsilon);
  note_wall_time(t0, err);

  const Scalar value = r.evaluation.centdian();
  Report rep;
  rep.add_str("problem", "pdp");
  rep.add_str("method", "apx");
  rep.add_str("digest", instance_digest(g));
  rep.add_int("n", g.n());
  rep.add_int("p", opt.p);
  rep.add_num("epsilon", opt.epsilon);
  rep.add_set("solution", r.solution);
  rep.add_num("eccentricity", r.evaluation.eccentricity);
  rep.add_num("median", r.evaluation.median);
  rep.add_num("centdian", value);
  rep.add_num("lp_lower_bound", r.lp_lower_bound);
  rep.add_num("cardinality_bound", r.cardinality_bound);
  rep.add_check("cardinality_within_bound",
                static_cast<Scalar>(r.solution.size()) <=
                    std::min(static_cast<Scalar>(g.n()), r.cardinality_bound));
  rep.add_check("value_within_inflated_lp_bound",
                value <= (1.0 + opt.epsilon) * r.lp_lower_bound + kFeasTol);
  emit(rep, opt, out);
  return 0;
}

int cmd_cdp_exact(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(opt.input);
  const CdpInstance inst(metric_closure(g), opt.budget);
  const auto t0 = Clock::now();
  const ExactResult r = solve_cdp_exact(inst, opt.cap);
  note_wall_time(t0, err);

  Report rep;
  rep.add_str("problem", "cdp");
  rep.add_str("method", "exact");
  rep.add_str("digest", instance_digest(g));
  rep.add_int("n", g.n());
  rep.add_num("budget", opt.budget);
  rep.add_set("solution", r.solution);
  rep.add_int("cardinality", static_cast<Index>(r.solution.size()));
  rep.add_num("eccentricity", r.evaluation.eccentricity);
  rep.add_num("median", r.evaluation.median);
  rep.add_num("centdian", r.evaluation.centdian());
  rep.add_count("subsets_examined", r.subsets_examined);
  rep.add_check("value_within_budget",
                r.evaluation.centdian() <= opt.budget + kFeasTol);
  emit(rep, opt, out);
  return 0;
}

int cmd_cdp_apx(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(opt.input);
  const CdpInstance inst(metric_closure(g), opt.budget);
  const auto t0 = Clock::now();
  const ApproxResult r = apx_cdp(inst, opt.epsilon);
  note_wall_time(t0, err);

  const Scalar value = r.evaluation.centdian();
  Report rep;
  rep.add_str("problem", "cdp");
  rep.add_str("method", "apx");
  rep.add_str("digest", instance_digest(g));
  rep.add_int("n", g.n());
  rep.add_num("budget", opt.budget);
  rep.add_num("epsilon", opt.epsilon);
  rep.add_set("solution", r.solution);
  rep.add_int("cardinality", static_cast<Index>(r.solution.size()));
  rep.add_num("eccentricity", r.evaluation.eccentricity);
  rep.add_num("median", r.evaluation.median);
  rep.add_num("centdian", value);
  rep.add_num("lp_lower_bound", r.lp_lower_bound);
  rep.add_num("cardinality_bound", r.cardinality_bound);
  rep.add_check("value_within_inflated_budget",
                value <= (1.0 + opt.epsilon) * opt.budget + kFeasTol);
  emit(rep, opt, out);
  return 0;
}

int cmd_reduce_dsp(const Options& opt, std::ostream& out, std::ostream& err) {
  const Graph g = load_instance(opt.input);
  const auto t0 = Clock::now();
  const ReductionOutput r = dsp_to_pdp(g, opt.kappa);
  note_wall_time(t0, err);

  // The reduced instance is a complete graph on the closure distances;
  // serialize it in the same format the parser accepts so the output can
  // be piped straight back into the solvers.
  const Index n = r.reduced.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Index u = 0; u < n; ++u)
    for (Index v = u + 1; v < n; ++v)
      edges.push_back({u, v, r.reduced.dm(u, v)});
  const std::string instance_text = format_instance(Graph(n, std::move(edges)));

  if (opt.format == "json") {
    Report rep;
    rep.add_str("problem", "dsp-reduction");
    rep.add_str("digest", instance_digest(g));
    rep.add_int("n", n);
    rep.add_int("kappa", opt.kappa);
    rep.add_int("p", r.p);
    rep.add_num("u_bound", r.u_bound);
    rep.add_str("instance", instance_text);
    out << rep.json() << "\n";
  } else {
    out << "# reduced instance\n";
    out << "# digest " << instance_digest(g) << "\n";
    out << "# p " << r.p << "\n";
    out << "# u_bound " << format_number(r.u_bound) << "\n";
    out << instance_text;
  }
  return 0;
}

int cmd_export_ilp(const Options& opt, bool has_p, bool has_budget,
                   std::ostream& out, std::ostream& err) {
  if (has_p == has_budget)
    throw InvalidParams("pass exactly one of --p or --budget");
  const Graph g = load_instance(opt.input);
  const DistanceMatrix dm = metric_closure(g);
  const auto t0 = Clock::now();
  if (has_p)
    out << export_pdp_ilp(PdpInstance(dm, opt.p));
  else
    out << export_cdp_ilp(CdpInstance(dm, opt.budget));
  note_wall_time(t0, err);
  return 0;
}

int cmd_gen(const Options& opt, std::ostream& out, std::ostream& err) {
  const InstanceKind kind =
      opt.kind == "gnp" ? InstanceKind::Gnp : InstanceKind::Euclidean;
  GenParams params;
  params.n = opt.n;
  params.edge_prob = opt.prob;
  params.weight_min = opt.wmin;
  params.weight_max = opt.wmax;
  params.grid = opt.grid;
  const auto t0 = Clock::now();
  const Graph g = generate_instance(kind, params, opt.seed);
  note_wall_time(t0, err);
  out << format_instance(g);
  return 0;
}

struct BenchRow {
  std::string kind;
  Index n = 0;
  Index p = 0;
  Scalar exact_value = 0;
  Scalar apx_value = 0;
  Scalar ratio = 0;
  Index cardinality = 0;
  Scalar cardinality_bound = 0;
  bool ok = false;
};

BenchRow run_bench_trial(const Options& opt, int t) {
  BenchRow row;
  row.kind = (t % 2 == 0) ? "gnp" : "euclidean";
  row.n = 5 + t % 6;
  row.p = 1 + t % 3;

  GenParams params;
  params.n = row.n;
  params.edge_prob = 0.5;
  params.grid = 50;
  const Graph g = generate_instance(
      (t % 2 == 0) ? InstanceKind::Gnp : InstanceKind::Euclidean, params,
      opt.seed + static_cast<std::uint64_t>(t));

  const PdpInstance inst(metric_closure(g), row.p);
  row.exact_value = solve_pdp_exact(inst).evaluation.centdian();
  const ApproxResult a = apx_pdp(inst, opt.epsilon);
  row.apx_value = a.evaluation.centdian();
  row.ratio = row.apx_value / row.exact_value;
  row.cardinality = static_cast<Index>(a.solution.size());
  row.cardinality_bound = a.cardinality_bound;
  row.ok = row.apx_value <= (1.0 + opt.epsilon) * row.exact_value + kFeasTol &&
           static_cast<Scalar>(row.cardinality) <=
               std::min(static_cast<Scalar>(row.n), a.cardinality_bound);
  return row;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1) throw InvalidParams("--trials must be positive");

  const auto t0 = Clock::now();
  std::vector<std::future<BenchRow>> futures;
  futures.reserve(static_cast<std::size_t>(opt.trials));
  for (int t = 0; t < opt.trials; ++t)
    futures.push_back(
        std::async(std::launch::async, run_bench_trial, std::cref(opt), t));

  // Collect in trial order; the output is independent of completion order.
  std::vector<BenchRow> rows;
  rows.reserve(futures.size());
  for (auto& f : futures) rows.push_back(f.get());
  note_wall_time(t0, err);

  const bool all_ok =
      std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.ok; });

  if (opt.format == "json") {
    Report rep;
    rep.add_count("seed", opt.seed);
    rep.add_int("trials", opt.trials);
    rep.add_num("epsilon", opt.epsilon);
    std::vector<Report> items;
    items.reserve(rows.size());
    for (const BenchRow& r : rows) {
      Report item;
      item.add_str("kind", r.kind);
      item.add_int("n", r.n);
      item.add_int("p", r.p);
      item.add_num("exact", r.exact_value);
      item.add_num("apx", r.apx_value);
      item.add_num("ratio", r.ratio);
      item.add_int("cardinality", r.cardinality);
      item.add_num("cardinality_bound", r.cardinality_bound);
      item.add_flag("ok", r.ok);
      items.push_back(std::move(item));
    }
    rep.add_rows("trials_detail", std::move(items));
    rep.add_flag("all_ok", all_ok);
    out << rep.json() << "\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%5s %-10s %3s %3s %12s %12s %10s %5s %10s %s\n",
                  "trial", "kind", "n", "p", "exact", "apx", "ratio", "card",
                  "bound", "ok");
    out << line;
    for (std::size_t t = 0; t < rows.size(); ++t) {
      const BenchRow& r = rows[t];
      std::snprintf(line, sizeof line,
                    "%5zu %-10s %3d %3d %12s %12s %10s %5d %10s %s\n", t,
                    r.kind.c_str(), r.n, r.p, format_number(r.exact_value).c_str(),
                    format_number(r.apx_value).c_str(),
                    format_number(r.ratio).c_str(), r.cardinality,
                    format_number(r.cardinality_bound).c_str(),
                    r.ok ? "ok" : "FAIL");
      out << line;
    }
    out << "all_ok: " << (all_ok ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"p-centdian toolkit: exact search, LP rounding, reductions"};
  app.name("centdian");
  app.require_subcommand(1);

  Options opt;

  const auto add_input = [&](CLI::App* c) {
    c->add_option("--input", opt.input, "instance file")->required();
  };
  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "run a solver on an instance");
  solve->require_subcommand(1);

  CLI::App* pdp_exact =
      solve->add_subcommand("pdp-exact", "optimal p-set by exhaustive search");
  add_input(pdp_exact);
  pdp_exact->add_option("--p", opt.p, "number of facilities")->required();
  pdp_exact->add_option("--cap", opt.cap, "subset enumeration cap")
      ->capture_default_str();
  add_format(pdp_exact);

  CLI::App* pdp_apx =
      solve->add_subcommand("pdp-apx", "relaxation rounding with inflation epsilon");
  add_input(pdp_apx);
  pdp_apx->add_option("--p", opt.p, "number of facilities")->required();
  pdp_apx->add_option("--epsilon", opt.epsilon, "inflation factor")->required();
  add_format(pdp_apx);

  CLI::App* cdp_exact =
      solve->add_subcommand("cdp-exact", "smallest set meeting a value budget");
  add_input(cdp_exact);
  cdp_exact->add_option("--budget", opt.budget, "value budget")->required();
  cdp_exact->add_option("--cap", opt.cap, "subset enumeration cap")
      ->capture_default_str();
  add_format(cdp_exact);

  CLI::App* cdp_apx =
      solve->add_subcommand("cdp-apx", "near-minimal set within inflated budget");
  add_input(cdp_apx);
  cdp_apx->add_option("--budget", opt.budget, "value budget")->required();
  cdp_apx->add_option("--epsilon", opt.epsilon, "inflation factor")->required();
  add_format(cdp_apx);

  CLI::App* reduce = app.add_subcommand("reduce", "problem reductions");
  reduce->require_subcommand(1);
  CLI::App* reduce_dsp =
      reduce->add_subcommand("dsp", "domination instance to facility instance");
  add_input(reduce_dsp);
  reduce_dsp->add_option("--kappa", opt.kappa, "dominating set size")->required();
  add_format(reduce_dsp);

  CLI::App* expo = app.add_subcommand("export", "model export");
  expo->require_subcommand(1);
  CLI::App* export_ilp =
      expo->add_subcommand("ilp", "integer program in LP text format");
  add_input(export_ilp);
  CLI::Option* ilp_p = export_ilp->add_option("--p", opt.p, "number of facilities");
  CLI::Option* ilp_budget =
      export_ilp->add_option("--budget", opt.budget, "value budget");

  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", opt.kind, "instance family")
      ->check(CLI::IsMember({"gnp", "euclidean"}))
      ->capture_default_str();
  gen->add_option("--n", opt.n, "vertex count")->required();
  gen->add_option("--prob", opt.prob, "edge probability")->capture_default_str();
  gen->add_option("--wmin", opt.wmin, "minimum weight")->capture_default_str();
  gen->add_option("--wmax", opt.wmax, "maximum weight")->capture_default_str();
  gen->add_option("--grid", opt.grid, "lattice side length")->capture_default_str();
  gen->add_option("--seed", opt.seed, "generator seed")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "approximation quality sweep");
  bench->add_option("--trials", opt.trials, "trial count")->capture_default_str();
  bench->add_option("--epsilon", opt.epsilon, "inflation factor")
      ->capture_default_str();
  bench->add_option("--seed", opt.seed, "base seed")->capture_default_str();
  add_format(bench);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (pdp_exact->parsed()) return cmd_pdp_exact(opt, out, err);
    if (pdp_apx->parsed()) return cmd_pdp_apx(opt, out, err);
    if (cdp_exact->parsed()) return cmd_cdp_exact(opt, out, err);
    if (cdp_apx->parsed()) return cmd_cdp_apx(opt, out, err);
    if (reduce_dsp->parsed()) return cmd_reduce_dsp(opt, out, err);
    if (export_ilp->parsed())
      return cmd_export_ilp(opt, ilp_p->count() > 0, ilp_budget->count() > 0,
                            out, err);
    if (gen->parsed()) return cmd_gen(opt, out, err);
    if (bench->parsed()) return cmd_bench(opt, out, err);
  } catch (const SolverLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace centdian
