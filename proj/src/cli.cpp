#include "mcc/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mcc/errors.hpp"
#include "mcc/io.hpp"
#include "mcc/oracle.hpp"
#include "mcc/outerplanar_dp.hpp"
#include "mcc/schemes.hpp"
#include "mcc/tree3.hpp"

namespace mcc {

using nlohmann::json;

namespace {

template <typename T>
T param(const json& params, const char* name, const std::string& family) {
  if (!params.is_object() || !params.contains(name))
    throw InvalidInput("family '" + family + "' needs parameter '" + name + "'");
  try {
    return params.at(name).get<T>();
  } catch (const json::exception&) {
    throw InvalidInput("family '" + family + "': malformed parameter '" + name + "'");
  }
}

/// Family tag of `g` after checking that regenerating it reproduces `g`.
const FamilyTag& checked_family(const Graph& g, const std::string& algo, const std::string& wanted) {
  if (!g.family())
    throw InvalidInput(algo + " needs " + wanted + " metadata, but the graph has no family tag");
  const FamilyTag& tag = *g.family();
  if (tag.name != wanted)
    throw InvalidInput(algo + " needs " + wanted + " metadata, but the graph family is '" + tag.name + "'");
  const Graph regen = generate_family(tag.name, tag.params);
  if (regen.num_vertices() != g.num_vertices() || regen.edges() != g.edges())
    throw InvalidInput("graph does not match its family tag '" + tag.name + "'");
  return tag;
}

void require_colors(const AlgoOptions& options, int t, const std::string& algo) {
  if (options.colors && *options.colors != t)
    throw InvalidParameter(algo + " produces " + std::to_string(t) + "-colorings, got --colors " +
                           std::to_string(*options.colors));
}

void apply_scheme(AlgoOutcome& out, SchemeResult&& r) {
  out.coloring = std::move(r.coloring);
  out.claimed_bound = r.claimed_bound;
  out.note = std::move(r.bound_exception);
}

}  // namespace

Graph generate_family(const std::string& family, const json& params) {
  if (family == "wheel") return gen_wheel(param<int>(params, "n", family));
  if (family == "double-wheel")
    return gen_double_wheel(param<int>(params, "n", family), params.value("centers_adjacent", false));
  if (family == "snowflake") return gen_snowflake(param<int>(params, "h", family)).first;
  if (family == "outerpath") {
    const auto sizes = param<std::vector<int>>(params, "fan_sizes", family);
    return gen_outerpath(sizes).first;
  }
  if (family == "complete-3tree") return gen_complete_3tree(param<int>(params, "k", family)).first;
  if (family == "random-mop")
    return gen_random_mop(param<int>(params, "n", family), param<std::uint64_t>(params, "seed", family));
  throw InvalidParameter("unknown family '" + family + "'");
}

AlgoOutcome run_algorithm(const Graph& g, const std::string& algo, const AlgoOptions& options) {
  AlgoOutcome out;
  int t = 2;
  if (algo == "dp2") {
    require_colors(options, 2, algo);
    DpOptions dp;
    dp.prune_dominated = !options.full_tables;
    Mcc2Solution s = solve_mcc2(g, dp);
    out.value = s.value;
    out.coloring = std::move(s.coloring);
  } else if (algo == "oracle") {
    t = options.colors.value_or(2);
    OracleOptions o;
    o.budget = options.budget;
    o.threads = options.threads;
    OracleResult r = exact_mcc(g, t, o);
    out.value = r.value;
    out.coloring = std::move(r.witness);
  } else if (algo == "wheel2") {
    require_colors(options, 2, algo);
    apply_scheme(out, color_wheel(g));
  } else if (algo == "snowflake2") {
    require_colors(options, 2, algo);
    const FamilyTag& tag = checked_family(g, algo, "snowflake");
    auto [sg, meta] = gen_snowflake(param<int>(tag.params, "h", tag.name));
    apply_scheme(out, color_snowflake(g, meta));
  } else if (algo == "outerpath2") {
    require_colors(options, 2, algo);
    const FamilyTag& tag = checked_family(g, algo, "outerpath");
    auto [og, meta] = gen_outerpath(param<std::vector<int>>(tag.params, "fan_sizes", tag.name));
    apply_scheme(out, color_outerpath(g, meta));
  } else if (algo == "tree3-3col" || algo == "tree3-2col") {
    const bool three = algo == "tree3-3col";
    t = three ? 3 : 2;
    require_colors(options, t, algo);
    const FamilyTag& tag = checked_family(g, algo, "complete-3tree");
    const Planar3TreeMeta meta(param<int>(tag.params, "k", tag.name));
    apply_scheme(out, three ? color_3tree_3colors(g, meta) : color_3tree_2colors(g, meta));
  } else {
    throw InvalidParameter("unknown algorithm '" + algo + "'");
  }
  if (!validate_coloring(g, out.coloring, t)) throw std::logic_error(algo + " produced an invalid coloring");
  out.report = monochromatic_components(g, out.coloring);
  return out;
}

namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Writes `text` to `path`, or to stdout when the path is empty.
void emit(Streams& s, const std::string& path, const std::string& text) {
  if (path.empty())
    s.out << text;
  else
    write_file(path, text);
}

Graph load_graph(const std::string& path) { return graph_from_json(parse_json(read_file(path))); }

Coloring load_coloring(const std::string& path) { return coloring_from_json(parse_json(read_file(path))); }

struct GenerateArgs {
  std::string family, out, format = "json", fan_sizes;
  std::optional<int> n, h, k, delta;
  std::uint64_t seed = 0;
  bool centers_adjacent = false;
};

int cmd_generate(const GenerateArgs& a, Streams& s) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidParameter("family '" + a.family + "' needs " + flag);
    return *v;
  };
  json params;
  if (a.family == "wheel") {
    params = {{"n", need(a.n, "--n")}};
  } else if (a.family == "double-wheel") {
    params = {{"n", need(a.n, "--n")}, {"centers_adjacent", a.centers_adjacent}};
  } else if (a.family == "snowflake") {
    params = {{"h", need(a.h, "--h")}};
  } else if (a.family == "complete-3tree") {
    params = {{"k", need(a.k, "--k")}};
  } else if (a.family == "random-mop") {
    params = {{"n", need(a.n, "--n")}, {"seed", a.seed}};
  } else if (a.family == "outerpath") {
    std::vector<int> sizes;
    if (!a.fan_sizes.empty()) {
      for (auto v : parse_range(a.fan_sizes)) sizes.push_back(static_cast<int>(v));
    } else {
      sizes = random_outerpath_fan_sizes(need(a.delta, "--fan-sizes or --delta"), a.seed);
    }
    params = {{"fan_sizes", sizes}};
  } else {
    throw InvalidParameter("unknown family '" + a.family + "'");
  }
  const Graph g = generate_family(a.family, params);
  if (a.format == "json")
    emit(s, a.out, dump_json(graph_to_json(g)));
  else if (a.format == "dot")
    emit(s, a.out, to_dot(g));
  else
    throw InvalidParameter("generate writes json or dot, not " + a.format);
  return kExitOk;
}

struct ColorArgs {
  std::string in, algo, out, report, dump_tables;
  AlgoOptions options;
};

int cmd_color(const ColorArgs& a, Streams& s) {
  const Graph g = load_graph(a.in);
  const AlgoOutcome r = run_algorithm(g, a.algo, a.options);
  emit(s, a.out, dump_json(coloring_to_json(r.coloring)));
  if (!a.report.empty()) write_file(a.report, dump_json(report_to_json(r.report)));
  if (!a.dump_tables.empty()) {
    if (a.algo != "dp2") throw InvalidParameter("--dump-tables applies to dp2 only");
    DpOptions dp;
    dp.prune_dominated = !a.options.full_tables;
    const DpRun run = run_dp(g, dp);
    std::ostringstream csv;
    csv << "node,u,v,w,children,states\n";
    for (int node : run.tree.order) {
      const auto& d = run.tree.nodes[node];
      csv << node << ',' << d.u << ',' << d.v << ',' << d.w << ',' << d.num_children() << ','
          << run.tables[node].states.size() << '\n';
    }
    write_file(a.dump_tables, csv.str());
  }

  std::ostream& log = a.out.empty() ? s.err : s.out;
  log << "algorithm=" << a.algo << " n=" << g.num_vertices() << " max_component=" << r.report.max_component;
  if (r.value) log << " value=" << *r.value;
  if (r.claimed_bound) log << " claimed_bound=" << *r.claimed_bound;
  log << '\n';
  if (r.note) log << "note: " << *r.note << '\n';
  if (r.value && static_cast<std::size_t>(*r.value) != r.report.max_component) {
    s.err << "verification failed: reported value " << *r.value << " but the coloring has max component "
          << r.report.max_component << '\n';
    return kExitVerificationFailed;
  }
  if (r.claimed_bound && r.report.max_component > *r.claimed_bound) {
    s.err << "verification failed: max component " << r.report.max_component << " exceeds claimed bound "
          << *r.claimed_bound << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string in, coloring, report, format = "json";
  std::optional<int> colors, bound;
};

int cmd_verify(const VerifyArgs& a, Streams& s) {
  const Graph g = load_graph(a.in);
  const Coloring c = load_coloring(a.coloring);
  const int t = a.colors.value_or(c.t);
  if (!validate_coloring(g, c, t))
    throw InvalidInput("coloring does not assign every vertex one of " + std::to_string(t) + " colors");
  const MccReport r = monochromatic_components(g, c);
  if (!a.report.empty()) write_file(a.report, dump_json(report_to_json(r)));
  if (a.format == "json")
    s.out << dump_json(report_to_json(r, false));
  else
    throw InvalidParameter("verify writes json, not " + a.format);
  if (a.bound && r.max_component > static_cast<std::size_t>(*a.bound)) {
    s.err << "verification failed: max component " << r.max_component << " exceeds " << *a.bound << '\n';
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct WitnessArgs {
  std::string in, kind, coloring, out;
  int outer = 1;
};

int cmd_witness(const WitnessArgs& a, Streams& s) {
  const Graph g = load_graph(a.in);
  const FamilyTag& tag = checked_family(g, "witness --kind " + a.kind, "complete-3tree");
  const Planar3TreeMeta meta(param<int>(tag.params, "k", tag.name));
  std::ostream& log = a.out.empty() ? s.err : s.out;
  if (a.kind == "path") {
    if (a.coloring.empty()) throw InvalidParameter("witness --kind path needs --coloring");
    const Coloring c = load_coloring(a.coloring);
    const PathWitness p = extract_monochromatic_path(g, meta, c);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
      if (!g.has_edge(p.vertices[i], p.vertices[i + 1]) || c.colors[p.vertices[i]] != p.color)
        throw std::logic_error("extracted path is not a monochromatic path");
    emit(s, a.out, dump_json(path_to_json(p)));
    log << "path length=" << p.length() << " color=" << p.color << '\n';
  } else if (a.kind == "wheel") {
    const WheelWitness w = extract_outer_wheel(g, meta, a.outer);
    emit(s, a.out, dump_json(graph_to_json(w.wheel)));
    log << "wheel center=" << w.original.front() << " rim_size=" << w.original.size() - 1 << " original=";
    for (std::size_t i = 0; i < w.original.size(); ++i) log << (i ? "," : "") << w.original[i];
    log << '\n';
  } else {
    throw InvalidParameter("unknown witness kind '" + a.kind + "'");
  }
  return kExitOk;
}

struct BenchArgs {
  std::string family, algo, range, out;
  std::optional<std::string> n, h, k, delta;
  std::uint64_t seed = 1;
  AlgoOptions options;
};

int cmd_bench(const BenchArgs& a, Streams& s) {
  BenchSpec spec;
  spec.family = a.family;
  spec.algorithm = a.algo;
  spec.seed = a.seed;
  spec.options = a.options;
  const std::optional<std::string>* range = nullptr;
  if (a.family == "wheel" || a.family == "double-wheel" || a.family == "random-mop")
    range = &a.n;
  else if (a.family == "snowflake")
    range = &a.h;
  else if (a.family == "complete-3tree")
    range = &a.k;
  else if (a.family == "outerpath")
    range = &a.delta;
  else
    throw InvalidParameter("unknown family '" + a.family + "'");
  if (!*range) throw InvalidParameter("bench over family '" + a.family + "' needs a parameter range");
  spec.values = parse_range(**range);

  const auto records = run_bench(spec);
  std::ostringstream csv;
  csv << kBenchCsvHeader << '\n';
  bool exceeded = false;
  for (const auto& r : records) {
    csv << bench_csv_row(r) << '\n';
    if (r.claimed_bound && r.max_component > *r.claimed_bound) exceeded = true;
  }
  emit(s, a.out, csv.str());
  std::ostream& log = a.out.empty() ? s.err : s.out;
  if (records.size() >= 2) {
    try {
      const LogLogFit fit = fit_bench(records);
      log << "fit x=" << (a.family == "outerpath" ? "delta" : "n") << " slope=" << fit.slope
          << " intercept=" << fit.intercept << " residual=" << fit.residual << " points=" << fit.points << '\n';
    } catch (const InvalidParameter& e) {
      log << "fit unavailable: " << e.what() << '\n';
    }
  }
  if (exceeded) {
    s.err << "verification failed: some max_component exceeds its claimed bound\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

struct ExportArgs {
  std::string in, coloring, out, format = "dot";
};

int cmd_export(const ExportArgs& a, Streams& s) {
  const Graph g = load_graph(a.in);
  std::optional<Coloring> c;
  if (!a.coloring.empty()) c = load_coloring(a.coloring);
  if (a.format == "dot")
    emit(s, a.out, to_dot(g, c ? &*c : nullptr));
  else if (a.format == "json")
    emit(s, a.out, dump_json(graph_to_json(g)));
  else
    throw InvalidParameter("export writes dot or json, not " + a.format);
  return kExitOk;
}

void add_algo_options(CLI::App* cmd, AlgoOptions& o) {
  cmd->add_option("--colors", o.colors, "Number of colors t");
  cmd->add_option("--budget", o.budget, "Oracle search-node budget");
  cmd->add_option("--threads", o.threads, "Oracle worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--full-tables", o.full_tables, "dp2: keep dominated states too");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams s{out, err};
  CLI::App app{"Colorings minimizing the largest monochromatic component"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  const std::vector<std::string> families = {"wheel",     "double-wheel",   "snowflake",
                                             "outerpath", "complete-3tree", "random-mop"};

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a family member as Graph JSON or DOT");
  generate->add_option("--family", gen.family)->required()->check(CLI::IsMember(families));
  generate->add_option("--n", gen.n, "Vertices (wheel, double-wheel, random-mop)");
  generate->add_option("--h", gen.h, "Snowflake height");
  generate->add_option("--k", gen.k, "Complete 3-tree levels");
  generate->add_option("--fan-sizes", gen.fan_sizes, "Outerpath fan sizes, comma separated");
  generate->add_option("--delta", gen.delta, "Random outerpath with this maximum degree");
  generate->add_option("--seed", gen.seed);
  generate->add_flag("--centers-adjacent", gen.centers_adjacent, "Double wheel with adjacent centers");
  generate->add_option("--out", gen.out);
  generate->add_option("--format", gen.format)->check(CLI::IsMember({"json", "dot"}));

  ColorArgs col;
  auto* color = app.add_subcommand("color", "Color a graph and verify the result");
  color->add_option("--in", col.in)->required();
  color->add_option("--algo", col.algo)->required()->check(CLI::IsMember(kAlgorithms));
  add_algo_options(color, col.options);
  color->add_option("--out", col.out, "Coloring JSON (default stdout)");
  color->add_option("--report", col.report, "Report JSON");
  color->add_option("--dump-tables", col.dump_tables, "dp2: per-node state counts as CSV");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Report monochromatic components of a coloring");
  verify->add_option("--in", ver.in)->required();
  verify->add_option("--coloring", ver.coloring)->required();
  verify->add_option("--colors", ver.colors);
  verify->add_option("--bound", ver.bound, "Fail when the largest component exceeds this");
  verify->add_option("--report", ver.report, "Report JSON with components");
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"json"}));

  WitnessArgs wit;
  auto* witness = app.add_subcommand("witness", "Extract a path or wheel witness from a complete 3-tree");
  witness->add_option("--in", wit.in)->required();
  witness->add_option("--kind", wit.kind)->required()->check(CLI::IsMember({"path", "wheel"}));
  witness->add_option("--coloring", wit.coloring, "path: 3-coloring with rainbow outer face");
  witness->add_option("--outer", wit.outer, "wheel: outer vertex 1..3")->check(CLI::Range(1, 3));
  witness->add_option("--out", wit.out);

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Run an algorithm over a parameter range and fit log-log growth");
  bench->add_option("--family", ben.family)->required()->check(CLI::IsMember(families));
  bench->add_option("--algo", ben.algo)->required()->check(CLI::IsMember(kAlgorithms));
  bench->add_option("--n", ben.n, "Range a..b or a,b,c");
  bench->add_option("--h", ben.h);
  bench->add_option("--k", ben.k);
  bench->add_option("--delta", ben.delta);
  bench->add_option("--seed", ben.seed);
  add_algo_options(bench, ben.options);
  bench->add_option("--out", ben.out, "CSV (default stdout)");
  std::string bench_format = "csv";
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv"}));

  ExportArgs exp;
  auto* exporter = app.add_subcommand("export", "Render a graph, optionally colored");
  exporter->add_option("--in", exp.in)->required();
  exporter->add_option("--coloring", exp.coloring);
  exporter->add_option("--format", exp.format)->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--out", exp.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (*generate) return cmd_generate(gen, s);
    if (*color) return cmd_color(col, s);
    if (*verify) return cmd_verify(ver, s);
    if (*witness) return cmd_witness(wit, s);
    if (*bench) return cmd_bench(ben, s);
    if (*exporter) return cmd_export(exp, s);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudgetExhausted;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitInvalidInput;
}

}  // namespace mcc
