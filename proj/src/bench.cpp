#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mcc/cli.hpp"
#include "mcc/errors.hpp"

namespace mcc {

using nlohmann::json;

namespace {

std::int64_t parse_int(const std::string& s, const std::string& whole) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size()) throw InvalidParameter("malformed range '" + whole + "'");
  return v;
}

json params_for(const std::string& family, std::int64_t value, std::uint64_t seed) {
  if (family == "wheel" || family == "double-wheel") return {{"n", value}};
  if (family == "random-mop") return {{"n", value}, {"seed", seed}};
  if (family == "snowflake") return {{"h", value}};
  if (family == "complete-3tree") return {{"k", value}};
  if (family == "outerpath")
    return {{"fan_sizes", random_outerpath_fan_sizes(static_cast<int>(value), seed + static_cast<std::uint64_t>(value))}};
  throw InvalidParameter("unknown family '" + family + "'");
}

}  // namespace

std::vector<std::int64_t> parse_range(const std::string& text) {
  std::vector<std::int64_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::int64_t a = parse_int(text.substr(0, dots), text);
    const std::int64_t b = parse_int(text.substr(dots + 2), text);
    for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_int(item, text));
  }
  if (out.empty()) throw InvalidParameter("empty range '" + text + "'");
  return out;
}

std::string bench_csv_row(const BenchRecord& r) {
  std::string params = r.params.dump();
  std::string quoted = "\"";
  for (char ch : params) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  char time[32];
  std::snprintf(time, sizeof time, "%.3f", r.wall_time_ms);
  std::ostringstream out;
  out << r.family << ',' << quoted << ',' << r.n << ',' << r.delta << ',' << r.algorithm << ',' << r.max_component
      << ',' << (r.claimed_bound ? std::to_string(*r.claimed_bound) : std::string()) << ',' << time;
  return out.str();
}

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidParameter("fit needs paired data");
  const std::size_t m = x.size();
  if (m < 2) throw InvalidParameter("fit needs at least two points");
  std::vector<double> lx(m), ly(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] <= 0 || y[i] <= 0) throw InvalidParameter("log-log fit needs positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw InvalidParameter("fit needs two distinct x values");
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(m));
  fit.points = m;
  return fit;
}

std::vector<BenchRecord> run_bench(const BenchSpec& spec) {
  if (spec.values.empty()) throw InvalidParameter("empty parameter range");
  std::vector<BenchRecord> records;
  for (std::int64_t value : spec.values) {
    const json params = params_for(spec.family, value, spec.seed);
    const Graph g = generate_family(spec.family, params);
    const auto start = std::chrono::steady_clock::now();
    const AlgoOutcome outcome = run_algorithm(g, spec.algorithm, spec.options);
    const auto stop = std::chrono::steady_clock::now();
    BenchRecord r;
    r.family = spec.family;
    r.params = params;
    r.n = g.num_vertices();
    r.delta = max_degree(g);
    r.algorithm = spec.algorithm;
    r.max_component = outcome.report.max_component;
    r.claimed_bound = outcome.claimed_bound;
    r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    records.push_back(std::move(r));
  }
  return records;
}

LogLogFit fit_bench(const std::vector<BenchRecord>& records) {
  std::vector<double> x, y;
  for (const auto& r : records) {
    x.push_back(r.family == "outerpath" ? r.delta : r.n);
    y.push_back(static_cast<double>(r.max_component));
  }
  return fit_loglog(x, y);
}

}  // namespace mcc
