#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "flatmod/extremal.hpp"
#include "flatmod/metrics.hpp"
#include "report_io.hpp"

namespace flatmod::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string from;
  std::string to;
  std::string metric = "lambda";
  int bound = kDefaultCurveBound;
  int samples = 100;
  std::string format = "plain";
  double r = 0.0;
  double eps = 0.0;
  double delta = 0.0;
  int grid = 60;
  bool full = false;
  std::uint64_t seed = 20240611;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using DistanceFn = std::function<double(const HPoint&, const HPoint&, int)>;

const std::map<std::string, DistanceFn>& distances() {
  static const std::map<std::string, DistanceFn> table = {
      {"lambda", [](const HPoint& a, const HPoint& b, int) { return lambda_metric(a, b); }},
      {"teich", [](const HPoint& a, const HPoint& b, int) { return teichmuller_metric(a, b); }},
      {"kappa", [](const HPoint& a, const HPoint& b, int n) { return kappa_metric(a, b, n).value; }},
      {"kappa-prime", [](const HPoint& a, const HPoint& b, int n) { return kappa_prime(a, b, n); }},
      {"sorvali",
       [](const HPoint& a, const HPoint& b, int n) { return sorvali_dilatation(a, b, n); }},
      {"skappa-prime",
       [](const HPoint& a, const HPoint& b, int n) { return s_kappa_prime(a, b, n); }},
      {"wp", [](const HPoint& a, const HPoint& b, int) { return wp_distance(a, b); }},
      {"poincare", [](const HPoint& a, const HPoint& b, int) { return poincare_distance(a, b); }},
  };
  return table;
}

HPoint required_point(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  try {
    return io::parse_hpoint(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

void emit_dist(const Options& o, std::ostream& out) {
  const HPoint from = required_point(o.from, "--from");
  const HPoint to = required_point(o.to, "--to");
  const double value = distances().at(o.metric)(from, to, o.bound);
  if (o.format == "json") {
    out << json{{"metric", o.metric},
                {"tau_from", io::to_json(from)},
                {"tau_to", io::to_json(to)},
                {"N", o.bound},
                {"value", value}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "tau_from,tau_to,metric,value\n"
        << io::format_hpoint(from) << "," << io::format_hpoint(to) << "," << o.metric << ","
        << io::format_number(value) << "\n";
  } else {
    out << io::format_number(value) << "\n";
  }
}

void emit_report(const Options& o, std::ostream& out) {
  const MetricReport report =
      full_report(required_point(o.from, "--from"), required_point(o.to, "--to"), o.bound);
  if (o.format == "json") {
    out << io::to_json(report).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << io::csv_header() << "\n" << io::to_csv_row(report) << "\n";
  } else {
    const json j = io::to_json(report);
    out << "tau_from " << io::format_hpoint(report.tau_from) << "\n"
        << "tau_to " << io::format_hpoint(report.tau_to) << "\n"
        << "N " << report.bound << "\n";
    for (const char* key : {"lambda", "teich", "kappa_enumerated", "kappa_gap", "kappa_prime_fwd",
                            "kappa_prime_rev", "sorvali_d", "s_kappa_prime", "wp", "poincare"}) {
      out << key << " " << io::format_number(j.at(key).get<double>()) << "\n";
    }
    out << "kappa_witness (" << report.kappa_witness.m() << "," << report.kappa_witness.n()
        << ") " << (report.kappa_attained ? "attained" : "approached, not attained") << "\n"
        << "sorvali_inequality log_k=" << (report.sorvali.log_k ? "holds" : "fails")
        << " half_log_k=" << (report.sorvali.half_log_k ? "holds" : "fails") << "\n";
  }
}

void emit_geodesic(const Options& o, std::ostream& out) {
  const HPoint from = required_point(o.from, "--from");
  const HPoint to = required_point(o.to, "--to");
  if (from == to) throw UsageError("geodesic: --from and --to must differ");
  const auto& dist = distances().at(o.metric);

  json rows = json::array();
  if (o.format == "csv") out << "t,tau,distance\n";
  for (int k = 0; k < o.samples; ++k) {
    const double t = static_cast<double>(k) / (o.samples - 1);
    const HPoint z = geodesic_point(from, to, t);
    const double d = dist(from, z, o.bound);
    if (o.format == "json") {
      rows.push_back({{"t", t}, {"tau", io::to_json(z)}, {"distance", d}});
    } else {
      const char sep = o.format == "csv" ? ',' : ' ';
      out << io::format_number(t) << sep << io::format_hpoint(z) << sep << io::format_number(d)
          << "\n";
    }
  }
  if (o.format == "json") out << rows.dump(2) << "\n";
}

void emit_reduce(const Options& o, std::ostream& out) {
  const Reduction red = reduce_to_fundamental_domain(required_point(o.from, "--from"));
  const IntMatrix2& m = red.witness;
  if (o.format == "json") {
    out << json{{"point", io::to_json(red.point)},
                {"witness", {{m.a(), m.b()}, {m.c(), m.d()}}}}
               .dump(2)
        << "\n";
  } else if (o.format == "csv") {
    out << "point,a,b,c,d\n"
        << io::format_hpoint(red.point) << "," << m.a() << "," << m.b() << "," << m.c() << ","
        << m.d() << "\n";
  } else {
    out << io::format_hpoint(red.point) << " [[" << m.a() << "," << m.b() << "],[" << m.c() << ","
        << m.d() << "]]\n";
  }
}

void emit_family(const Options& o, std::ostream& out) {
  if (const ParamCheck check = validate_params(o.r, o.eps, o.delta); !check) {
    throw UsageError("family: invalid parameters: " + check.reason);
  }
  const PiecewiseStretchMap f(o.r, o.eps, o.delta);
  const LinearMap2 bottom = f.bottom_block();
  const LinearMap2 top = f.top_block();
  const double lipschitz = family_lipschitz_constant(f);
  const double distortion = family_qc_distortion(f);
  const double sampled = o.grid >= 2 ? sampled_family_lipschitz(f, o.grid) : 0.0;

  if (o.format == "json") {
    json j{{"r", f.r()},
           {"eps", f.eps()},
           {"delta", f.delta()},
           {"valid", true},
           {"seam", f.seam()},
           {"bottom_block", {bottom.a11(), bottom.a22()}},
           {"top_block", {top.a11(), top.a22()}},
           {"lipschitz", lipschitz},
           {"qc_distortion", distortion},
           {"affine_qc_distortion", f.r() * f.r()}};
    if (o.grid >= 2) j["sampled_lipschitz"] = sampled;
    out << j.dump(2) << "\n";
    return;
  }
  const char sep = o.format == "csv" ? ',' : ' ';
  if (o.format == "csv") out << "key,value\n";
  auto line = [&](const char* key, double v) { out << key << sep << io::format_number(v) << "\n"; };
  line("r", f.r());
  line("eps", f.eps());
  line("delta", f.delta());
  line("seam", f.seam());
  line("bottom_block_x", bottom.a11());
  line("bottom_block_y", bottom.a22());
  line("top_block_x", top.a11());
  line("top_block_y", top.a22());
  line("lipschitz", lipschitz);
  line("qc_distortion", distortion);
  line("affine_qc_distortion", f.r() * f.r());
  if (o.grid >= 2) line("sampled_lipschitz", sampled);
}

int emit_verify(const Options& o, std::ostream& out) {
  const auto results =
      checks::run_all(o.full ? checks::Scale::full() : checks::Scale::quick(), o.seed);
  bool all = true;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " :: " << r.detail
        << "\n";
    all = all && r.passed;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Distances on the Teichmuller space of the torus", "flatmod"};
  app.require_subcommand(1);

  std::vector<std::string> metric_names;
  for (const auto& [name, fn] : distances()) metric_names.push_back(name);
  const auto formats = CLI::IsMember({"json", "csv", "plain"});

  auto add_points = [&](CLI::App* sub, bool with_to) {
    sub->add_option("--from", o.from, "Start point, e.g. 0+1i")->required();
    if (with_to) sub->add_option("--to", o.to, "End point, e.g. 0.5+0.866i")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", o.bound, "Curve enumeration bound max(|m|,|n|)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json, csv or plain")->check(formats);
  };

  auto* dist = app.add_subcommand("dist", "Distance between two points");
  add_points(dist, true);
  add_common(dist);
  dist->add_option("--metric", o.metric)->check(CLI::IsMember(metric_names));

  auto* report = app.add_subcommand("report", "All distances between two points");
  add_points(report, true);
  add_common(report);

  auto* geodesic = app.add_subcommand("geodesic", "Tabulate distances along the geodesic");
  add_points(geodesic, true);
  add_common(geodesic);
  geodesic->add_option("--metric", o.metric)->check(CLI::IsMember(metric_names));
  geodesic->add_option("--samples", o.samples, "Number of rows (>= 2)")
      ->check(CLI::Range(2, 1 << 24));

  auto* reduce = app.add_subcommand("reduce", "Reduce to the modular fundamental domain");
  add_points(reduce, false);
  reduce->add_option("--format", o.format)->check(formats);

  auto* family = app.add_subcommand("family", "Inspect a piecewise extremal Lipschitz map");
  family->add_option("--r", o.r)->required();
  family->add_option("--eps", o.eps)->required();
  family->add_option("--delta", o.delta)->required();
  family->add_option("--grid", o.grid, "Grid for the sampled Lipschitz estimate (0 = skip)")
      ->check(CLI::NonNegativeNumber);
  family->add_option("--format", o.format)->check(formats);

  auto* verify = app.add_subcommand("verify", "Run the cross-validation suite");
  verify->add_flag("--full", o.full, "Use the full sample counts");
  verify->add_option("--seed", o.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*dist) emit_dist(o, out);
    if (*report) emit_report(o, out);
    if (*geodesic) emit_geodesic(o, out);
    if (*reduce) emit_reduce(o, out);
    if (*family) emit_family(o, out);
    if (*verify) return emit_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace flatmod::cli
