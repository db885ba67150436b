#include "report_io.hpp"

#include <charconv>
#include <cstdio>
#include <regex>
#include <stdexcept>
#include <system_error>

namespace flatmod::io {

namespace {

double parse_decimal(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::fixed);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("invalid decimal '" + text + "'");
  }
  return value;
}

std::string shortest_fixed(double x) {
  char buf[512];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  if (ec != std::errc()) throw std::runtime_error("format_hpoint: value too long");
  return {buf, ptr};
}

}  // namespace

HPoint parse_hpoint(std::string_view text) {
  static const std::regex pattern(R"(^(-?[0-9]+(?:\.[0-9]+)?)([+-][0-9]+(?:\.[0-9]+)?)i$)");
  const std::string s(text);
  std::smatch match;
  if (!std::regex_match(s, match, pattern)) {
    throw std::invalid_argument("malformed complex literal '" + s +
                                "' (expected a+bi, e.g. 0.5+0.866i)");
  }
  return HPoint(parse_decimal(match[1].str()), parse_decimal(match[2].str()));
}

std::string format_hpoint(const HPoint& z) {
  return shortest_fixed(z.re()) + "+" + shortest_fixed(z.im()) + "i";
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

nlohmann::ordered_json to_json(const HPoint& z) { return {{"re", z.re()}, {"im", z.im()}}; }

HPoint hpoint_from_json(const nlohmann::ordered_json& j) {
  return HPoint(j.at("re").get<double>(), j.at("im").get<double>());
}

nlohmann::ordered_json to_json(const MetricReport& r) {
  nlohmann::ordered_json j;
  j["tau_from"] = to_json(r.tau_from);
  j["tau_to"] = to_json(r.tau_to);
  j["N"] = r.bound;
  j["lambda"] = r.lambda;
  j["teich"] = r.teich;
  j["kappa_enumerated"] = r.kappa_enumerated;
  j["kappa_witness"] = {r.kappa_witness.m(), r.kappa_witness.n()};
  j["kappa_gap"] = r.kappa_gap;
  j["kappa_attained"] = r.kappa_attained;
  j["kappa_prime_fwd"] = r.kappa_prime_fwd;
  j["kappa_prime_rev"] = r.kappa_prime_rev;
  j["sorvali_d"] = r.sorvali_d;
  j["s_kappa_prime"] = r.s_kappa_prime;
  j["wp"] = r.wp;
  j["poincare"] = r.poincare;
  j["sorvali_inequality"] = {{"log_k", r.sorvali.log_k}, {"half_log_k", r.sorvali.half_log_k}};
  return j;
}

MetricReport report_from_json(const nlohmann::ordered_json& j) {
  const auto& witness = j.at("kappa_witness");
  return MetricReport{
      .tau_from = hpoint_from_json(j.at("tau_from")),
      .tau_to = hpoint_from_json(j.at("tau_to")),
      .bound = j.at("N").get<int>(),
      .lambda = j.at("lambda").get<double>(),
      .teich = j.at("teich").get<double>(),
      .kappa_enumerated = j.at("kappa_enumerated").get<double>(),
      .kappa_witness = CurveClass(witness.at(0).get<std::int64_t>(),
                                  witness.at(1).get<std::int64_t>()),
      .kappa_gap = j.at("kappa_gap").get<double>(),
      .kappa_attained = j.at("kappa_attained").get<bool>(),
      .kappa_prime_fwd = j.at("kappa_prime_fwd").get<double>(),
      .kappa_prime_rev = j.at("kappa_prime_rev").get<double>(),
      .sorvali_d = j.at("sorvali_d").get<double>(),
      .s_kappa_prime = j.at("s_kappa_prime").get<double>(),
      .wp = j.at("wp").get<double>(),
      .poincare = j.at("poincare").get<double>(),
      .sorvali = {j.at("sorvali_inequality").at("log_k").get<bool>(),
                  j.at("sorvali_inequality").at("half_log_k").get<bool>()},
  };
}

std::string csv_header() {
  return "tau_from,tau_to,lambda,teich,kappa_enumerated,kappa_gap,kappa_prime_fwd,"
         "kappa_prime_rev,sorvali_d,s_kappa_prime,wp,poincare";
}

std::string to_csv_row(const MetricReport& r) {
  std::string row = format_hpoint(r.tau_from) + "," + format_hpoint(r.tau_to);
  for (const double v : {r.lambda, r.teich, r.kappa_enumerated, r.kappa_gap, r.kappa_prime_fwd,
                         r.kappa_prime_rev, r.sorvali_d, r.s_kappa_prime, r.wp, r.poincare}) {
    row += "," + format_number(v);
  }
  return row;
}

}  // namespace flatmod::io
