#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "flatmod/halfplane.hpp"
#include "flatmod/metrics.hpp"

namespace flatmod::io {

/// Parses `[-]<real>(+|-)<real>i` with plain decimals, e.g. "0.5+0.866i".
/// Throws std::invalid_argument on malformed text or Im <= 0.
HPoint parse_hpoint(std::string_view text);

/// "a+bi" with the shortest round-trip representation of each part.
std::string format_hpoint(const HPoint& z);

/// Fixed 12-digit decimal used for plain and CSV output.
std::string format_number(double x);

nlohmann::ordered_json to_json(const HPoint& z);
HPoint hpoint_from_json(const nlohmann::ordered_json& j);

/// Field names follow MetricReport. Doubles are written in round-trip form.
nlohmann::ordered_json to_json(const MetricReport& report);
MetricReport report_from_json(const nlohmann::ordered_json& j);

/// tau_from,tau_to,lambda,teich,kappa_enumerated,kappa_gap,kappa_prime_fwd,
/// kappa_prime_rev,sorvali_d,s_kappa_prime,wp,poincare
std::string csv_header();
std::string to_csv_row(const MetricReport& report);

}  // namespace flatmod::io
