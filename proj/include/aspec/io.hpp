#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "aspec/bethe.hpp"
#include "aspec/bounds.hpp"

namespace aspec {

using json = nlohmann::json;

inline constexpr int kSignificantDigits = 12;

/// Nearest double to x printed with 12 significant digits.
double round_sig(double x, int digits = kSignificantDigits);
/// "%.12g".
std::string format_number(double x);

/// [{"lambda": ..., "mult": ...}, ...]
json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

/// {graph, n, alpha, rho, rho_A, rho_Q, rho_complement, delta,
///  bounds: [{name, side, value, slack, tight, applicable}], counterexamples: [...]}
json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const json& j);

json to_json(const VerifyReport& r);

/// One row per (graph, alpha, bound).
void write_bounds_csv(std::ostream& out, const std::vector<BoundsReport>& reports);
/// One row per (alpha, eigenvalue).
void write_spectrum_csv_header(std::ostream& out);
void write_spectrum_csv_rows(std::ostream& out, const std::string& source, double alpha, const Spectrum& s);

}  // namespace aspec
