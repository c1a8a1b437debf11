#include "aspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include "aspec/error.hpp"

namespace aspec {

double round_sig(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

json to_json(const Spectrum& s) {
  json arr = json::array();
  for (const auto& e : s.entries) arr.push_back({{"lambda", round_sig(e.lambda)}, {"mult", e.mult}});
  return arr;
}

Spectrum spectrum_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("spectrum JSON must be an array");
  Spectrum s;
  try {
    for (const auto& e : j) s.entries.push_back({e.at("lambda").get<double>(), e.at("mult").get<std::int64_t>()});
  } catch (const json::exception& e) {
    throw ParseError(std::string("spectrum JSON: ") + e.what());
  }
  return s;
}

json to_json(const BoundsReport& r) {
  json bounds = json::array();
  json violated = json::array();
  for (const auto& e : r.entries) {
    bounds.push_back({{"name", e.name},
                      {"side", side_name(e.side)},
                      {"value", round_sig(e.value)},
                      {"slack", round_sig(e.slack)},
                      {"tight", e.tight},
                      {"applicable", e.applicable}});
    if (e.applicable && !e.holds(r.rho_alpha)) violated.push_back(e.name);
  }
  return {{"graph", r.graph},
          {"n", r.n},
          {"alpha", round_sig(r.alpha)},
          {"rho", round_sig(r.rho_alpha)},
          {"rho_complement", round_sig(r.rho_complement)},
          {"rho_A", round_sig(r.rho_A)},
          {"rho_Q", round_sig(r.rho_Q)},
          {"delta", r.delta},
          {"bounds", std::move(bounds)},
          {"counterexamples", std::move(violated)}};
}

BoundsReport bounds_from_json(const json& j) {
  BoundsReport r;
  try {
    r.graph = j.at("graph").get<std::string>();
    r.n = j.at("n").get<int>();
    r.alpha = j.at("alpha").get<double>();
    r.rho_alpha = j.at("rho").get<double>();
    r.rho_complement = j.at("rho_complement").get<double>();
    r.rho_A = j.at("rho_A").get<double>();
    r.rho_Q = j.at("rho_Q").get<double>();
    r.delta = j.at("delta").get<int>();
    for (const auto& b : j.at("bounds")) {
      BoundEntry e;
      e.name = b.at("name").get<std::string>();
      const auto side = b.at("side").get<std::string>();
      if (side != "upper" && side != "lower") throw ParseError("bound side must be upper or lower");
      e.side = side == "upper" ? Side::upper : Side::lower;
      e.value = b.at("value").get<double>();
      e.slack = b.at("slack").get<double>();
      e.tight = b.at("tight").get<bool>();
      e.applicable = b.at("applicable").get<bool>();
      r.entries.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bounds JSON: ") + e.what());
  }
  return r;
}

json to_json(const VerifyReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"graph", c.graph},
                   {"n", c.n},
                   {"alpha", round_sig(c.alpha)},
                   {"rho", round_sig(c.rho)},
                   {"reference", round_sig(c.reference)},
                   {"reason", c.reason}});
  }
  return {{"suite", r.suite},
          {"pass", r.passed()},
          {"checks", r.checks},
          {"failures", r.failures},
          {"counterexamples", std::move(cex)},
          {"notes", r.notes}};
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsReport>& reports) {
  out << "graph,n,alpha,rho,bound,side,value,slack,tight,applicable\n";
  for (const auto& r : reports) {
    for (const auto& e : r.entries) {
      out << csv_field(r.graph) << ',' << r.n << ',' << format_number(r.alpha) << ',' << format_number(r.rho_alpha) << ','
          << e.name << ',' << side_name(e.side) << ',' << format_number(e.value) << ',' << format_number(e.slack)
          << ',' << (e.tight ? 1 : 0) << ',' << (e.applicable ? 1 : 0) << '\n';
    }
  }
}

void write_spectrum_csv_header(std::ostream& out) { out << "source,alpha,lambda,mult\n"; }

void write_spectrum_csv_rows(std::ostream& out, const std::string& source, double alpha, const Spectrum& s) {
  for (const auto& e : s.entries) {
    out << csv_field(source) << ',' << format_number(alpha) << ',' << format_number(e.lambda) << ',' << e.mult << '\n';
  }
}

}  // namespace aspec
