// alpha_spectra: A_alpha spectra of graphs, bound reports and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 numeric failure.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aspec/bethe.hpp"
#include "aspec/bounds.hpp"
#include "aspec/eigen.hpp"
#include "aspec/error.hpp"
#include "aspec/graph.hpp"
#include "aspec/io.hpp"

namespace {

using namespace aspec;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Source {
  std::string name;
  Graph graph;
  std::optional<GeneralizedBetheSpec> bethe;
};

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid " + what + " '" + s + "'");
  }
  if (used != s.size()) throw ParseError("invalid " + what + " '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// Builtins: path:N star:N cycle:N Y:N F7 F8 F9 K14 bethe:D:K; anything else is an edge-list file.
Source resolve_source(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string& head = parts.empty() ? text : parts[0];
  auto arg = [&](std::size_t i) {
    if (parts.size() <= i) throw ParseError("builtin '" + head + "' needs an argument");
    return parse_int(parts[i], head + " argument");
  };
  try {
    if (head == "path" && parts.size() == 2) return {text, path(arg(1)), std::nullopt};
    if (head == "star" && parts.size() == 2) return {text, star(arg(1)), std::nullopt};
    if (head == "cycle" && parts.size() == 2) return {text, cycle(arg(1)), std::nullopt};
    if (head == "Y" && parts.size() == 2) return {text, smith_Y(arg(1)), std::nullopt};
    if (text == "F7") return {text, smith_F7(), std::nullopt};
    if (text == "F8") return {text, smith_F8(), std::nullopt};
    if (text == "F9") return {text, smith_F9(), std::nullopt};
    if (text == "K14") return {text, smith_K14(), std::nullopt};
    if (head == "bethe" && parts.size() == 3) {
      auto spec = bethe_spec(arg(1), arg(2));
      return {text, build_tree(spec), spec};
    }
  } catch (const ArgumentError& e) {
    throw ParseError(std::string("builtin '") + text + "': " + e.what());
  }
  return {text, read_edge_list(text), std::nullopt};
}

std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ParseError("invalid alpha '" + item + "'");
    }
    if (used != item.size() || !(v >= 0.0 && v <= 1.0)) throw ParseError("alpha '" + item + "' not in [0,1]");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty alpha list");
  return out;
}

struct Common {
  std::string alpha;
  bool json = false;
  bool csv = false;
  double tol = kDefaultBisectionTol;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_alpha) {
  c.alpha = default_alpha;
  cmd->add_option("--alpha,-a", c.alpha, "alpha value or comma list, each in [0,1]")->capture_default_str();
  auto* j = cmd->add_flag("--json", c.json, "JSON output");
  cmd->add_flag("--csv", c.csv, "CSV output")->excludes(j);
  cmd->add_option("--tol", c.tol, "bisection tolerance for the tridiagonal reduction")->capture_default_str();
  cmd->add_option("--out,-o", c.out, "write output to this path instead of stdout");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

double max_deviation(const Spectrum& s, const Graph& g, AlphaParam a) {
  const auto reduced = s.expanded();
  const auto dense = dense_eigen_oracle(assemble_alpha_matrix(g, a)).values;
  if (reduced.size() != dense.size()) throw ContractViolation("reduction multiplicities do not sum to the order");
  double dev = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i) dev = std::max(dev, std::abs(reduced[i] - dense[i]));
  return dev;
}

int emit_spectra(const Source& src, const Common& c, bool oracle_check) {
  const auto alphas = parse_alphas(c.alpha);
  if (!(c.tol > 0.0)) throw ParseError("--tol must be positive");
  Output out(c.out);
  auto& os = out.stream();
  json all = json::array();
  if (c.csv) write_spectrum_csv_header(os);
  for (double alpha : alphas) {
    const AlphaParam a(alpha);
    Spectrum s;
    std::optional<double> deviation;
    if (src.bethe) {
      s = bethe_spectrum(*src.bethe, a, Execution::parallel, c.tol);
      if (oracle_check) deviation = max_deviation(s, src.graph, a);
    } else {
      s = dense_spectrum(assemble_alpha_matrix(src.graph, a));
    }
    const char* method = src.bethe ? "reduction" : "dense";
    if (c.json) {
      json obj{{"source", src.name},
               {"alpha", round_sig(alpha)},
               {"order", src.graph.order()},
               {"method", method},
               {"total_multiplicity", s.total_multiplicity()},
               {"merges", s.merges},
               {"spectrum", to_json(s)}};
      if (deviation) obj["oracle_deviation"] = round_sig(*deviation);
      all.push_back(std::move(obj));
    } else if (c.csv) {
      write_spectrum_csv_rows(os, src.name, alpha, s);
    } else {
      os << "# " << src.name << "  alpha=" << format_number(alpha) << "  order=" << src.graph.order()
         << "  method=" << method << "  total multiplicity=" << s.total_multiplicity();
      if (s.merges > 0) os << "  merged=" << s.merges;
      os << '\n';
      if (deviation) os << "# max deviation from dense oracle: " << format_number(*deviation) << '\n';
      for (const auto& e : s.entries) os << format_number(e.lambda) << '\t' << e.mult << '\n';
    }
  }
  if (c.json) os << all.dump(2) << '\n';
  return 0;
}

int cmd_bounds(const Source& src, const Common& c) {
  const auto alphas = parse_alphas(c.alpha);
  std::vector<BoundsReport> reports;
  for (double alpha : alphas) reports.push_back(sandwich_bounds(src.graph, alpha, src.name));
  Output out(c.out);
  auto& os = out.stream();
  if (c.json) {
    json all = json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    os << all.dump(2) << '\n';
  } else if (c.csv) {
    write_bounds_csv(os, reports);
  } else {
    for (const auto& r : reports) {
      os << "# " << r.graph << "  n=" << r.n << "  alpha=" << format_number(r.alpha)
         << "  rho=" << format_number(r.rho_alpha) << "  rho(A)=" << format_number(r.rho_A)
         << "  rho(Q)=" << format_number(r.rho_Q) << "  Delta=" << r.delta << '\n';
      for (const auto& e : r.entries) {
        if (!e.applicable) continue;
        os << "  " << e.name << '\t' << side_name(e.side) << '\t' << format_number(e.value) << "\tslack "
           << format_number(e.slack) << (e.tight ? "\ttight" : "") << (e.holds(r.rho_alpha) ? "" : "\tVIOLATED")
           << '\n';
      }
    }
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.consistent();
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_perron(const Source& src, const Common& c) {
  const auto alphas = parse_alphas(c.alpha);
  if (!src.graph.is_connected()) throw ParseError("perron requires a connected graph");
  Output out(c.out);
  auto& os = out.stream();
  json all = json::array();
  if (c.csv) os << "source,alpha,vertex,x\n";
  for (double alpha : alphas) {
    if (alpha >= 1.0) throw ParseError("perron requires alpha < 1 (A_1 = D is reducible)");
    const auto p = perron(assemble_alpha_matrix(src.graph, AlphaParam(alpha)));
    if (c.json) {
      json vec = json::array();
      for (double x : p.vector) vec.push_back(round_sig(x));
      all.push_back({{"source", src.name}, {"alpha", round_sig(alpha)}, {"rho", round_sig(p.rho)},
                     {"iterations", p.iterations}, {"vector", std::move(vec)}});
    } else if (c.csv) {
      for (std::size_t v = 0; v < p.vector.size(); ++v) {
        os << src.name << ',' << format_number(alpha) << ',' << v << ',' << format_number(p.vector[v]) << '\n';
      }
    } else {
      os << "# " << src.name << "  alpha=" << format_number(alpha) << "  rho=" << format_number(p.rho) << '\n';
      for (std::size_t v = 0; v < p.vector.size(); ++v) os << v << '\t' << format_number(p.vector[v]) << '\n';
    }
  }
  if (c.json) os << all.dump(2) << '\n';
  return 0;
}

struct VerifyArgs {
  std::string suite;
  int max_n = 0;
  int k_max = 0;
  bool trees = false;
  bool serial = false;
};

std::vector<double> alphas_or(const Common& c, std::vector<double> fallback) {
  return c.alpha.empty() ? fallback : parse_alphas(c.alpha);
}

int cmd_verify(const VerifyArgs& v, const Common& c) {
  const Execution exec = v.serial ? Execution::serial : Execution::parallel;
  const std::vector<double> coarse{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<VerifyReport> reports;
  if (v.suite == "t1") {
    reports.push_back(verify_t1_tightness({3, 4, 5}, alphas_or(c, {0.0, 0.3, 0.5, 0.8, 1.0}), v.k_max ? v.k_max : 15,
                                          0.25));
  } else if (v.suite == "t2") {
    reports.push_back(verify_t2_exhaustive(v.max_n ? v.max_n : 8, alphas_or(c, coarse), exec));
  } else if (v.suite == "t3") {
    const auto cls = v.trees ? GraphClass::trees : GraphClass::connected;
    reports.push_back(verify_t3_exhaustive(v.max_n ? v.max_n : 6, alphas_or(c, coarse), cls, exec));
  } else if (v.suite == "paths") {
    const int n_max = v.max_n ? v.max_n : 50;
    reports.push_back(verify_paths(n_max, alphas_or(c, alpha_grid(20))));
    if (n_max >= 4) reports.push_back(verify_path_perron(4, std::min(n_max, 30), {0.0, 0.3, 0.7, 0.9}));
  } else if (v.suite == "bethe") {
    std::vector<GeneralizedBetheSpec> specs{spec_from_degrees({1, 3, 3, 4, 3}), spec_from_degrees({1, 4, 4, 3}),
                                            spec_from_degrees({1, 2, 3, 2})};
    for (int d = 2; d <= 6; ++d) specs.push_back(spec_from_degrees({1, d}));
    reports.push_back(verify_reduction(specs, alphas_or(c, coarse)));
    reports.push_back(verify_bethe_bounds({2, 3, 4}, v.k_max ? v.k_max : 12, alphas_or(c, alpha_grid(10))));
  } else if (v.suite == "smith") {
    reports.push_back(verify_smith());
  } else if (v.suite == "sandwich") {
    reports.push_back(verify_sandwich(standard_fixtures(), alphas_or(c, alpha_grid(10)), exec));
  } else {
    throw ParseError("unknown suite '" + v.suite + "' (expected t1, t2, t3, paths, bethe, smith, sandwich)");
  }

  Output out(c.out);
  auto& os = out.stream();
  bool ok = true;
  json all = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (c.json) {
      all.push_back(to_json(r));
      continue;
    }
    os << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  checks=" << r.checks << "  failures=" << r.failures
       << '\n';
    for (const auto& n : r.notes) os << "  " << n << '\n';
    for (const auto& x : r.counterexamples) {
      os << "  counterexample: " << x.graph << " alpha=" << format_number(x.alpha) << " rho=" << format_number(x.rho)
         << " ref=" << format_number(x.reference) << "  (" << x.reason << ")\n";
    }
  }
  if (c.json) os << all.dump(2) << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

void configure_threads() {
  const char* env = std::getenv("ALPHA_SPECTRA_THREADS");
  if (env == nullptr || *env == '\0') return;
  const int n = parse_int(env, "ALPHA_SPECTRA_THREADS");
  if (n < 0) throw ParseError("ALPHA_SPECTRA_THREADS must be >= 0");
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"A_alpha spectra of graphs and generalized Bethe trees"};
  app.require_subcommand(1);

  Common spectrum_opts, bethe_opts, gbethe_opts, bounds_opts, perron_opts, verify_opts;
  std::string source, degrees;
  int d = 0, k = 0;
  bool oracle_check = false;
  VerifyArgs vargs;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectrum of A_alpha(G)");
  spectrum_cmd->add_option("source", source, "builtin (path:N star:N cycle:N Y:N F7 F8 F9 K14 bethe:D:K) or edge-list file")
      ->required();
  spectrum_cmd->add_flag("--oracle-check", oracle_check, "cross-check reduction spectra against the dense oracle");
  add_common(spectrum_cmd, spectrum_opts, "0.5");

  auto* bethe_cmd = app.add_subcommand("bethe", "spectrum of the Bethe tree B(d,k) by tridiagonal reduction");
  bethe_cmd->add_option("d", d, "root degree (>= 2)")->required();
  bethe_cmd->add_option("k", k, "number of levels (>= 2)")->required();
  bethe_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the dense oracle");
  add_common(bethe_cmd, bethe_opts, "0.5");

  auto* gbethe_cmd = app.add_subcommand("gbethe", "spectrum of a generalized Bethe tree by tridiagonal reduction");
  gbethe_cmd->add_option("degrees", degrees, "level degrees from the leaves up, e.g. 1,3,3,4,3")->required();
  gbethe_cmd->add_flag("--oracle-check", oracle_check, "cross-check against the dense oracle");
  add_common(gbethe_cmd, gbethe_opts, "0.5");

  auto* bounds_cmd = app.add_subcommand("bounds", "spectral-radius bounds report");
  bounds_cmd->add_option("source", source, "builtin or edge-list file")->required();
  add_common(bounds_cmd, bounds_opts, "0,0.25,0.5,0.75,1");

  auto* perron_cmd = app.add_subcommand("perron", "Perron root and vector of A_alpha(G)");
  perron_cmd->add_option("source", source, "builtin or edge-list file")->required();
  add_common(perron_cmd, perron_opts, "0");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", vargs.suite, "t1, t2, t3, paths, bethe, smith or sandwich")->required();
  verify_cmd->add_option("--max-n", vargs.max_n, "largest order enumerated");
  verify_cmd->add_option("--k-max", vargs.k_max, "largest number of Bethe levels");
  verify_cmd->add_flag("--trees", vargs.trees, "t3: enumerate trees instead of connected graphs");
  verify_cmd->add_flag("--serial", vargs.serial, "use the serial reference enumeration");
  add_common(verify_cmd, verify_opts, "");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    configure_threads();
    if (*spectrum_cmd) return emit_spectra(resolve_source(source), spectrum_opts, oracle_check);
    if (*bethe_cmd) {
      GeneralizedBetheSpec spec = [&] {
        try {
          return bethe_spec(d, k);
        } catch (const ArgumentError& e) {
          throw ParseError(e.what());
        }
      }();
      Source src{"bethe:" + std::to_string(d) + ":" + std::to_string(k), build_tree(spec), spec};
      return emit_spectra(src, bethe_opts, oracle_check);
    }
    if (*gbethe_cmd) {
      auto spec = parse_degree_list(degrees);
      Source src{spec.to_string(), build_tree(spec), spec};
      return emit_spectra(src, gbethe_opts, oracle_check);
    }
    if (*bounds_cmd) return cmd_bounds(resolve_source(source), bounds_opts);
    if (*perron_cmd) return cmd_perron(resolve_source(source), perron_opts);
    if (*verify_cmd) return cmd_verify(vargs, verify_opts);
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
