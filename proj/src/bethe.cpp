#include "aspec/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "aspec/error.hpp"

namespace aspec {

GeneralizedBetheSpec GeneralizedBetheSpec::from_degrees(std::vector<int> degrees) {
  const int k = static_cast<int>(degrees.size());
  if (k < 2) throw InvalidDegreeSequence("a generalized Bethe tree needs at least 2 levels");
  if (degrees[0] != 1) throw InvalidDegreeSequence("leaf degree d_1 must be 1");
  for (int j = 1; j < k; ++j) {
    if (degrees[j] < 2) {
      throw InvalidDegreeSequence("degree d_" + std::to_string(j + 1) + " must be >= 2, got " +
                                  std::to_string(degrees[j]));
    }
  }
  GeneralizedBetheSpec s;
  s.degrees_ = std::move(degrees);
  s.counts_.assign(k, 0);
  s.counts_[k - 1] = 1;
  s.counts_[k - 2] = s.degrees_[k - 1];  // the root has d_k children
  constexpr std::int64_t kMax = std::int64_t{1} << 52;
  for (int j = k - 3; j >= 0; --j) {
    // every non-root internal vertex has d - 1 children
    const std::int64_t children = s.degrees_[j + 1] - 1;
    if (s.counts_[j + 1] > kMax / children) throw InvalidDegreeSequence("tree order overflows");
    s.counts_[j] = children * s.counts_[j + 1];
  }
  s.ratios_.resize(k - 1);
  for (int j = 0; j + 1 < k; ++j) s.ratios_[j] = s.counts_[j] / s.counts_[j + 1];
  for (auto c : s.counts_) {
    if (s.order_ > kMax - c) throw InvalidDegreeSequence("tree order overflows");
    s.order_ += c;
  }
  return s;
}

std::int64_t GeneralizedBetheSpec::weight(int j) const {
  if (j == levels()) return 1;
  return count(j) - count(j + 1);
}

std::string GeneralizedBetheSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

GeneralizedBetheSpec spec_from_degrees(std::vector<int> degrees) {
  return GeneralizedBetheSpec::from_degrees(std::move(degrees));
}

GeneralizedBetheSpec parse_degree_list(const std::string& text) {
  std::vector<int> degrees;
  if (text.find_first_not_of(" \t") == std::string::npos) throw ParseError("degree list is empty");
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("degree list: empty entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw ParseError("degree list: '" + item + "' is not an integer");
    }
    if (used != item.size() || v < 0 || v > std::numeric_limits<int>::max()) {
      throw ParseError("degree list: '" + item + "' is not a valid degree");
    }
    degrees.push_back(static_cast<int>(v));
  }
  if (!text.empty() && text.back() == ',') throw ParseError("degree list: trailing comma");
  return spec_from_degrees(std::move(degrees));
}

GeneralizedBetheSpec bethe_spec(int d, int k) {
  if (d < 2 || k < 2) throw ArgumentError("B(d,k) requires d >= 2 and k >= 2");
  std::vector<int> degrees(k, d + 1);
  degrees.front() = 1;
  degrees.back() = d;
  return spec_from_degrees(std::move(degrees));
}

Graph build_tree(const GeneralizedBetheSpec& spec) {
  if (spec.order() > std::numeric_limits<int>::max() / 2) {
    throw ArgumentError("tree too large to materialize");
  }
  const int k = spec.levels();
  std::vector<std::int64_t> offset(k + 1, 0);
  for (int j = 1; j <= k; ++j) offset[j] = offset[j - 1] + spec.count(j);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.order() - 1));
  for (int j = 1; j < k; ++j) {
    const std::int64_t m = spec.ratio(j);
    for (std::int64_t t = 0; t < spec.count(j); ++t) {
      edges.emplace_back(static_cast<int>(offset[j - 1] + t), static_cast<int>(offset[j] + t / m));
    }
  }
  return Graph(static_cast<int>(spec.order()), std::move(edges));
}

SymTridiagonal tridiagonal_T(const GeneralizedBetheSpec& spec, AlphaParam a, int j) {
  if (j < 1 || j > spec.levels()) {
    throw ArgumentError("T_j index " + std::to_string(j) + " outside 1.." + std::to_string(spec.levels()));
  }
  std::vector<double> diag(j), off(j - 1);
  for (int i = 1; i <= j; ++i) diag[i - 1] = a.alpha() * spec.degree(i);
  // m_i = d_{i+1} - 1 below the root and m_{k-1} = d_k at the root.
  for (int i = 1; i < j; ++i) off[i - 1] = a.beta() * std::sqrt(static_cast<double>(spec.ratio(i)));
  return SymTridiagonal(std::move(diag), std::move(off));
}

namespace {

// P_0..P_upto at lambda.
std::vector<double> P_sequence(const GeneralizedBetheSpec& spec, AlphaParam a, int upto, double lambda) {
  std::vector<double> p(upto + 1);
  p[0] = 1.0;
  if (upto >= 1) p[1] = lambda - a.alpha();
  const double b2 = a.beta() * a.beta();
  for (int j = 2; j <= upto; ++j) {
    p[j] = (lambda - a.alpha() * spec.degree(j)) * p[j - 1] -
           b2 * static_cast<double>(spec.ratio(j - 1)) * p[j - 2];
  }
  return p;
}

}  // namespace

double eval_P(const GeneralizedBetheSpec& spec, AlphaParam a, int j, double lambda) {
  if (j < 0 || j > spec.levels()) throw ArgumentError("P_j index out of range");
  return P_sequence(spec, a, j, lambda)[j];
}

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog char_poly_eval(const GeneralizedBetheSpec& spec, AlphaParam a, double lambda) {
  const int k = spec.levels();
  const auto p = P_sequence(spec, a, k, lambda);
  constexpr std::int64_t kPlainProductMaxOrder = 64;
  if (spec.order() <= kPlainProductMaxOrder) {
    double phi = 1.0;
    for (int j = 1; j <= k; ++j) {
      for (std::int64_t w = spec.weight(j); w > 0; --w) phi *= p[j];
    }
    if (phi == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    return {phi > 0.0 ? 1 : -1, std::log(std::abs(phi))};
  }
  SignedLog out{1, 0.0};
  for (int j = 1; j <= k; ++j) {
    const std::int64_t w = spec.weight(j);
    if (w == 0) continue;
    if (p[j] == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    out.log_abs += static_cast<double>(w) * std::log(std::abs(p[j]));
    if (p[j] < 0.0 && (w % 2 == 1)) out.sign = -out.sign;
  }
  return out;
}

std::int64_t Spectrum::total_multiplicity() const {
  std::int64_t s = 0;
  for (const auto& e : entries) s += e.mult;
  return s;
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(total_multiplicity()));
  for (const auto& e : entries) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.lambda);
  return out;
}

Spectrum consolidate(std::vector<std::vector<SpectrumEntry>> groups) {
  struct Tagged {
    double lambda;
    std::int64_t mult;
    std::size_t group;
  };
  std::vector<Tagged> all;
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (const auto& e : groups[g])
      if (e.mult > 0) all.push_back({e.lambda, e.mult, g});
  std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) {
    return x.lambda < y.lambda || (x.lambda == y.lambda && x.group < y.group);
  });

  Spectrum s;
  std::size_t i = 0;
  while (i < all.size()) {
    double weighted = all[i].lambda * static_cast<double>(all[i].mult);
    std::int64_t mult = all[i].mult;
    double last = all[i].lambda;
    std::size_t j = i + 1;
    for (; j < all.size(); ++j) {
      if (all[j].lambda - last > kConsolidationTol * std::max(1.0, std::abs(last))) break;
      if (all[j].group != all[j - 1].group) ++s.merges;
      weighted += all[j].lambda * static_cast<double>(all[j].mult);
      mult += all[j].mult;
      last = all[j].lambda;
    }
    s.entries.push_back({weighted / static_cast<double>(mult), mult});
    i = j;
  }
  return s;
}

Spectrum dense_spectrum(const DenseSymMatrix& m) {
  const auto values = dense_eigen_oracle(m).values;
  std::vector<SpectrumEntry> group;
  group.reserve(values.size());
  for (double v : values) group.push_back({v, 1});
  return consolidate({std::move(group)});
}

Spectrum bethe_spectrum(const GeneralizedBetheSpec& spec, AlphaParam a, Execution exec, double tol) {
  // Exceptions must not escape the parallel region.
  if (!(tol > 0.0)) throw ArgumentError("bisection tolerance must be positive");
  const int k = spec.levels();
  std::vector<std::vector<SpectrumEntry>> groups(k);
  auto solve_level = [&](int j) {
    const std::int64_t w = spec.weight(j);
    if (w == 0) return;
    auto values = tridiagonal_eigenvalues(tridiagonal_T(spec, a, j), tol);
    auto& g = groups[j - 1];
    g.reserve(values.size());
    for (double v : values) g.push_back({v, w});
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 1; j <= k; ++j) solve_level(j);
  } else {
    for (int j = 1; j <= k; ++j) solve_level(j);
  }
  return consolidate(std::move(groups));
}

double bethe_spectral_radius(const GeneralizedBetheSpec& spec, AlphaParam a, double tol) {
  return tridiagonal_max_eigenvalue(tridiagonal_T(spec, a, spec.levels()), tol);
}

}  // namespace aspec
