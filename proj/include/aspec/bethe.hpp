#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aspec/eigen.hpp"
#include "aspec/graph.hpp"

namespace aspec {

/// Rooted tree whose k levels each have a single vertex degree. Everything is
/// indexed from the leaf level (j = 1) up to the root (j = k); the vectors
/// below are 0-based, so degrees()[0] is d_1.
class GeneralizedBetheSpec {
 public:
  /// Throws InvalidDegreeSequence unless d_1 = 1, d_j >= 2 (j >= 2), k >= 2.
  static GeneralizedBetheSpec from_degrees(std::vector<int> degrees);

  int levels() const { return static_cast<int>(degrees_.size()); }
  const std::vector<int>& degrees() const { return degrees_; }
  /// n_j: vertices on level j.
  const std::vector<std::int64_t>& counts() const { return counts_; }
  /// m_j = n_j / n_{j+1}, j = 1..k-1.
  const std::vector<std::int64_t>& ratios() const { return ratios_; }
  std::int64_t order() const { return order_; }

  int degree(int j) const { return degrees_[j - 1]; }
  std::int64_t count(int j) const { return counts_[j - 1]; }
  std::int64_t ratio(int j) const { return ratios_[j - 1]; }
  /// Multiplicity with which Spec(T_j) enters the spectrum: n_j - n_{j+1}, or 1 for j = k.
  std::int64_t weight(int j) const;

  std::string to_string() const;  // "1,3,3,4,3"

  friend bool operator==(const GeneralizedBetheSpec&, const GeneralizedBetheSpec&) = default;

 private:
  std::vector<int> degrees_;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> ratios_;
  std::int64_t order_ = 0;
};

GeneralizedBetheSpec spec_from_degrees(std::vector<int> degrees);
/// Comma-separated degree list, e.g. "1,3,3,4,3".
GeneralizedBetheSpec parse_degree_list(const std::string& text);
/// B(d,k): degrees (1, d+1, ..., d+1, d).
GeneralizedBetheSpec bethe_spec(int d, int k);

/// Labels leaves first and the root last, left to right inside a level, so
/// A_alpha of the result has the level-block tridiagonal layout.
Graph build_tree(const GeneralizedBetheSpec& spec);

/// T_j, the j x j leading block of the k x k reduced tridiagonal matrix.
SymTridiagonal tridiagonal_T(const GeneralizedBetheSpec& spec, AlphaParam a, int j);

/// P_j(lambda) from P_0 = 1, P_1 = lambda - alpha and the three-term recursion.
double eval_P(const GeneralizedBetheSpec& spec, AlphaParam a, int j, double lambda);

/// Signed logarithmic magnitude: value = sign * exp(log_abs).
struct SignedLog {
  int sign = 0;  // -1, 0, +1
  double log_abs = 0.0;
  double value() const;
};

/// Characteristic polynomial of A_alpha(B_k) at lambda via the P_j product.
SignedLog char_poly_eval(const GeneralizedBetheSpec& spec, AlphaParam a, double lambda);

struct SpectrumEntry {
  double lambda = 0.0;
  std::int64_t mult = 0;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Consolidated spectrum: eigenvalues strictly increasing, multiplicities
/// summing to the matrix order.
struct Spectrum {
  std::vector<SpectrumEntry> entries;
  /// Number of merges between eigenvalues coming from different sources.
  int merges = 0;

  std::int64_t total_multiplicity() const;
  double max() const { return entries.back().lambda; }
  /// Flat multiset, ascending.
  std::vector<double> expanded() const;
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

inline constexpr double kConsolidationTol = 1e-8;

/// Merge weighted eigenvalue lists. Values within
/// kConsolidationTol * max(1, |lambda|) of their neighbour are merged.
Spectrum consolidate(std::vector<std::vector<SpectrumEntry>> groups);
/// Dense-path spectrum of any symmetric matrix, consolidated the same way.
Spectrum dense_spectrum(const DenseSymMatrix& m);

enum class Execution { serial, parallel };

/// Full A_alpha spectrum of the generalized Bethe tree from the k reduced
/// tridiagonal eigenproblems.
Spectrum bethe_spectrum(const GeneralizedBetheSpec& spec, AlphaParam a,
                        Execution exec = Execution::parallel, double tol = kDefaultBisectionTol);

/// Largest eigenvalue of T_k, which is rho(A_alpha(B_k)).
double bethe_spectral_radius(const GeneralizedBetheSpec& spec, AlphaParam a, double tol = 1e-13);

}  // namespace aspec
