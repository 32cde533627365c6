#pragma once

// Plane partition diamonds of length k: sequences (a_1, ..., a_{3k+1}) with
// a_{3i+1} >= a_{3i+2}, a_{3i+3} >= a_{3i+4} for 0 <= i < k. D_k(n) counts those with
// entry sum n.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ppdiamond/exact.hpp"
#include "ppdiamond/moments.hpp"
#include "ppdiamond/partition.hpp"
#include "ppdiamond/polynomial.hpp"

namespace ppd {

struct DiamondParams {
  int k = 0;
  int alpha = 0;  // floor((k+1)/2)
  int beta = 0;   // |A_k|
  PartSequence seq{{1}};
  std::vector<std::int64_t> value_set;  // A_k, ascending
  std::int64_t period = 1;              // lcm(A_k)
  std::int64_t n0 = 0;
  /// Subset shifts m_J = sum_{i in J} (3i - 1), J over subsets of {alpha+1..k}; sorted.
  std::vector<std::int64_t> shifts;
  /// B'_k: indices j in 1..beta whose image under phi is a duplicated part.
  std::vector<int> bprime;
  /// epsilon[j-1] in {1, 2}.
  std::vector<int> epsilon;
};

DiamondParams build_params(int k);

/// Subset shifts over J subset of {first..k}, sorted (with multiplicity).
std::vector<std::int64_t> subset_shifts(int first, int k);

/// phi_k(j) = j + ceil((j - 3) / 5), the increasing bijection {1..beta} -> A_k.
std::int64_t phi(const DiamondParams& params, std::int64_t j);
/// phi_k^{-1}(v) = v - ceil((v - 3) / 6).
std::int64_t phi_inv(const DiamondParams& params, std::int64_t v);

/// D_k(n) as a sum of shifted restricted partition counts.
Integer count_via_shifts(const DiamondParams& params, std::int64_t n);
/// D_k(0..n_max).
std::vector<Integer> counts_via_shifts(const DiamondParams& params, std::int64_t n_max);

/// Sum over shifts of the partition quasi-polynomial of a[k] evaluated at n - m_J.
/// Period D[k], degree 3k, valid_from n_0(k).
QuasiPolynomial diamond_quasipoly(const DiamondParams& params);

enum class WeightRule { min, max };

/// s_k(t) = prod_{j in B'} (1 + min{t_j, 2(D/phi(j) - 1) - t_j}).
Integer weight_s(const DiamondParams& params, std::span<const std::int64_t> t,
                 WeightRule rule = WeightRule::min);

enum class CompressedEngine { automatic, direct, moments };

/// Knobs for the compressed formulas. Defaults give the correct formula; the
/// other settings reproduce misprinted variants for regression tests.
struct CompressedOptions {
  WeightRule weight = WeightRule::min;
  /// Number of factors in prod_l ((n - s - m)/D + l); 0 means 3k.
  int product_terms = 0;
  /// Replaces params.shifts when set.
  std::optional<std::vector<std::int64_t>> shifts;
  CompressedEngine engine = CompressedEngine::automatic;
  std::int64_t tuple_budget = kDefaultTupleBudget;
};

/// The compressed box over phi-coordinates, one MomentVariable per j in 1..beta.
std::vector<MomentVariable> compressed_variables(const DiamondParams& params, WeightRule rule = WeightRule::min);

/// Evaluates the compressed closed form for D_k(n). Construction does the
/// heavy lifting (box moments), after which each count is cheap.
class CompressedCounter {
 public:
  explicit CompressedCounter(const DiamondParams& params, CompressedOptions options = {});

  /// Exact value of the formula; integral and non-negative for the correct
  /// formula, arbitrary for misprinted variants.
  Rational value(std::int64_t n) const;
  /// Requires an integral, non-negative value.
  Integer count(std::int64_t n) const;

  bool uses_moments() const { return moments_.has_value(); }

 private:
  Rational value_direct(std::int64_t n) const;
  Rational value_moments(std::int64_t n) const;

  DiamondParams params_;
  CompressedOptions options_;
  std::vector<std::int64_t> shifts_;
  int terms_;
  std::vector<Integer> stirling_;
  std::vector<MomentVariable> variables_;
  std::optional<ResidueMoments> moments_;
};

Integer count_compressed(const DiamondParams& params, std::int64_t n, const CompressedOptions& options = {});

/// PP_k from the unconstrained weighted box.
Polynomial diamond_polypart_compressed(const DiamondParams& params, const CompressedOptions& options = {});
/// PP_k as sum over shifts of the Bernoulli polynomial part of a[k].
Polynomial diamond_polypart_bernoulli(const DiamondParams& params);

/// W_j(k, n) = sum over shifts of W_j(n - m_J, a[k]).
QuasiPolynomial diamond_wave(const DiamondParams& params, std::int64_t j,
                             WaveFormula formula = WaveFormula::corrected);
/// Every wave of D_k, keyed by j.
std::map<std::int64_t, QuasiPolynomial> diamond_waves(const DiamondParams& params);

}  // namespace ppd
