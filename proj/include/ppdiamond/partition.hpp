#pragma once

// Restricted partition function p_a(n) = #{x >= 0 : a_1 x_1 + ... + a_r x_r = n}
// and its quasi-polynomial structure.

#include <cstdint>
#include <map>
#include <vector>

#include "ppdiamond/exact.hpp"
#include "ppdiamond/moments.hpp"
#include "ppdiamond/polynomial.hpp"

namespace ppd {

class PartSequence {
 public:
  /// Common multiple defaults to lcm(parts).
  explicit PartSequence(std::vector<std::int64_t> parts);
  PartSequence(std::vector<std::int64_t> parts, std::int64_t common_multiple);

  const std::vector<std::int64_t>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  std::int64_t common_multiple() const { return common_multiple_; }
  Integer product() const;
  /// Number of tuples in the box 0 <= j_i < D / a_i.
  Integer box_size() const;
  /// Every j >= 1 dividing at least one part, ascending.
  std::vector<std::int64_t> part_divisors() const;

  friend bool operator==(const PartSequence&, const PartSequence&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t common_multiple_;
};

inline constexpr std::int64_t kDefaultTupleBudget = 100'000'000;

/// Coin-counting DP, p_a(n).
Integer partition_count_dp(const PartSequence& a, std::int64_t n);
/// p_a(0..n_max) in one pass.
std::vector<Integer> partition_counts_dp(const PartSequence& a, std::int64_t n_max);

/// Full quasi-polynomial of p_a, period D, degree r - 1, valid from n = 0.
QuasiPolynomial quasipoly_from_moments(const PartSequence& a);
/// Same, reusing moments computed with pmax >= r - 1.
QuasiPolynomial quasipoly_from_moments(const PartSequence& a, const ResidueMoments& moments);

/// p_a(n) by iterating the congruence-constrained box directly; refuses when
/// the box holds more than `tuple_budget` tuples (BudgetExceeded).
Integer partition_count_explicit(const PartSequence& a, std::int64_t n,
                                 std::int64_t tuple_budget = kDefaultTupleBudget);

/// Polynomial part via the unconstrained box average of the counting product.
Polynomial polynomial_part_product(const PartSequence& a);
/// Polynomial part via Bernoulli numbers.
Polynomial polynomial_part_bernoulli(const PartSequence& a);

enum class WaveFormula {
  /// Galois-summed weights sum_{gcd(g,j)=1} rho_j^{g(l - n)}; the decomposition
  /// that actually sums to p_a.
  corrected,
  /// The weight rho_j^l with no dependence on n. Kept to demonstrate that it
  /// does not reproduce p_a.
  as_printed,
};

/// Sylvester wave W_j(n, a) as a quasi-polynomial of period j.
QuasiPolynomial sylvester_wave(const PartSequence& a, std::int64_t j,
                               WaveFormula formula = WaveFormula::corrected);
/// As above, reusing moments mod D with pmax >= r - 1.
QuasiPolynomial sylvester_wave(const PartSequence& a, std::int64_t j, const ResidueMoments& moments,
                               WaveFormula formula = WaveFormula::corrected);

struct WaveSet {
  PartSequence base;
  std::map<std::int64_t, QuasiPolynomial> waves;

  Rational operator()(std::int64_t n) const;
};

WaveSet wave_set(const PartSequence& a);

}  // namespace ppd
