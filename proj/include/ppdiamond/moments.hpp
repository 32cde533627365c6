#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ppdiamond/exact.hpp"

namespace ppd {

class PartSequence;

/// One summation variable of a tuple box: it takes the values step * t for
/// t = 0..weights.size()-1, with multiplicity weights[t].
struct MomentVariable {
  std::int64_t step = 1;
  std::vector<Integer> weights;

  /// t = 0..count-1, all with multiplicity 1.
  static MomentVariable uniform(std::int64_t step, std::int64_t count);
};

/// Per-residue power sums over a box of tuples:
///   S[c][p] = sum over tuples with s = sum_i step_i t_i, s = c (mod modulus),
///             of w(t) * s^p,
/// where w is the product of the per-variable multiplicities.
class ResidueMoments {
 public:
  ResidueMoments(std::int64_t modulus, int pmax, std::vector<std::vector<Integer>> table);

  std::int64_t modulus() const { return modulus_; }
  int pmax() const { return pmax_; }
  const Integer& at(std::int64_t residue, int p) const { return table_[residue][p]; }
  const std::vector<Integer>& row(std::int64_t residue) const { return table_[residue]; }

  /// sum_c S[c][p]
  Integer total(int p) const;

  /// Regroups residues mod `divisor` (which must divide the modulus).
  ResidueMoments fold(std::int64_t divisor) const;

 private:
  std::int64_t modulus_;
  int pmax_;
  std::vector<std::vector<Integer>> table_;
};

/// Folds the variables one at a time into the residue table. A variable whose
/// values cover exactly one full cycle (step * count == modulus, unit weights)
/// is folded with a sliding window in O(modulus * pmax^2); any other variable
/// uses a direct cyclic-convolution pass.
ResidueMoments residue_moments(std::span<const MomentVariable> variables, std::int64_t modulus, int pmax);

/// The box 0 <= j_i <= D/a_i - 1 of the part sequence, residues mod D.
/// Requires pmax <= r.
ResidueMoments residue_moments(const PartSequence& parts, int pmax);

std::vector<MomentVariable> uniform_variables(const PartSequence& parts);

/// Coefficients in y of  sum over tuples of prod_{l=1}^{terms} ((y - s)/modulus + l),
/// given row[p] = sum over those tuples of s^p (p = 0..terms). The product is
/// expanded through the unsigned Stirling numbers c(terms+1, .).
std::vector<Rational> counting_product_coefficients(const std::vector<Integer>& row, int terms,
                                                    std::int64_t modulus);

}  // namespace ppd
