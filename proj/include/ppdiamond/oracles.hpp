#pragma once

// Ground truth that shares no code path with the closed forms: brute-force
// enumeration of diamonds and truncated power-series expansion.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ppdiamond/exact.hpp"

namespace ppd {

class PartSequence;

inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

/// True iff values has length 3k+1, is non-negative, and satisfies every
/// diamond inequality.
bool is_diamond(int k, std::span<const std::int64_t> values);

using DiamondVisitor = std::function<void(std::span<const std::int64_t>)>;

/// Counts diamonds of length k with entry sum n by depth-first assignment of
/// a_1, a_2, ... with dominance upper bounds and remaining-sum pruning.
/// Throws BudgetExceeded once more than node_budget search nodes are visited.
Integer enumerate_diamonds(int k, std::int64_t n, std::int64_t node_budget = kDefaultNodeBudget,
                           const DiamondVisitor& visit = {});

using SeriesPrefix = std::vector<Integer>;

enum class SeriesForm {
  /// prod_{i<=k} (1 + q^{3i-1}) / prod_{i<=3k+1} (1 - q^i)
  raw,
  /// numerator over alpha+1..k, with the (1+q^{3i-1})(1-q^{3i-1}) = 1-q^{6i-2} cancellation applied.
  reduced,
};

/// Coefficients c_0..c_N of the diamond generating function.
SeriesPrefix diamond_series(int k, std::int64_t n_max, SeriesForm form = SeriesForm::raw);

/// Coefficients c_0..c_N of prod_i 1/(1 - q^{a_i}).
SeriesPrefix restricted_series(const PartSequence& a, std::int64_t n_max);

}  // namespace ppd
