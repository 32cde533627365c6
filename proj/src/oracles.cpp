#include "ppdiamond/oracles.hpp"

#include <algorithm>
#include <string>

#include "ppdiamond/partition.hpp"

namespace ppd {

bool is_diamond(int k, std::span<const std::int64_t> values) {
  if (k < 1 || values.size() != static_cast<size_t>(3 * k + 1)) return false;
  if (std::any_of(values.begin(), values.end(), [](auto v) { return v < 0; })) return false;
  // 1-based a_x = values[x - 1]
  auto a = [&](int x) { return values[x - 1]; };
  for (int i = 0; i < k; ++i) {
    if (a(3 * i + 1) < a(3 * i + 2) || a(3 * i + 1) < a(3 * i + 3)) return false;
    if (a(3 * i + 2) < a(3 * i + 4) || a(3 * i + 3) < a(3 * i + 4)) return false;
  }
  return true;
}

namespace {

class DiamondSearch {
 public:
  DiamondSearch(int k, std::int64_t budget, const DiamondVisitor& visit)
      : len_(3 * k + 1), budget_(budget), visit_(visit), values_(static_cast<size_t>(len_), 0) {}

  Integer run(std::int64_t n) {
    count_ = 0;
    assign(0, n);
    return count_;
  }

 private:
  // Upper bound for position pos (0-based) from the dominance relations with
  // already-assigned entries. Position 0 (a_1) is unconstrained from above.
  std::int64_t bound(int pos) const {
    const int x = pos + 1;  // 1-based index
    switch (x % 3) {
      case 2: return values_[pos - 1];                                          // a_{3i+2} <= a_{3i+1}
      case 0: return values_[pos - 2];                                          // a_{3i+3} <= a_{3i+1}
      default: return x == 1 ? -1 : std::min(values_[pos - 2], values_[pos - 1]);  // a_{3i+4}
    }
  }

  void assign(int pos, std::int64_t remaining) {
    if (++nodes_ > budget_)
      throw BudgetExceeded("enumerate_diamonds: node budget " + std::to_string(budget_) + " exceeded");
    if (pos == len_) {
      if (remaining == 0) {
        ++count_;
        if (visit_) visit_(values_);
      }
      return;
    }
    std::int64_t hi = bound(pos);
    if (hi < 0 || hi > remaining) hi = remaining;
    if (pos == len_ - 1) {
      if (remaining <= hi) {
        values_[pos] = remaining;
        assign(pos + 1, 0);
      }
      return;
    }
    for (std::int64_t v = hi; v >= 0; --v) {
      values_[pos] = v;
      assign(pos + 1, remaining - v);
    }
    values_[pos] = 0;
  }

  int len_;
  std::int64_t budget_;
  const DiamondVisitor& visit_;
  std::vector<std::int64_t> values_;
  std::int64_t nodes_ = 0;
  Integer count_;
};

void multiply_one_plus(SeriesPrefix& c, std::int64_t e) {
  for (std::int64_t n = static_cast<std::int64_t>(c.size()) - 1; n >= e; --n) c[n] += c[n - e];
}

void divide_one_minus(SeriesPrefix& c, std::int64_t e) {
  for (std::int64_t n = e; n < static_cast<std::int64_t>(c.size()); ++n) c[n] += c[n - e];
}

SeriesPrefix unit_series(std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("series order must be >= 0");
  SeriesPrefix c(static_cast<size_t>(n_max) + 1, 0);
  c[0] = 1;
  return c;
}

}  // namespace

Integer enumerate_diamonds(int k, std::int64_t n, std::int64_t node_budget, const DiamondVisitor& visit) {
  if (k < 1) throw std::invalid_argument("enumerate_diamonds: k must be >= 1");
  if (n < 0) throw std::invalid_argument("enumerate_diamonds: n must be >= 0");
  DiamondSearch search(k, node_budget, visit);
  return search.run(n);
}

SeriesPrefix diamond_series(int k, std::int64_t n_max, SeriesForm form) {
  if (k < 1) throw std::invalid_argument("diamond_series: k must be >= 1");
  auto c = unit_series(n_max);
  if (form == SeriesForm::raw) {
    for (int i = 1; i <= k; ++i) multiply_one_plus(c, 3 * i - 1);
    for (int i = 1; i <= 3 * k + 1; ++i) divide_one_minus(c, i);
    return c;
  }
  const int alpha = (k + 1) / 2;
  for (int i = alpha + 1; i <= k; ++i) multiply_one_plus(c, 3 * i - 1);
  for (int i = 1; i <= alpha; ++i) divide_one_minus(c, 3 * i - 1);
  for (int i = 1; i <= 3 * k + 1; ++i)
    if (i % 6 != 4) divide_one_minus(c, i);
  return c;
}

SeriesPrefix restricted_series(const PartSequence& a, std::int64_t n_max) {
  auto c = unit_series(n_max);
  for (auto part : a.parts()) divide_one_minus(c, part);
  return c;
}

}  // namespace ppd
