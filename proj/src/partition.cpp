#include "ppdiamond/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "ppdiamond/cyclotomic.hpp"

namespace ppd {

PartSequence::PartSequence(std::vector<std::int64_t> parts) : parts_(std::move(parts)), common_multiple_(1) {
  if (parts_.empty()) throw std::invalid_argument("PartSequence: at least one part required");
  for (auto a : parts_)
    if (a < 1) throw std::invalid_argument("PartSequence: parts must be positive");
  common_multiple_ = lcm_of_set(parts_);
}

PartSequence::PartSequence(std::vector<std::int64_t> parts, std::int64_t common_multiple)
    : PartSequence(std::move(parts)) {
  if (common_multiple < 1 || common_multiple % common_multiple_ != 0)
    throw std::invalid_argument("PartSequence: " + std::to_string(common_multiple) +
                                " is not a common multiple of the parts");
  common_multiple_ = common_multiple;
}

Integer PartSequence::product() const {
  Integer acc = 1;
  for (auto a : parts_) acc *= static_cast<long>(a);
  return acc;
}

Integer PartSequence::box_size() const {
  Integer acc = 1;
  for (auto a : parts_) acc *= static_cast<long>(common_multiple_ / a);
  return acc;
}

std::vector<std::int64_t> PartSequence::part_divisors() const {
  std::set<std::int64_t> out;
  for (auto a : parts_)
    for (std::int64_t d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        out.insert(d);
        out.insert(a / d);
      }
  return {out.begin(), out.end()};
}

std::vector<Integer> partition_counts_dp(const PartSequence& a, std::int64_t n_max) {
  if (n_max < 0) return {};
  std::vector<Integer> counts(static_cast<size_t>(n_max) + 1, 0);
  counts[0] = 1;
  for (auto part : a.parts())
    for (std::int64_t n = part; n <= n_max; ++n) counts[n] += counts[n - part];
  return counts;
}

Integer partition_count_dp(const PartSequence& a, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("partition_count_dp: n must be >= 0");
  return partition_counts_dp(a, n)[n];
}


QuasiPolynomial quasipoly_from_moments(const PartSequence& a, const ResidueMoments& moments) {
  const int r = a.size();
  const std::int64_t d = a.common_multiple();
  if (moments.modulus() != d || moments.pmax() < r - 1)
    throw std::invalid_argument("quasipoly_from_moments: moments do not match the part sequence");
  const Rational norm = Rational(1) / Rational(factorial(r - 1));
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(d));
  for (std::int64_t c = 0; c < d; ++c) {
    rows[c] = counting_product_coefficients(moments.row(c), r - 1, d);
    for (auto& x : rows[c]) x *= norm;
  }
  return QuasiPolynomial(d, r - 1, 0, std::move(rows));
}

QuasiPolynomial quasipoly_from_moments(const PartSequence& a) {
  return quasipoly_from_moments(a, residue_moments(a, a.size() - 1));
}

Integer partition_count_explicit(const PartSequence& a, std::int64_t n, std::int64_t tuple_budget) {
  if (n < 0) throw std::invalid_argument("partition_count_explicit: n must be >= 0");
  if (a.box_size() > Integer(static_cast<long>(tuple_budget)))
    throw BudgetExceeded("partition_count_explicit: " + to_string(a.box_size()) + " tuples exceed budget " +
                         std::to_string(tuple_budget));
  const int r = a.size();
  const std::int64_t d = a.common_multiple();
  const auto& parts = a.parts();
  Integer acc = 0;
  Integer prod;
  std::vector<std::int64_t> j(static_cast<size_t>(r), 0);
  std::int64_t s = 0;
  while (true) {
    if (floor_mod(n - s, d) == 0) {
      const std::int64_t x = (n - s) / d;
      prod = 1;
      for (int l = 1; l < r; ++l) prod *= static_cast<long>(x + l);
      acc += prod;
    }
    int i = 0;
    for (; i < r; ++i) {
      if (++j[i] < d / parts[i]) {
        s += parts[i];
        break;
      }
      s -= parts[i] * (j[i] - 1);
      j[i] = 0;
    }
    if (i == r) break;
  }
  const Rational value = Rational(acc) / Rational(factorial(r - 1));
  return require_integer(value, "partition_count_explicit");
}

Polynomial polynomial_part_product(const PartSequence& a) {
  const int r = a.size();
  const std::int64_t d = a.common_multiple();
  const auto vars = uniform_variables(a);
  const auto totals = residue_moments(vars, 1, r - 1);
  auto coeffs = counting_product_coefficients(totals.row(0), r - 1, d);
  const Rational norm = Rational(1) / Rational(Integer(static_cast<long>(d)) * factorial(r - 1));
  for (auto& x : coeffs) x *= norm;
  return Polynomial(std::move(coeffs));
}

Polynomial polynomial_part_bernoulli(const PartSequence& a) {
  const int r = a.size();
  const auto b = bernoulli_table(static_cast<unsigned>(r));
  // Product over parts of sum_i B_i a^i x^i / i!, truncated at x^{r-1}.
  std::vector<Rational> series(static_cast<size_t>(r), Rational(0));
  series[0] = 1;
  for (auto part : a.parts()) {
    std::vector<Rational> factor(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) factor[i] = b[i] * Rational(power(Integer(static_cast<long>(part)), i)) / Rational(factorial(i));
    std::vector<Rational> next(static_cast<size_t>(r), Rational(0));
    for (int i = 0; i < r; ++i) {
      if (series[i] == 0) continue;
      for (int t = 0; i + t < r; ++t) next[i + t] += series[i] * factor[t];
    }
    series = std::move(next);
  }
  std::vector<Rational> coeffs(static_cast<size_t>(r), Rational(0));
  const Rational norm = Rational(1) / Rational(a.product());
  for (int u = 0; u < r; ++u) {
    Rational term = norm * series[u] / Rational(factorial(r - 1 - u));
    coeffs[r - 1 - u] = (u % 2) ? Rational(-term) : term;
  }
  return Polynomial(std::move(coeffs));
}

QuasiPolynomial sylvester_wave(const PartSequence& a, std::int64_t j, const ResidueMoments& moments,
                               WaveFormula formula) {
  const auto& parts = a.parts();
  if (j < 1 || std::none_of(parts.begin(), parts.end(), [&](auto p) { return p % j == 0; }))
    throw std::invalid_argument("sylvester_wave: " + std::to_string(j) + " divides no part");
  const int r = a.size();
  const std::int64_t d = a.common_multiple();
  if (moments.modulus() != d || moments.pmax() < r - 1)
    throw std::invalid_argument("sylvester_wave: moments do not match the part sequence");
  const int order = static_cast<int>(j);
  const auto by_class = moments.fold(j);

  std::vector<std::vector<Rational>> inner(static_cast<size_t>(j));
  for (std::int64_t l = 0; l < j; ++l) inner[l] = counting_product_coefficients(by_class.row(l), r - 1, d);

  // galois[x] = sum over primitive j-th roots zeta of zeta^x
  std::vector<CyclotomicNumber> galois;
  galois.reserve(static_cast<size_t>(j));
  for (std::int64_t x = 0; x < j; ++x) {
    CyclotomicNumber acc(order, Rational(0));
    for (std::int64_t g = 0; g < j; ++g)
      if (std::gcd(g, j) == 1) acc += CyclotomicNumber::root_of_unity(order, g * x);
    galois.push_back(std::move(acc));
  }

  const Rational norm = Rational(1) / Rational(Integer(static_cast<long>(d)) * factorial(r - 1));
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(j));
  for (std::int64_t nu = 0; nu < j; ++nu) {
    rows[nu].assign(static_cast<size_t>(r), Rational(0));
    for (int m = 0; m < r; ++m) {
      CyclotomicNumber acc(order, Rational(0));
      for (std::int64_t l = 0; l < j; ++l) {
        if (inner[l][m] == 0) continue;
        if (formula == WaveFormula::corrected)
          acc.add_scaled(galois[floor_mod(l - nu, j)], inner[l][m]);
        else
          acc.add_scaled(CyclotomicNumber::root_of_unity(order, l), inner[l][m]);
      }
      rows[nu][m] = acc.to_rational() * norm;
    }
  }
  return QuasiPolynomial(j, r - 1, 0, std::move(rows));
}

QuasiPolynomial sylvester_wave(const PartSequence& a, std::int64_t j, WaveFormula formula) {
  return sylvester_wave(a, j, residue_moments(a, a.size() - 1), formula);
}

Rational WaveSet::operator()(std::int64_t n) const {
  Rational acc = 0;
  for (const auto& [j, wave] : waves) acc += wave(n);
  return acc;
}

WaveSet wave_set(const PartSequence& a) {
  const auto moments = residue_moments(a, a.size() - 1);
  WaveSet out{a, {}};
  for (auto j : a.part_divisors()) out.waves.emplace(j, sylvester_wave(a, j, moments));
  return out;
}

}  // namespace ppd
