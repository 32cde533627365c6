#include "ppdiamond/exact.hpp"

#include <numeric>

namespace ppd {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  out.canonicalize();
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::vector<Integer> stirling_first_row(int r) {
  if (r < 0) throw std::invalid_argument("stirling_first_row: r must be >= 0");
  std::vector<Integer> row{1};
  for (int i = 1; i <= r; ++i) {
    std::vector<Integer> next(static_cast<size_t>(i) + 1, 0);
    for (int k = 1; k <= i; ++k) {
      next[k] = row[k - 1];
      if (k < i) next[k] += Integer(i - 1) * row[k];
    }
    row = std::move(next);
  }
  return row;
}

Integer unsigned_stirling_first(int r, int k) {
  if (r < 1 || k < 1 || k > r)
    throw std::invalid_argument("unsigned_stirling_first: need 1 <= k <= r");
  return stirling_first_row(r)[k];
}

std::vector<Rational> bernoulli_table(unsigned mmax) {
  // sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1
  std::vector<Rational> b(static_cast<size_t>(mmax) + 1);
  b[0] = 1;
  for (unsigned m = 1; m <= mmax; ++m) {
    Rational acc = 0;
    for (unsigned i = 0; i < m; ++i) acc += Rational(binomial(m + 1, i)) * b[i];
    b[m] = -acc / Rational(m + 1);
    b[m].canonicalize();
  }
  return b;
}

Rational bernoulli(unsigned m) { return bernoulli_table(m)[m]; }

std::int64_t lcm_of_set(std::span<const std::int64_t> values) {
  if (values.empty()) throw std::invalid_argument("lcm_of_set: empty set");
  std::int64_t acc = 1;
  for (auto v : values) {
    if (v < 1) throw std::invalid_argument("lcm_of_set: values must be positive");
    acc = std::lcm(acc, v);
  }
  return acc;
}

Integer require_integer(const Rational& value, const char* what) {
  if (value.get_den() != 1)
    throw InvariantViolation(std::string(what) + ": non-integral result " + to_string(value));
  return value.get_num();
}

}  // namespace ppd
