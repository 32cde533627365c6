#pragma once

// Exact arithmetic primitives shared by every other module. Integers and
// rationals are GMP-backed; everything here is pure and thread-safe.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a caller-configured work budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact identity that must hold by construction fails
/// (non-integral count, non-rational wave coefficient, negative count).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::string to_string(const Integer& value);
/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
Rational parse_rational(const std::string& text);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
Integer power(const Integer& base, unsigned long exponent);

/// Unsigned Stirling number of the first kind c(r, k), 1 <= k <= r.
Integer unsigned_stirling_first(int r, int k);

/// Row c(r, 0..r) of the unsigned Stirling triangle; c(r, 0) = 0 for r >= 1.
/// Satisfies x(x+1)...(x+r-1) = sum_k c(r,k) x^k.
std::vector<Integer> stirling_first_row(int r);

/// Bernoulli number B_m with B_1 = -1/2.
Rational bernoulli(unsigned m);
/// B_0..B_mmax in one pass.
std::vector<Rational> bernoulli_table(unsigned mmax);

std::int64_t lcm_of_set(std::span<const std::int64_t> values);

/// Converts an exactly integral rational; throws InvariantViolation otherwise.
Integer require_integer(const Rational& value, const char* what);

}  // namespace ppd
