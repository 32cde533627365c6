#pragma once

#include <cstdint>
#include <vector>

#include "ppdiamond/exact.hpp"

namespace ppd {

/// Dense univariate polynomial over Q, coefficients in ascending powers.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(int power) const;
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;

  /// The polynomial n |-> p(n - shift), re-expanded in powers of n.
  Polynomial shifted(std::int64_t shift) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Re-expands sum_m coeffs[m] (n - shift)^m in powers of n.
std::vector<Rational> shift_coefficients(const std::vector<Rational>& coeffs, std::int64_t shift);

/// n |-> sum_m coeffs[n mod period][m] n^m, asserted for n >= valid_from.
class QuasiPolynomial {
 public:
  QuasiPolynomial(std::int64_t period, int degree, std::int64_t valid_from,
                  std::vector<std::vector<Rational>> coeffs);

  std::int64_t period() const { return period_; }
  int degree() const { return degree_; }
  std::int64_t valid_from() const { return valid_from_; }
  const std::vector<std::vector<Rational>>& coefficients() const { return coeffs_; }
  const std::vector<Rational>& branch(std::int64_t residue) const { return coeffs_.at(residue); }

  /// Evaluates the closed form at any integer n (including below valid_from).
  Rational operator()(std::int64_t n) const;
  /// Evaluates and requires an integral value.
  Integer count_at(std::int64_t n) const;

  /// n |-> q(n - shift): residues rotate by shift mod period, powers re-expand.
  QuasiPolynomial shifted(std::int64_t shift) const;

  /// Pointwise sum; periods must agree. valid_from becomes the max of both.
  QuasiPolynomial& operator+=(const QuasiPolynomial& other);

  /// Highest power with a nonzero coefficient in some residue class.
  int effective_degree() const;
  bool is_polynomial() const;
  Polynomial as_polynomial() const;

  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) = default;

 private:
  std::int64_t period_;
  int degree_;
  std::int64_t valid_from_;
  std::vector<std::vector<Rational>> coeffs_;
};

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace ppd
