#pragma once

#include <memory>
#include <vector>

#include "ppdiamond/exact.hpp"

namespace ppd {

/// Coefficients (ascending) of the j-th cyclotomic polynomial; monic, integral.
std::shared_ptr<const std::vector<std::int64_t>> cyclotomic_polynomial(int order);

int euler_phi(int n);

/// Exact element of Q(rho_j), rho_j = exp(2 pi i / j), stored in the power
/// basis of Q[x]/(Phi_j). The coefficient vector always has length phi(j).
class CyclotomicNumber {
 public:
  CyclotomicNumber(int order, const Rational& value);

  static CyclotomicNumber root_of_unity(int order, std::int64_t exponent);
  static CyclotomicNumber from_coefficients(int order, std::vector<Rational> coeffs);

  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_rational() const;
  bool is_zero() const;
  /// Throws InvariantViolation when the element is not rational.
  Rational to_rational() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& other);
  CyclotomicNumber& operator-=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const CyclotomicNumber& other);
  CyclotomicNumber& operator*=(const Rational& scalar);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// this += scalar * other, without a temporary.
  void add_scaled(const CyclotomicNumber& other, const Rational& scalar);

 private:
  CyclotomicNumber(int order, std::shared_ptr<const std::vector<std::int64_t>> modulus,
                   std::vector<Rational> coeffs);
  void reduce(std::vector<Rational>& poly) const;
  // Brings a rational operand (possibly of another order) to this order.
  const CyclotomicNumber& aligned(const CyclotomicNumber& other, CyclotomicNumber& scratch) const;

  int order_;
  std::shared_ptr<const std::vector<std::int64_t>> modulus_;
  std::vector<Rational> coeffs_;
};

}  // namespace ppd
