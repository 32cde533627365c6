#include "ppdiamond/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <string>

namespace ppd {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    for (size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  return quot;
}

std::shared_ptr<const IntPoly> build_cyclotomic(int order,
                                                std::map<int, std::shared_ptr<const IntPoly>>& cache) {
  if (auto it = cache.find(order); it != cache.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d
  IntPoly poly(static_cast<size_t>(order) + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_monic(poly, *build_cyclotomic(d, cache));
  }
  auto shared = std::make_shared<const IntPoly>(std::move(poly));
  cache.emplace(order, shared);
  return shared;
}

}  // namespace

std::shared_ptr<const std::vector<std::int64_t>> cyclotomic_polynomial(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const IntPoly>> cache;
  std::lock_guard lock(mutex);
  return build_cyclotomic(order, cache);
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber::CyclotomicNumber(int order, std::shared_ptr<const std::vector<std::int64_t>> modulus,
                                   std::vector<Rational> coeffs)
    : order_(order), modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

CyclotomicNumber::CyclotomicNumber(int order, const Rational& value)
    : order_(order), modulus_(cyclotomic_polynomial(order)) {
  coeffs_.assign(modulus_->size() - 1, Rational(0));
  coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int order, std::int64_t exponent) {
  if (order < 1) throw std::invalid_argument("root_of_unity: order must be >= 1");
  auto modulus = cyclotomic_polynomial(order);
  std::int64_t e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> poly(static_cast<size_t>(std::max<std::int64_t>(e + 1, 1)), Rational(0));
  poly[e] = 1;
  CyclotomicNumber out(order, modulus, {});
  out.reduce(poly);
  out.coeffs_ = std::move(poly);
  return out;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(int order, std::vector<Rational> coeffs) {
  auto modulus = cyclotomic_polynomial(order);
  CyclotomicNumber out(order, modulus, {});
  out.reduce(coeffs);
  out.coeffs_ = std::move(coeffs);
  return out;
}

void CyclotomicNumber::reduce(std::vector<Rational>& poly) const {
  const auto& mod = *modulus_;
  const size_t deg = mod.size() - 1;
  for (size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    const Rational c = poly[i];
    for (size_t t = 0; t <= deg; ++t) {
      if (mod[t] != 0) poly[i - deg + t] -= c * Rational(static_cast<long>(mod[t]));
    }
  }
  poly.resize(deg, Rational(0));
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational())
    throw InvariantViolation("cyclotomic value of order " + std::to_string(order_) + " is not rational");
  return coeffs_[0];
}

const CyclotomicNumber& CyclotomicNumber::aligned(const CyclotomicNumber& other,
                                                  CyclotomicNumber& scratch) const {
  if (other.order_ == order_) return other;
  if (!other.is_rational())
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(other.order_));
  scratch = CyclotomicNumber(order_, other.coeffs_[0]);
  return scratch;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other) {
  if (other.order_ != order_ && is_rational() && !other.is_rational()) {
    Rational mine = coeffs_[0];
    *this = other;
    coeffs_[0] += mine;
    return *this;
  }
  CyclotomicNumber scratch(1, Rational(0));
  const auto& rhs = aligned(other, scratch);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other) {
  CyclotomicNumber negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other) {
  if (other.order_ != order_ && is_rational() && !other.is_rational()) {
    Rational mine = coeffs_[0];
    *this = other;
    return *this *= mine;
  }
  CyclotomicNumber scratch(1, Rational(0));
  const auto& rhs = aligned(other, scratch);
  std::vector<Rational> prod(coeffs_.size() + rhs.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t t = 0; t < rhs.coeffs_.size(); ++t) prod[i + t] += coeffs_[i] * rhs.coeffs_[t];
  }
  reduce(prod);
  coeffs_ = std::move(prod);
  return *this;
}

void CyclotomicNumber::add_scaled(const CyclotomicNumber& other, const Rational& scalar) {
  CyclotomicNumber scratch(1, Rational(0));
  const auto& rhs = aligned(other, scratch);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (rhs.coeffs_[i] != 0) coeffs_[i] += scalar * rhs.coeffs_[i];
  }
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  return a.is_rational() && b.is_rational() && a.coeffs_[0] == b.coeffs_[0];
}

}  // namespace ppd
