#include "ppdiamond/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppd {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[power];
}

Rational Polynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> shift_coefficients(const std::vector<Rational>& coeffs, std::int64_t shift) {
  std::vector<Rational> out(coeffs.size(), Rational(0));
  if (shift == 0) return coeffs;
  const Integer minus_shift(static_cast<long>(-shift));
  for (size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] == 0) continue;
    // (n - s)^m = sum_q C(m, q) n^q (-s)^{m-q}
    for (size_t q = 0; q <= m; ++q) {
      out[q] += coeffs[m] * Rational(binomial(m, q) * power(minus_shift, m - q));
    }
  }
  return out;
}

Polynomial Polynomial::shifted(std::int64_t shift) const { return Polynomial(shift_coefficients(coeffs_, shift)); }

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QuasiPolynomial::QuasiPolynomial(std::int64_t period, int degree, std::int64_t valid_from,
                                 std::vector<std::vector<Rational>> coeffs)
    : period_(period), degree_(degree), valid_from_(valid_from), coeffs_(std::move(coeffs)) {
  if (period_ < 1) throw std::invalid_argument("QuasiPolynomial: period must be >= 1");
  if (degree_ < 0) throw std::invalid_argument("QuasiPolynomial: degree must be >= 0");
  if (coeffs_.size() != static_cast<size_t>(period_))
    throw std::invalid_argument("QuasiPolynomial: one coefficient row per residue required");
  for (auto& row : coeffs_) {
    if (row.size() > static_cast<size_t>(degree_) + 1)
      throw std::invalid_argument("QuasiPolynomial: row longer than degree + 1");
    row.resize(static_cast<size_t>(degree_) + 1, Rational(0));
  }
}

Rational QuasiPolynomial::operator()(std::int64_t n) const {
  const auto& row = coeffs_[floor_mod(n, period_)];
  const Rational x(Integer(static_cast<long>(n)));
  Rational acc = 0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer QuasiPolynomial::count_at(std::int64_t n) const { return require_integer((*this)(n), "quasi-polynomial"); }

QuasiPolynomial QuasiPolynomial::shifted(std::int64_t shift) const {
  std::vector<std::vector<Rational>> rows(static_cast<size_t>(period_));
  for (std::int64_t c = 0; c < period_; ++c) {
    rows[c] = shift_coefficients(coeffs_[floor_mod(c - shift, period_)], shift);
  }
  return QuasiPolynomial(period_, degree_, std::max<std::int64_t>(valid_from_ + shift, 0), std::move(rows));
}

QuasiPolynomial& QuasiPolynomial::operator+=(const QuasiPolynomial& other) {
  if (other.period_ != period_) throw std::invalid_argument("QuasiPolynomial: period mismatch in sum");
  if (other.degree_ > degree_) {
    degree_ = other.degree_;
    for (auto& row : coeffs_) row.resize(static_cast<size_t>(degree_) + 1, Rational(0));
  }
  for (std::int64_t c = 0; c < period_; ++c) {
    for (size_t m = 0; m < other.coeffs_[c].size(); ++m) coeffs_[c][m] += other.coeffs_[c][m];
  }
  valid_from_ = std::max(valid_from_, other.valid_from_);
  return *this;
}

int QuasiPolynomial::effective_degree() const {
  int best = -1;
  for (const auto& row : coeffs_) {
    for (int m = static_cast<int>(row.size()) - 1; m > best; --m) {
      if (row[m] != 0) {
        best = m;
        break;
      }
    }
  }
  return best;
}

bool QuasiPolynomial::is_polynomial() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [&](const auto& row) { return row == coeffs_[0]; });
}

Polynomial QuasiPolynomial::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("QuasiPolynomial: residue classes differ");
  return Polynomial(coeffs_[0]);
}

}  // namespace ppd
