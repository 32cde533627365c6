#include "ppdiamond/moments.hpp"

#include <string>

#include "ppdiamond/partition.hpp"

namespace ppd {

namespace {

using Row = std::vector<Integer>;
using Table = std::vector<Row>;

// K[p][q] = C(p, q) * v^(p-q): the binomial shift x |-> x + v on raw moments.
Table shift_matrix(const Integer& v, int pmax) {
  Table k(static_cast<size_t>(pmax) + 1, Row(static_cast<size_t>(pmax) + 1, 0));
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= p; ++q) k[p][q] = binomial(p, q) * power(v, p - q);
  return k;
}

void add_shifted(Row& dst, const Table& k, const Row& src) {
  const size_t n = dst.size();
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q <= p; ++q)
      if (sgn(src[q]) != 0) mpz_addmul(dst[p].get_mpz_t(), k[p][q].get_mpz_t(), src[q].get_mpz_t());
}

void sub_shifted(Row& dst, const Table& k, const Row& src) {
  const size_t n = dst.size();
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q <= p; ++q)
      if (sgn(src[q]) != 0) mpz_submul(dst[p].get_mpz_t(), k[p][q].get_mpz_t(), src[q].get_mpz_t());
}

bool is_zero_row(const Row& row) {
  for (const auto& x : row)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_full_cycle(const MomentVariable& var, std::int64_t modulus) {
  if (var.step * static_cast<std::int64_t>(var.weights.size()) != modulus) return false;
  for (const auto& w : var.weights)
    if (w != 1) return false;
  return true;
}

Table fold_full_cycle(const Table& s, const MomentVariable& var, std::int64_t modulus, int pmax) {
  const std::int64_t step = var.step;
  const std::int64_t len = modulus / step;
  const Table by_step = shift_matrix(Integer(static_cast<long>(step)), pmax);
  const Table by_modulus = shift_matrix(Integer(static_cast<long>(modulus)), pmax);
  Table out(static_cast<size_t>(modulus), Row(static_cast<size_t>(pmax) + 1, 0));
  // Each coset base + step * i (i = 0..len-1) is closed under the fold.
  for (std::int64_t base = 0; base < step; ++base) {
    auto pos = [&](std::int64_t i) { return base + step * floor_mod(i, len); };
    Row window(static_cast<size_t>(pmax) + 1, 0);
    for (std::int64_t t = 0; t < len; ++t) {
      const Row& src = s[pos(-t)];
      if (is_zero_row(src)) continue;
      const Table k = shift_matrix(Integer(static_cast<long>(step * t)), pmax);
      add_shifted(window, k, src);
    }
    out[pos(0)] = window;
    for (std::int64_t i = 1; i < len; ++i) {
      // window_i = shift_step(window_{i-1}) - shift_modulus(S[c_i]) + S[c_i]
      Row next(static_cast<size_t>(pmax) + 1, 0);
      add_shifted(next, by_step, window);
      const Row& entering = s[pos(i)];
      if (!is_zero_row(entering)) {
        sub_shifted(next, by_modulus, entering);
        for (int p = 0; p <= pmax; ++p) next[p] += entering[p];
      }
      window = std::move(next);
      out[pos(i)] = window;
    }
  }
  return out;
}

Table fold_direct(const Table& s, const MomentVariable& var, std::int64_t modulus, int pmax) {
  Table values(static_cast<size_t>(modulus), Row(static_cast<size_t>(pmax) + 1, 0));
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(var.weights.size()); ++t) {
    const auto& w = var.weights[t];
    if (sgn(w) == 0) continue;
    const std::int64_t v = var.step * t;
    const Integer big_v(static_cast<long>(v));
    Integer vp = w;
    Row& row = values[floor_mod(v, modulus)];
    for (int p = 0; p <= pmax; ++p) {
      row[p] += vp;
      vp *= big_v;
    }
  }
  std::vector<std::int64_t> live;
  for (std::int64_t c = 0; c < modulus; ++c)
    if (!is_zero_row(values[c])) live.push_back(c);

  Table binom(static_cast<size_t>(pmax) + 1, Row(static_cast<size_t>(pmax) + 1, 0));
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= p; ++q) binom[p][q] = binomial(p, q);

  Table out(static_cast<size_t>(modulus), Row(static_cast<size_t>(pmax) + 1, 0));
  Integer tmp;
  for (std::int64_t c1 = 0; c1 < modulus; ++c1) {
    const Row& left = s[c1];
    if (is_zero_row(left)) continue;
    for (auto c2 : live) {
      const Row& right = values[c2];
      Row& dst = out[floor_mod(c1 + c2, modulus)];
      for (int p = 0; p <= pmax; ++p) {
        for (int q = 0; q <= p; ++q) {
          if (sgn(left[q]) == 0 || sgn(right[p - q]) == 0) continue;
          mpz_mul(tmp.get_mpz_t(), left[q].get_mpz_t(), right[p - q].get_mpz_t());
          mpz_addmul(dst[p].get_mpz_t(), tmp.get_mpz_t(), binom[p][q].get_mpz_t());
        }
      }
    }
  }
  return out;
}

}  // namespace

MomentVariable MomentVariable::uniform(std::int64_t step, std::int64_t count) {
  if (step < 1 || count < 1) throw std::invalid_argument("MomentVariable: step and count must be positive");
  return MomentVariable{step, std::vector<Integer>(static_cast<size_t>(count), Integer(1))};
}

ResidueMoments::ResidueMoments(std::int64_t modulus, int pmax, std::vector<std::vector<Integer>> table)
    : modulus_(modulus), pmax_(pmax), table_(std::move(table)) {
  if (modulus_ < 1 || pmax_ < 0 || table_.size() != static_cast<size_t>(modulus_))
    throw std::invalid_argument("ResidueMoments: malformed table");
}

Integer ResidueMoments::total(int p) const {
  Integer acc = 0;
  for (const auto& row : table_) acc += row.at(p);
  return acc;
}

ResidueMoments ResidueMoments::fold(std::int64_t divisor) const {
  if (divisor < 1 || modulus_ % divisor != 0)
    throw std::invalid_argument("ResidueMoments::fold: " + std::to_string(divisor) + " does not divide " +
                                std::to_string(modulus_));
  Table out(static_cast<size_t>(divisor), Row(static_cast<size_t>(pmax_) + 1, 0));
  for (std::int64_t c = 0; c < modulus_; ++c)
    for (int p = 0; p <= pmax_; ++p) out[c % divisor][p] += table_[c][p];
  return ResidueMoments(divisor, pmax_, std::move(out));
}

ResidueMoments residue_moments(std::span<const MomentVariable> variables, std::int64_t modulus, int pmax) {
  if (modulus < 1) throw std::invalid_argument("residue_moments: modulus must be >= 1");
  if (pmax < 0) throw std::invalid_argument("residue_moments: pmax must be >= 0");
  Table s(static_cast<size_t>(modulus), Row(static_cast<size_t>(pmax) + 1, 0));
  s[0][0] = 1;
  for (const auto& var : variables) {
    if (var.step < 1) throw std::invalid_argument("residue_moments: variable step must be positive");
    s = is_full_cycle(var, modulus) ? fold_full_cycle(s, var, modulus, pmax) : fold_direct(s, var, modulus, pmax);
  }
  return ResidueMoments(modulus, pmax, std::move(s));
}

std::vector<MomentVariable> uniform_variables(const PartSequence& parts) {
  std::vector<MomentVariable> vars;
  vars.reserve(parts.size());
  for (auto a : parts.parts()) vars.push_back(MomentVariable::uniform(a, parts.common_multiple() / a));
  return vars;
}

ResidueMoments residue_moments(const PartSequence& parts, int pmax) {
  if (pmax > parts.size())
    throw std::invalid_argument("residue_moments: pmax " + std::to_string(pmax) + " exceeds r = " +
                                std::to_string(parts.size()));
  const auto vars = uniform_variables(parts);
  return residue_moments(vars, parts.common_multiple(), pmax);
}

}  // namespace ppd

namespace ppd {

std::vector<Rational> counting_product_coefficients(const std::vector<Integer>& row, int terms,
                                                    std::int64_t modulus) {
  if (terms < 0 || row.size() < static_cast<size_t>(terms) + 1)
    throw std::invalid_argument("counting_product_coefficients: moment row too short");
  const auto stirling = stirling_first_row(terms + 1);
  const Integer d(static_cast<long>(modulus));
  // prod_{l=1}^{terms} (x + l) = sum_k c(terms+1, k+1) x^k, x = (y - s)/d
  std::vector<Rational> out(static_cast<size_t>(terms) + 1, Rational(0));
  for (int k = 0; k <= terms; ++k) {
    const Rational scale = Rational(stirling[k + 1]) / Rational(power(d, k));
    for (int m = 0; m <= k; ++m) {
      Rational term = scale * Rational(binomial(k, m) * row[k - m]);
      if ((k - m) % 2) out[m] -= term;
      else out[m] += term;
    }
  }
  return out;
}

}  // namespace ppd
