#include "ppdiamond/diamond.hpp"

#include <algorithm>
#include <string>

namespace ppd {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a > 0) == (b > 0))) ++q;
  return q;
}

int duplicate_multiplicity(const DiamondParams& params, std::int64_t j) { return params.epsilon.at(j - 1); }

QuasiPolynomial shifted_sum(const QuasiPolynomial& base, const std::vector<std::int64_t>& shifts) {
  std::optional<QuasiPolynomial> sum;
  for (auto m : shifts) {
    auto shifted = base.shifted(m);
    if (sum) *sum += shifted;
    else sum = std::move(shifted);
  }
  return *sum;
}

}  // namespace

std::vector<std::int64_t> subset_shifts(int first, int k) {
  std::vector<std::int64_t> shifts{0};
  for (int i = std::max(first, 1); i <= k; ++i) {
    const size_t n = shifts.size();
    for (size_t t = 0; t < n; ++t) shifts.push_back(shifts[t] + 3 * i - 1);
  }
  std::sort(shifts.begin(), shifts.end());
  return shifts;
}

DiamondParams build_params(int k) {
  if (k < 1) throw std::invalid_argument("build_params: k must be >= 1");
  DiamondParams p;
  p.k = k;
  p.alpha = (k + 1) / 2;
  p.beta = (k % 2) ? 5 * p.alpha - 2 : 5 * p.alpha + 1;

  std::vector<std::int64_t> parts;
  for (std::int64_t j = 1; j <= 3 * k + 1; ++j) {
    const bool halved = j % 6 == 4;
    parts.push_back(halved ? j / 2 : j);
    if (!halved) p.value_set.push_back(j);
  }
  if (static_cast<int>(p.value_set.size()) != p.beta)
    throw InvariantViolation("build_params: |A_k| != beta_k for k = " + std::to_string(k));
  p.seq = PartSequence(std::move(parts));
  p.period = lcm_of_set(p.value_set);
  p.n0 = static_cast<std::int64_t>(k - p.alpha) * (3 * k + 3 * p.alpha + 1) / 2;
  p.shifts = subset_shifts(p.alpha + 1, k);

  p.epsilon.assign(static_cast<size_t>(p.beta), 1);
  for (int i = 1; i <= p.alpha; ++i) {
    const auto j = phi_inv(p, 3 * i - 1);
    p.bprime.push_back(static_cast<int>(j));
    p.epsilon[j - 1] = 2;
  }
  return p;
}

std::int64_t phi(const DiamondParams& params, std::int64_t j) {
  if (j < 1 || j > params.beta)
    throw std::invalid_argument("phi: " + std::to_string(j) + " outside 1.." + std::to_string(params.beta));
  return j + ceil_div(j - 3, 5);
}

std::int64_t phi_inv(const DiamondParams& params, std::int64_t v) {
  const auto& a = params.value_set;
  if (!std::binary_search(a.begin(), a.end(), v))
    throw std::invalid_argument("phi_inv: " + std::to_string(v) + " is not in A_k");
  return v - ceil_div(v - 3, 6);
}

std::vector<Integer> counts_via_shifts(const DiamondParams& params, std::int64_t n_max) {
  const auto p = partition_counts_dp(params.seq, n_max);
  std::vector<Integer> out(p.size(), 0);
  for (std::int64_t n = 0; n <= n_max; ++n)
    for (auto m : params.shifts)
      if (n >= m) out[n] += p[n - m];
  return out;
}

Integer count_via_shifts(const DiamondParams& params, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("count_via_shifts: n must be >= 0");
  return counts_via_shifts(params, n)[n];
}

QuasiPolynomial diamond_quasipoly(const DiamondParams& params) {
  return shifted_sum(quasipoly_from_moments(params.seq), params.shifts);
}

Integer weight_s(const DiamondParams& params, std::span<const std::int64_t> t, WeightRule rule) {
  if (static_cast<int>(t.size()) != params.beta)
    throw std::invalid_argument("weight_s: expected " + std::to_string(params.beta) + " coordinates");
  for (int j = 1; j <= params.beta; ++j) {
    const auto bound = duplicate_multiplicity(params, j) * (params.period / phi(params, j) - 1);
    if (t[j - 1] < 0 || t[j - 1] > bound)
      throw std::invalid_argument("weight_s: t_" + std::to_string(j) + " outside 0.." + std::to_string(bound));
  }
  Integer acc = 1;
  for (int j : params.bprime) {
    const auto top = 2 * (params.period / phi(params, j) - 1);
    const auto tj = t[j - 1];
    acc *= static_cast<long>(1 + (rule == WeightRule::min ? std::min(tj, top - tj) : std::max(tj, top - tj)));
  }
  return acc;
}

std::vector<MomentVariable> compressed_variables(const DiamondParams& params, WeightRule rule) {
  std::vector<MomentVariable> vars;
  for (int j = 1; j <= params.beta; ++j) {
    const auto v = phi(params, j);
    const auto len = params.period / v;
    if (duplicate_multiplicity(params, j) == 1) {
      vars.push_back(MomentVariable::uniform(v, len));
      continue;
    }
    const auto top = 2 * (len - 1);
    MomentVariable var{v, {}};
    for (std::int64_t t = 0; t <= top; ++t)
      var.weights.emplace_back(static_cast<long>(1 + (rule == WeightRule::min ? std::min(t, top - t)
                                                                                 : std::max(t, top - t))));
    vars.push_back(std::move(var));
  }
  return vars;
}

CompressedCounter::CompressedCounter(const DiamondParams& params, CompressedOptions options)
    : params_(params),
      options_(std::move(options)),
      shifts_(options_.shifts.value_or(params.shifts)),
      terms_(options_.product_terms > 0 ? options_.product_terms : 3 * params.k),
      stirling_(stirling_first_row(terms_ + 1)),
      variables_(compressed_variables(params, options_.weight)) {
  bool direct = options_.engine == CompressedEngine::direct ||
                (options_.engine == CompressedEngine::automatic && params.k == 1);
  if (direct) {
    Integer box = 1;
    for (const auto& v : variables_) box *= static_cast<long>(v.weights.size());
    if (box > Integer(static_cast<long>(options_.tuple_budget)))
      throw BudgetExceeded("compressed box of " + to_string(box) + " tuples exceeds budget " +
                           std::to_string(options_.tuple_budget));
  } else {
    moments_.emplace(residue_moments(variables_, params.period, terms_));
  }
}

Rational CompressedCounter::value_direct(std::int64_t n) const {
  const std::int64_t d = params_.period;
  const size_t nv = variables_.size();
  Integer acc = 0;
  Integer prod;
  for (auto m : shifts_) {
    std::vector<std::int64_t> t(nv, 0);
    std::int64_t s = 0;
    while (true) {
      if (floor_mod(n - m - s, d) == 0) {
        const std::int64_t x = (n - m - s) / d;
        prod = 1;
        for (std::int64_t l = 1; l <= terms_; ++l) prod *= static_cast<long>(x + l);
        for (size_t i = 0; i < nv; ++i) prod *= variables_[i].weights[t[i]];
        acc += prod;
      }
      size_t i = 0;
      for (; i < nv; ++i) {
        if (++t[i] < static_cast<std::int64_t>(variables_[i].weights.size())) {
          s += variables_[i].step;
          break;
        }
        s -= variables_[i].step * (t[i] - 1);
        t[i] = 0;
      }
      if (i == nv) break;
    }
  }
  return Rational(acc) / Rational(factorial(3 * params_.k));
}

Rational CompressedCounter::value_moments(std::int64_t n) const {
  Rational acc = 0;
  for (auto m : shifts_) {
    const std::int64_t y = n - m;
    const auto coeffs = counting_product_coefficients(moments_->row(floor_mod(y, params_.period)), terms_,
                                                      params_.period);
    acc += Polynomial(coeffs)(Rational(Integer(static_cast<long>(y))));
  }
  return acc / Rational(factorial(3 * params_.k));
}

Rational CompressedCounter::value(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("compressed count: n must be >= 0");
  return moments_ ? value_moments(n) : value_direct(n);
}

Integer CompressedCounter::count(std::int64_t n) const {
  const Integer out = require_integer(value(n), "count_compressed");
  if (out < 0) throw InvariantViolation("count_compressed: negative count " + to_string(out));
  return out;
}

Integer count_compressed(const DiamondParams& params, std::int64_t n, const CompressedOptions& options) {
  return CompressedCounter(params, options).count(n);
}

Polynomial diamond_polypart_compressed(const DiamondParams& params, const CompressedOptions& options) {
  const int terms = options.product_terms > 0 ? options.product_terms : 3 * params.k;
  const auto vars = compressed_variables(params, options.weight);
  const auto totals = residue_moments(vars, 1, terms);
  const Polynomial per_shift(counting_product_coefficients(totals.row(0), terms, params.period));
  Polynomial sum;
  for (auto m : options.shifts.value_or(params.shifts)) sum += per_shift.shifted(m);
  const Rational norm = Rational(1) / Rational(Integer(static_cast<long>(params.period)) * factorial(3 * params.k));
  std::vector<Rational> coeffs = sum.coefficients();
  for (auto& c : coeffs) c *= norm;
  return Polynomial(std::move(coeffs));
}

Polynomial diamond_polypart_bernoulli(const DiamondParams& params) {
  const auto base = polynomial_part_bernoulli(params.seq);
  Polynomial sum;
  for (auto m : params.shifts) sum += base.shifted(m);
  return sum;
}

QuasiPolynomial diamond_wave(const DiamondParams& params, std::int64_t j, WaveFormula formula) {
  return shifted_sum(sylvester_wave(params.seq, j, formula), params.shifts);
}

std::map<std::int64_t, QuasiPolynomial> diamond_waves(const DiamondParams& params) {
  const auto moments = residue_moments(params.seq, params.seq.size() - 1);
  std::map<std::int64_t, QuasiPolynomial> out;
  for (auto j : params.seq.part_divisors())
    out.emplace(j, shifted_sum(sylvester_wave(params.seq, j, moments), params.shifts));
  return out;
}

}  // namespace ppd
