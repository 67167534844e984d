#include "ximl/numerics.hpp"

#include <cmath>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "ximl/errors.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

Real agm(const Real& a, const Real& b, const PrecisionContext& ctx) {
  if (a <= 0 || b <= 0) throw DomainError("agm: arguments must be positive");
  PrecisionGuard guard(ctx);
  const Real tol = pow(Real(10), -ctx.working_digits());
  Real x = a;
  Real y = b;
  // One step first so the stopping test sees symmetric iterates.
  do {
    Real next_x = (x + y) / 2;
    Real next_y = mp::sqrt(x * y);
    x = std::move(next_x);
    y = std::move(next_y);
  } while (mp::abs(x - y) > tol * x);
  return x;
}

Real gauss_constant(const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  return 1 / agm(Real(1), mp::sqrt(Real(2)), ctx);
}

Real gamma_quarter(const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  return mp::sqrt(2 * gauss_constant(ctx) * mp::sqrt(2 * p * p * p));
}

int spouge_parameter(const PrecisionContext& ctx) {
  return static_cast<int>(std::ceil(ctx.working_digits() * std::log(10.0) / std::log(2.0 * M_PI))) + 2;
}

namespace {

bool is_nonpositive_integer(const ComplexValue& z) {
  return z.im == 0 && z.re <= 0 && mp::floor(z.re) == z.re;
}

// Gamma(w + 1) for Re(w) >= -1/2.
ComplexValue spouge(const ComplexValue& w, int a, const PrecisionContext& ctx) {
  // The c_k alternate with magnitude ~ (2 pi)^a; double the precision.
  PrecisionGuard guard(2 * ctx.working_digits() + 10);
  const Real two_pi = 2 * pi(ctx.widened(ctx.working_digits() + 10));
  const Real ra(a);
  ComplexValue sum(mp::sqrt(two_pi));
  Real factorial(1);
  for (int k = 1; k < a; ++k) {
    if (k > 1) factorial *= (k - 1);
    const Real base = ra - k;
    Real c = mp::pow(base, Real(k) - Real(0.5)) * mp::exp(base) / factorial;
    if (k % 2 == 0) c = -c;
    sum += ComplexValue(c) / (w + ComplexValue(Real(k)));
  }
  const ComplexValue shifted = w + ComplexValue(ra);
  const ComplexValue power = pow(shifted, w + ComplexValue(Real(0.5)));
  return power * exp(-shifted) * sum;
}

}  // namespace

ComplexValue complex_gamma(const ComplexValue& z, const PrecisionContext& ctx) {
  if (is_nonpositive_integer(z)) throw PoleError("complex_gamma: pole at non-positive integer");
  PrecisionGuard guard(ctx);
  const int a = spouge_parameter(ctx);
  if (z.re < Real(0.5)) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    const Real p = pi(ctx.widened(ctx.working_digits() + 10));
    const ComplexValue one_minus = ComplexValue(Real(1)) - z;
    const ComplexValue reflected = spouge(one_minus - ComplexValue(Real(1)), a, ctx);
    const ComplexValue result = ComplexValue(p) / (sin(ComplexValue(p) * z) * reflected);
    return require_finite(ComplexValue(rounded(result.re, ctx), rounded(result.im, ctx)), "complex_gamma");
  }
  const ComplexValue result = spouge(z - ComplexValue(Real(1)), a, ctx);
  return require_finite(ComplexValue(rounded(result.re, ctx), rounded(result.im, ctx)), "complex_gamma");
}

namespace {

// B_0, B_2, ..., B_{2p} by the classical binomial recurrence. Kept local so
// the zeta oracle does not depend on the Bernoulli machinery it checks.
std::vector<mp::mpq_rational> even_bernoulli(int p) {
  const int top = 2 * p;
  std::vector<mp::mpq_rational> b(static_cast<std::size_t>(top) + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    mp::mpq_rational acc = 0;
    mp::mpz_int binom = 1;  // C(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += mp::mpq_rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  std::vector<mp::mpq_rational> even;
  for (int j = 0; j <= p; ++j) even.push_back(b[static_cast<std::size_t>(2 * j)]);
  return even;
}

Real to_real(const mp::mpq_rational& q) {
  return Real(mp::numerator(q).str()) / Real(mp::denominator(q).str());
}

}  // namespace

SeriesResult<Real> dirichlet_zeta_minus_one(int n, const PrecisionContext& ctx) {
  if (n < 2) throw DomainError("dirichlet_zeta: n must be >= 2");
  PrecisionGuard guard(ctx);
  const int K = ctx.working_digits() / 2 + 10;
  const int p = ctx.working_digits() / 2 + 5;
  const Real s(n);
  Real sum(0);
  for (int k = 2; k < K; ++k) sum += mp::pow(Real(k), -s);
  const Real rk(K);
  Real tail = mp::pow(rk, 1 - s) / (s - 1) + mp::pow(rk, -s) / 2;
  const auto bern = even_bernoulli(p + 1);
  Real rising = s;  // (s)_{2j-1}
  Real factorial(2);
  Real next_term(0);
  for (int j = 1; j <= p + 1; ++j) {
    if (j > 1) {
      rising *= (s + 2 * j - 3) * (s + 2 * j - 2);
      factorial *= Real(2 * j - 1) * (2 * j);
    }
    Real term = to_real(bern[static_cast<std::size_t>(j)]) / factorial * rising * mp::pow(rk, -s - 2 * j + 1);
    if (j <= p) {
      tail += term;
    } else {
      next_term = mp::abs(term);
    }
  }
  return {sum + tail, K - 1, next_term, BoundKind::rigorous};
}

SeriesResult<Real> gamma_reference(const PrecisionContext& ctx, int terms) {
  if (terms < 2) throw DomainError("gamma_reference: terms must be >= 2");
  PrecisionGuard guard(ctx);
  Real sum(0);
  Real zeta_error(0);
  for (int n = 2; n <= terms; ++n) {
    const auto z = dirichlet_zeta_minus_one(n, ctx);
    const Real term = (1 + z.value) / n;
    sum += (n % 2 == 0) ? term : Real(-term);
    zeta_error += z.error_bound / n;
  }
  const auto next = dirichlet_zeta_minus_one(terms + 1, ctx);
  const Real tail = (1 + next.value) / (terms + 1);
  return {sum, terms - 1, tail + zeta_error, BoundKind::rigorous};
}

SeriesResult<Real> gamma_reference_split(const PrecisionContext& ctx, int terms) {
  if (terms < 2) throw DomainError("gamma_reference: terms must be >= 2");
  PrecisionGuard guard(ctx);
  Real sum = 1 - ln2(ctx);
  Real zeta_error(0);
  for (int n = 2; n <= terms; ++n) {
    const auto z = dirichlet_zeta_minus_one(n, ctx);
    const Real term = z.value / n;
    sum += (n % 2 == 0) ? term : Real(-term);
    zeta_error += z.error_bound / n;
  }
  const auto next = dirichlet_zeta_minus_one(terms + 1, ctx);
  return {sum, terms - 1, next.value / (terms + 1) + zeta_error, BoundKind::rigorous};
}

int gamma_reference_split_terms(const PrecisionContext& ctx) {
  // (zeta(n) - 1)/n ~ 2^-n / n
  return static_cast<int>(std::ceil(ctx.working_digits() * std::log2(10.0))) + 2;
}

}  // namespace ximl
