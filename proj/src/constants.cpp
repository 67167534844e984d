#include "ximl/constants.hpp"

#include "ximl/errors.hpp"
#include "ximl/numerics.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

std::string to_string(Method method) {
  switch (method) {
    case Method::a_series: return "a";
    case Method::b_series: return "b";
    case Method::c_series: return "c";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "a") return Method::a_series;
  if (text == "b") return Method::b_series;
  if (text == "c") return Method::c_series;
  throw FormatError("unknown method '" + text + "' (expected a, b or c)");
}

Family family_of(Method method) {
  switch (method) {
    case Method::a_series: return Family::a;
    case Method::b_series: return Family::bhat;
    case Method::c_series: return Family::c;
  }
  return Family::a;
}

Real to_real(const Rational& q, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  return Real(mp::numerator(q).str()) / Real(mp::denominator(q).str());
}

namespace {

Real factorial(int n) {
  Real f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

void require_terms(const CoefficientTable& table, int N, int first, const char* where) {
  if (N < 0) throw DomainError(std::string(where) + ": N must be non-negative");
  if (N > table.max_index()) {
    throw DomainError(std::string(where) + ": table covers n = " + std::to_string(first) + ".." +
                      std::to_string(table.max_index()) + ", N=" + std::to_string(N) + " requested");
  }
}

// a_2n from the column that `method` names, at exact conversion factors.
std::vector<Real> a_values(Method method, const CoefficientTable& table, const PrecisionContext& ctx) {
  std::vector<Real> v = values(table, family_of(method), ctx);
  for (std::size_t n = 0; n < v.size(); ++n) {
    const int i = static_cast<int>(n);
    if (method == Method::b_series) v[n] *= a_over_bhat(i, ctx);
    if (method == Method::c_series) v[n] /= c_over_a(i, ctx);
  }
  return v;
}

}  // namespace

GammaDecomposition gamma_series(Method method, const CoefficientTable& table, int N, const PrecisionContext& ctx) {
  require_terms(table, N, 1, "gamma_series");
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  GammaDecomposition d;
  d.method = method;
  d.constant_part = mp::log(4 * p) - 2;
  d.inner_sum = 0;
  Real last(0);
  if (N >= 1) {
    const std::vector<Real> col = values(table, family_of(method), ctx);
    Real four_n(1);
    for (int n = 1; n <= N; ++n) {
      four_n *= 4;
      const Real& x = col[static_cast<std::size_t>(n)];
      Real term;
      switch (method) {
        case Method::a_series: term = n * x / four_n; break;
        case Method::b_series: term = n * x / factorial(2 * n); break;
        case Method::c_series: {
          term = n * x / (four_n * factorial(n));
          if (n % 2 == 1) term = -term;
          break;
        }
      }
      d.inner_sum += term;
      last = term;
    }
  }
  const int scale = method == Method::a_series ? 16 : method == Method::b_series ? 128 : 8;
  d.series_part = {scale * d.inner_sum, N, 10 * scale * mp::abs(last), BoundKind::heuristic};
  return d;
}

SeriesResult<Real> lugo(Method method, const CoefficientTable& table, int N, const PrecisionContext& ctx) {
  const GammaDecomposition d = gamma_series(method, table, N, ctx);
  PrecisionGuard guard(ctx);
  const Real constant = Real(3) / 2 - mp::log(2 * pi(ctx));
  return {constant - d.series_part.value, N, d.series_part.error_bound, BoundKind::heuristic};
}

Real lugo_direct(long n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("lugo_direct: n must be >= 1");
  PrecisionGuard guard(ctx);
  // i + j = k occurs min(k - 1, 2n + 1 - k) times.
  Real sum(0);
  for (long k = 2; k <= 2 * n; ++k) {
    const long count = std::min(k - 1, 2 * n + 1 - k);
    sum += Real(count) / k;
  }
  return sum - 2 * n * ln2(ctx) + mp::log(Real(n));
}

Real gamma_quarter_zeta_half(const CoefficientTable& table, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  if (table.rows.empty() || table.rows[0].bhat.missing()) {
    throw DomainError("gamma_quarter_zeta_half: table has no b_0");
  }
  return -64 * mp::pow(pi(ctx), Real(1) / 4) * parse_real(table.rows[0].bhat.text);
}

Real gamma_quarter_zeta_half_series(const CoefficientTable& table, int N, const PrecisionContext& ctx) {
  require_terms(table, N, 1, "gamma_quarter_zeta_half_series");
  PrecisionGuard guard(ctx);
  const std::vector<Real> a = values(table, Family::a, ctx);
  Real sum(0);
  Real four_n(1);
  for (int n = 1; n <= N; ++n) {
    four_n *= 4;
    sum += a[static_cast<std::size_t>(n)] / four_n;
  }
  return 8 * mp::pow(pi(ctx), Real(1) / 4) * (sum - Real(1) / 2);
}

Real zeta_half(const CoefficientTable& table, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  return gamma_quarter_zeta_half(table, ctx) / gamma_quarter(ctx);
}

SeriesResult<Real> a_series_sum(Method method, const CoefficientTable& table, int N, const Real& w,
                                const PrecisionContext& ctx) {
  require_terms(table, N, 0, "a_series_sum");
  PrecisionGuard guard(ctx);
  const std::vector<Real> a = a_values(method, table, ctx);
  const Real w2 = w * w;
  Real power(1);
  Real sum(0);
  Real last(0);
  for (int n = 0; n <= N; ++n) {
    last = a[static_cast<std::size_t>(n)] * power;
    sum += last;
    power *= w2;
  }
  return {sum, N + 1, 10 * mp::abs(last), BoundKind::heuristic};
}

Rational bernoulli_exact(int k) {
  if (k < 0) throw DomainError("bernoulli_exact: k must be non-negative");
  std::vector<Rational> row(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) {
      const auto ju = static_cast<std::size_t>(j);
      row[ju - 1] = Rational(j) * (row[ju - 1] - row[ju]);
    }
  }
  // The tableau yields B_1 = +1/2.
  return k == 1 ? Rational(-1, 2) : row[0];
}

mp::mpz_int von_staudt_denominator(int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("von_staudt_denominator: k must be even and >= 2");
  mp::mpz_int product = 1;
  for (int p = 2; p <= k + 1; ++p) {
    if (k % (p - 1) != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) product *= p;
  }
  return product;
}

BernoulliValue bernoulli_series(int r, Method method, const CoefficientTable& table, int N,
                                const PrecisionContext& ctx) {
  if (r < 0) throw DomainError("bernoulli_series: r must be non-negative");
  PrecisionGuard guard(ctx);
  const Real w = Real(2 * r) - Real(1) / 2;
  const SeriesResult<Real> sum = a_series_sum(method, table, N, w, ctx);
  // (-1)^{r-1} (2r)! 2^{1-2r} / (pi^r (2r-1) r!); equals 2 at r = 0.
  Real prefactor = factorial(2 * r) * mp::pow(Real(2), 1 - 2 * r) /
                   (mp::pow(pi(ctx), r) * (2 * r - 1) * factorial(r));
  if (r % 2 == 0) prefactor = -prefactor;
  BernoulliValue b;
  b.index = 2 * r;
  b.method = method;
  b.series_value = {prefactor * sum.value, sum.terms_used, mp::abs(prefactor) * sum.error_bound,
                    BoundKind::heuristic};
  b.exact_value = bernoulli_exact(2 * r);
  return b;
}

Rational gregory_coefficient(int n) {
  if (n < 0) throw DomainError("gregory_coefficient: n must be non-negative");
  // z/ln(1+z) is the reciprocal of sum_k (-1)^k z^k/(k+1).
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) {
      const Rational l = Rational(k % 2 == 0 ? 1 : -1, k + 1);
      acc += l * g[static_cast<std::size_t>(m - k)];
    }
    g[static_cast<std::size_t>(m)] = -acc;
  }
  return g[static_cast<std::size_t>(n)];
}

GregoryBridge gregory_bridge(int r, const CoefficientTable& table, int N, const PrecisionContext& ctx,
                             Method method) {
  if (r < 1) throw DomainError("gregory_bridge: r must be >= 1");
  PrecisionGuard guard(ctx);
  GregoryBridge g;
  g.r = r;
  g.lhs = bernoulli_series(r, method, table, N, ctx).series_value.value;
  const Real radicand = -to_real(gregory_coefficient(2 * r), ctx) * (2 * r - 1) * factorial(2 * r);
  // 2r - 1 is odd, so the real root exists for either sign.
  const Real root = mp::pow(mp::abs(radicand), Real(1) / (2 * r - 1));
  g.rhs = radicand < 0 ? Real(-root) : root;
  g.residual = g.lhs - g.rhs;
  return g;
}

BernoulliPartialSums gamma_bernoulli_partial(int N) {
  if (N < 1) throw DomainError("gamma_bernoulli_partial: N must be >= 1");
  BernoulliPartialSums out;
  Rational sum(1, 2);
  for (int k = 1; k <= N; ++k) {
    const Rational term = bernoulli_exact(2 * k) / (2 * k);
    sum += term;
    out.partial_sums.push_back(sum);
    const Rational magnitude = mp::abs(term);
    if (k == 1 || magnitude < out.smallest_term) {
      out.smallest_term = magnitude;
      out.argmin = k;
    }
  }
  return out;
}

SeriesResult<Real> zeta_even(int r, const CoefficientTable& table, int N, const PrecisionContext& ctx,
                             Method method) {
  if (r < 1) throw DomainError("zeta_even: r must be >= 1");
  PrecisionGuard guard(ctx);
  const SeriesResult<Real> sum = a_series_sum(method, table, N, Real(2 * r) - Real(1) / 2, ctx);
  const Real prefactor = mp::pow(pi(ctx), r) / ((2 * r - 1) * factorial(r));
  return {prefactor * sum.value, sum.terms_used, prefactor * sum.error_bound, BoundKind::heuristic};
}

Real zeta_even_exact(int r, const PrecisionContext& ctx) {
  if (r < 1) throw DomainError("zeta_even_exact: r must be >= 1");
  PrecisionGuard guard(ctx);
  Real v = mp::pow(2 * pi(ctx), 2 * r) * to_real(bernoulli_exact(2 * r), ctx) / (2 * factorial(2 * r));
  return r % 2 == 1 ? v : Real(-v);
}

}  // namespace ximl
