#include "ximl/xi_eval.hpp"

#include <fstream>
#include <limits>
#include <ostream>

#include "ximl/errors.hpp"
#include "ximl/numerics.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

XiSeries make_xi_series(const CoefficientTable& table, int N, const PrecisionContext& ctx, Method method) {
  if (N < 0 || N > table.max_index()) {
    throw DomainError("xi series: N=" + std::to_string(N) + " outside table range 0.." +
                      std::to_string(table.max_index()));
  }
  PrecisionGuard guard(ctx);
  XiSeries xs;
  xs.table = table;
  xs.N = N;
  xs.method = method;
  std::vector<Real> column = values(table, family_of(method), ctx);
  for (int n = 0; n <= N; ++n) {
    Real v = column[static_cast<std::size_t>(n)];
    if (method == Method::b_series) v *= a_over_bhat(n, ctx);
    if (method == Method::c_series) v /= c_over_a(n, ctx);
    xs.a.push_back(std::move(v));
  }
  const Real last = mp::abs(xs.a.back());
  if (N == 0 || last == 0) {
    xs.validity_radius = N == 0 ? Real(0) : Real(std::numeric_limits<double>::infinity());
  } else {
    xs.validity_radius = mp::pow(Real("1e-6") / last, Real(1) / (2 * N));
  }
  return xs;
}

ComplexValue xi_at_offset(const ComplexValue& d, const XiSeries& xs, const PrecisionContext& ctx,
                          bool* beyond_radius) {
  PrecisionGuard guard(ctx);
  if (beyond_radius != nullptr) *beyond_radius = abs(d) > xs.validity_radius;
  const ComplexValue w = d * d;
  ComplexValue acc(xs.a.back());
  for (int n = xs.N - 1; n >= 0; --n) {
    acc *= w;
    acc.re += xs.a[static_cast<std::size_t>(n)];
  }
  return require_finite(acc, "xi");
}

ComplexValue xi(const ComplexValue& s, const XiSeries& xs, const PrecisionContext& ctx, bool* beyond_radius) {
  PrecisionGuard guard(ctx);
  return xi_at_offset(ComplexValue(s.re - Real(1) / 2, s.im), xs, ctx, beyond_radius);
}

ComplexValue zeta(const ComplexValue& s, const XiSeries& xs, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  const ComplexValue s_minus_one = s - ComplexValue(Real(1));
  if (abs(s_minus_one) < Real("1e-6")) throw PoleError("zeta: s is within 1e-6 of the pole at s = 1");
  const ComplexValue half_s(s.re / 2, s.im / 2);
  const ComplexValue gamma = complex_gamma(ComplexValue(Real(1)) + half_s, ctx);
  const ComplexValue pi_power = exp(half_s * ComplexValue(mp::log(pi(ctx))));
  return require_finite(xi(s, xs, ctx) * pi_power / (s_minus_one * gamma), "zeta");
}

HadamardComparison hadamard_eval(const Real& x, const ZeroTable& zt, const XiSeries& xs, const PrecisionContext& ctx) {
  if (zt.count() < 1) throw DomainError("hadamard_eval: no zeros");
  PrecisionGuard guard(ctx);
  HadamardComparison h;
  h.product_value = 1;
  const Real x2 = x * x;
  const Real quarter = Real(1) / 4;
  for (const auto& t : zt.values) {
    const Real t2 = t * t;
    h.product_value *= (t2 - x2) / (quarter + t2);
  }
  h.taylor_value = 2 * xi_at_offset(ComplexValue(Real(0), x), xs, ctx).re;
  return h;
}

std::vector<Real> power_basis(const XiSeries& xs, int J, const PrecisionContext& ctx) {
  if (J < 0 || J > 2 * xs.N) {
    throw DomainError("power_basis: J=" + std::to_string(J) + " outside 0.." + std::to_string(2 * xs.N));
  }
  PrecisionGuard guard(ctx);
  const Real minus_half = Real(-1) / 2;
  std::vector<Real> g;
  for (int j = 0; j <= J; ++j) {
    Real sum(0);
    for (int n = (j + 1) / 2; n <= xs.N; ++n) {
      const int m = 2 * n;
      Real binom(1);
      for (int k = 0; k < j; ++k) binom = binom * (m - k) / (k + 1);
      sum += xs.a[static_cast<std::size_t>(n)] * binom * mp::pow(minus_half, m - j);
    }
    g.push_back(std::move(sum));
  }
  return g;
}

GridSpec GridSpec::standard() {
  GridSpec spec;
  spec.re_min = 0;
  spec.re_max = 1;
  spec.im_min = -15;
  spec.im_max = 15;
  spec.steps = 61;
  return spec;
}

void GridSpec::validate() const {
  if (steps < 2) throw DomainError("grid: steps must be at least 2");
  if (!(re_max > re_min)) throw DomainError("grid: empty real range");
  if (!(im_max > im_min)) throw DomainError("grid: empty imaginary range");
}

namespace {

// ((lo (S-1-k) + hi k) / (S-1)): swapping lo and hi with k <-> S-1-k gives the
// same operations, so symmetric ranges produce exact negatives.
Real node(const Real& lo, const Real& hi, int k, int steps) {
  return (lo * (steps - 1 - k) + hi * k) / (steps - 1);
}

}  // namespace

std::vector<GridNode> grid_nodes(const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx) {
  spec.validate();
  PrecisionGuard guard(ctx);
  const Real half = Real(1) / 2;
  const Real d_min = spec.re_min - half;
  const Real d_max = spec.re_max - half;
  std::vector<GridNode> nodes;
  nodes.reserve(static_cast<std::size_t>(spec.steps) * static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const Real im = node(spec.im_min, spec.im_max, i, spec.steps);
    for (int k = 0; k < spec.steps; ++k) {
      const Real d = node(d_min, d_max, k, spec.steps);
      GridNode g;
      g.re = half + d;
      g.im = im;
      g.value = xi_at_offset(ComplexValue(d, im), xs, ctx);
      nodes.push_back(std::move(g));
    }
  }
  return nodes;
}

void write_grid(std::ostream& out, const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx) {
  const std::vector<GridNode> nodes = grid_nodes(spec, xs, ctx);
  PrecisionGuard guard(ctx);
  const int digits = ctx.working_digits();
  out << "re,im,xi_re,xi_im,xi_abs\n";
  for (const auto& g : nodes) {
    out << to_scientific(g.re, digits) << ',' << to_scientific(g.im, digits) << ',' << to_scientific(g.value.re, digits)
        << ',' << to_scientific(g.value.im, digits) << ',' << to_scientific(abs(g.value), digits) << '\n';
  }
  if (!out) throw IoError("grid: write failed");
}

void write_grid_file(const std::string& path, const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx) {
  spec.validate();
  std::ofstream out(path);
  if (!out) throw IoError("cannot write grid file " + path);
  write_grid(out, spec, xs, ctx);
  out.close();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace ximl
