#include "ximl/quadrature.hpp"

#include <cmath>

#include "ximl/errors.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

GaussLegendreRule gauss_legendre(int order, const PrecisionContext& ctx) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  PrecisionGuard guard(ctx);
  const Real tol = pow(Real(10), -ctx.working_digits());
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    Real x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    Real derivative;
    for (int iter = 0; iter < 200; ++iter) {
      Real p_prev(1);
      Real p = x;
      for (int k = 2; k <= order; ++k) {
        Real p_next = ((2 * k - 1) * x * p - (k - 1) * p_prev) / k;
        p_prev = std::move(p);
        p = std::move(p_next);
      }
      derivative = order * (x * p - p_prev) / (x * x - 1);
      const Real dx = p / derivative;
      x -= dx;
      if (mp::abs(dx) <= tol) break;
    }
    const Real w = 2 / ((1 - x * x) * derivative * derivative);
    // Roots come out descending; store ascending and mirror.
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0;
  return rule;
}

namespace {

std::vector<Real> composite(const VectorIntegrand& f, std::size_t components, const Real& a,
                            const Real& b, int panels, const GaussLegendreRule& rule) {
  std::vector<Real> total(components, Real(0));
  std::vector<Real> panel_sum(components);
  std::vector<Real> values(components);
  const Real width = (b - a) / panels;
  const Real half = width / 2;
  for (int p = 0; p < panels; ++p) {
    const Real mid = a + width * p + half;
    for (auto& v : panel_sum) v = 0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      f(mid + half * rule.nodes[k], values);
      for (std::size_t c = 0; c < components; ++c) panel_sum[c] += rule.weights[k] * values[c];
    }
    for (std::size_t c = 0; c < components; ++c) total[c] += half * panel_sum[c];
  }
  return total;
}

}  // namespace

PanelIntegral integrate_doubling(const VectorIntegrand& f, std::size_t components, const Real& a,
                                 const Real& b, const DoublingOptions& options,
                                 const PrecisionContext& ctx) {
  if (!(b > a)) throw DomainError("integrate_doubling: empty interval");
  if (options.initial_panels < 1) throw DomainError("integrate_doubling: need at least one panel");
  PrecisionGuard guard(ctx);
  const GaussLegendreRule rule = gauss_legendre(options.order, ctx);
  PanelIntegral result;
  result.panels = options.initial_panels;
  result.values = composite(f, components, a, b, result.panels, rule);
  result.deltas.assign(components, Real(0));
  for (int d = 1; d <= options.max_doublings; ++d) {
    result.panels *= 2;
    std::vector<Real> refined = composite(f, components, a, b, result.panels, rule);
    bool agree = true;
    for (std::size_t c = 0; c < components; ++c) {
      result.deltas[c] = mp::abs(refined[c] - result.values[c]);
      if (result.deltas[c] > options.target_abs_error) agree = false;
    }
    result.values = std::move(refined);
    result.doublings = d;
    if (agree) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace ximl
