#ifndef XIML_QUADRATURE_HPP
#define XIML_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "ximl/precision.hpp"

namespace ximl {

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

GaussLegendreRule gauss_legendre(int order, const PrecisionContext& ctx);

struct DoublingOptions {
  int order = 40;
  int initial_panels = 4;
  int max_doublings = 20;
  Real target_abs_error{0};
};

/// Result of composite Gauss-Legendre integration of a vector-valued integrand.
struct PanelIntegral {
  std::vector<Real> values;
  /// |last - previous| per component.
  std::vector<Real> deltas;
  int panels = 0;
  int doublings = 0;
  bool converged = false;
};

/// Writes f(x) for every component into `out` (already sized).
using VectorIntegrand = std::function<void(const Real& x, std::vector<Real>& out)>;

/// Composite Gauss-Legendre on [a, b], halving the panel width until two
/// successive refinements agree to target_abs_error in every component.
/// Panels are summed in ascending order so results do not depend on how the
/// integrand is scheduled.
PanelIntegral integrate_doubling(const VectorIntegrand& f, std::size_t components, const Real& a,
                                 const Real& b, const DoublingOptions& options,
                                 const PrecisionContext& ctx);

}  // namespace ximl

#endif  // XIML_QUADRATURE_HPP
