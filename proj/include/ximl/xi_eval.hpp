#ifndef XIML_XI_EVAL_HPP
#define XIML_XI_EVAL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ximl/coefficients.hpp"
#include "ximl/complex.hpp"
#include "ximl/constants.hpp"
#include "ximl/precision.hpp"
#include "ximl/zeros.hpp"

namespace ximl {

/// xi(s) = sum_{n<=N} a_2n (s - 1/2)^{2n}, a_2n taken from one column.
struct XiSeries {
  CoefficientTable table;
  int N = 0;
  Method method = Method::a_series;
  std::vector<Real> a;
  /// Largest |s - 1/2| with |a_2N| R^{2N} < 1e-6.
  Real validity_radius;
};

XiSeries make_xi_series(const CoefficientTable& table, int N, const PrecisionContext& ctx,
                        Method method = Method::a_series);

/// Horner in d^2. Sets *beyond_radius when |d| exceeds the validity radius.
ComplexValue xi_at_offset(const ComplexValue& d, const XiSeries& xs, const PrecisionContext& ctx,
                          bool* beyond_radius = nullptr);

ComplexValue xi(const ComplexValue& s, const XiSeries& xs, const PrecisionContext& ctx, bool* beyond_radius = nullptr);

/// xi(s) pi^{s/2} / ((s - 1) Gamma(1 + s/2)). PoleError within 1e-6 of s = 1
/// and at the poles of the gamma factor.
ComplexValue zeta(const ComplexValue& s, const XiSeries& xs, const PrecisionContext& ctx);

struct HadamardComparison {
  /// prod_{r<=M} (t_r^2 - x^2)/(1/4 + t_r^2)
  Real product_value;
  /// 2 xi(1/2 + ix)
  Real taylor_value;
};

HadamardComparison hadamard_eval(const Real& x, const ZeroTable& zt, const XiSeries& xs, const PrecisionContext& ctx);

/// G_0..G_J with xi(s) = sum_j G_j s^j for the truncated series.
std::vector<Real> power_basis(const XiSeries& xs, int J, const PrecisionContext& ctx);

struct GridSpec {
  Real re_min;
  Real re_max;
  Real im_min;
  Real im_max;
  int steps = 61;

  /// (0, 1) x (-15, 15), 61 steps.
  static GridSpec standard();
  void validate() const;
};

struct GridNode {
  Real re;
  Real im;
  ComplexValue value;
};

/// Nodes in row-major order, im outer. Offsets from 1/2 are formed so that
/// mirrored nodes are exact negatives of each other.
std::vector<GridNode> grid_nodes(const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx);

/// Header `re,im,xi_re,xi_im,xi_abs`, one row per node.
void write_grid(std::ostream& out, const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx);
void write_grid_file(const std::string& path, const GridSpec& spec, const XiSeries& xs, const PrecisionContext& ctx);

}  // namespace ximl

#endif  // XIML_XI_EVAL_HPP
