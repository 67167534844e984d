#ifndef XIML_MOMENTS_HPP
#define XIML_MOMENTS_HPP

#include <iosfwd>
#include <vector>

#include "ximl/coefficients.hpp"
#include "ximl/precision.hpp"
#include "ximl/series.hpp"

namespace ximl {

enum class PanelRule { gauss_legendre_composite };

struct QuadratureConfig {
  Real t_max;
  PanelRule panel_rule = PanelRule::gauss_legendre_composite;
  Real target_abs_error;
  Real series_cutoff_rel;
  /// Upper limit of the x-integral for a_2n.
  Real x_max;
  int order = 40;
  int initial_panels = 4;
  int max_doublings = 20;

  /// t_max = 3, x_max = e^12, target 10^(-digits+5), cutoff 10^(-digits-10).
  static QuadratureConfig defaults(const PrecisionContext& ctx);
};

enum class MomentSource { quadrature, fixture };

struct MomentRecord {
  int n = 0;
  Real value;
  Real error_bound;
  MomentSource source = MomentSource::quadrature;
};

/// Phi(t) = sum_{k>=1} (2 k^4 pi^2 e^{9t} - 3 k^2 pi e^{5t}) exp(-k^2 pi e^{4t}),
/// stopping at the first term below cutoff_rel times the running sum.
Real phi(const Real& t, const PrecisionContext& ctx, const Real& cutoff_rel);
Real phi(const Real& t, const PrecisionContext& ctx);

/// Number of terms phi() keeps at t.
int phi_terms(const Real& t, const PrecisionContext& ctx, const Real& cutoff_rel);

/// 2 pi^2 e^{9t} exp(-pi e^{4t}) t^{2n}: dominates the moment integrand for t >= 1/2.
Real moment_envelope(const Real& t, int n, const PrecisionContext& ctx);

/// Upper bound on the integral of 2 * envelope over [t, inf).
Real moment_tail_bound(const Real& t, int n, const PrecisionContext& ctx);

/// Integral of t^{2n} Phi(t) over [0, inf).
MomentRecord turan_moment(int n, const QuadratureConfig& cfg, const PrecisionContext& ctx);

/// b_0..b_{n_max} in one quadrature pass.
std::vector<MomentRecord> turan_moments(int n_max, const QuadratureConfig& cfg, const PrecisionContext& ctx);

/// The fixture value as a record.
MomentRecord fixture_moment(int n, const PrecisionContext& ctx);

/// Quadrature moments with c_n and a_2n filled by conversion.
CoefficientTable moment_table(int n_max, const QuadratureConfig& cfg, const PrecisionContext& ctx);
CoefficientTable moment_table(const std::vector<MomentRecord>& records, const PrecisionContext& ctx);

/// a_2n from the x-integral over [1, x_max], independent of the moments.
SeriesResult<Real> a2n_integral(int n, const QuadratureConfig& cfg, const PrecisionContext& ctx);

/// First line `# xi-moment-lab moments digits=<D>`, then `n<TAB>value<TAB>error-bound`.
void write_moment_cache(std::ostream& out, const std::vector<MomentRecord>& records, int digits);
std::vector<MomentRecord> read_moment_cache(std::istream& in, int* digits = nullptr);

}  // namespace ximl

#endif  // XIML_MOMENTS_HPP
