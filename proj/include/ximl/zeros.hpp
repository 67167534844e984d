#ifndef XIML_ZEROS_HPP
#define XIML_ZEROS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ximl/coefficients.hpp"
#include "ximl/constants.hpp"
#include "ximl/precision.hpp"
#include "ximl/series.hpp"

namespace ximl {

/// Ordinates t_r of non-trivial zeros, ascending. `texts` keeps the decimal
/// strings so exact rational work stays possible.
struct ZeroTable {
  std::vector<Real> values;
  std::vector<std::string> texts;
  std::string source;
  std::vector<std::string> warnings;

  int count() const { return static_cast<int>(values.size()); }
};

/// Reads up to max_count ordinates (all when max_count < 0). Blank lines and
/// `#` comments are skipped. Unsorted input is sorted with a warning.
ZeroTable read_zeros(std::istream& in, const std::string& source, long max_count, const PrecisionContext& ctx);
ZeroTable load_zeros(const std::string& path, long max_count, const PrecisionContext& ctx);

/// Same table restricted to the first m ordinates.
ZeroTable first_zeros(const ZeroTable& zt, int m);

struct SymmetricSums {
  /// p[k] = sum (1/t_r^2)^k and e[k] for k = 0..k_max; p[0] = M, e[0] = 1.
  std::vector<Real> p;
  std::vector<Real> e;
  int M = 0;
  /// (ln(t_M/2pi) + 1)/(2 pi t_M): heuristic size of the p_1 tail beyond t_M.
  Real tail_bound;
};

/// Power sums directly, elementary symmetric sums by Newton's identities.
SymmetricSums symmetric_sums(const ZeroTable& zt, int k_max, const PrecisionContext& ctx);

/// e_k from power sums: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
template <class T>
std::vector<T> newton_elementary(const std::vector<T>& p) {
  std::vector<T> e(p.size());
  if (e.empty()) return e;
  e[0] = 1;
  for (std::size_t k = 1; k < p.size(); ++k) {
    T acc = 0;
    for (std::size_t i = 1; i <= k; ++i) {
      const T term = e[k - i] * p[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc / static_cast<long>(k);
  }
  return e;
}

/// Exact 1/t_r^2 from the decimal texts.
std::vector<Rational> inverse_squares_exact(const ZeroTable& zt);

Real zero_tail_bound(const Real& t_m, const PrecisionContext& ctx);

/// c_n = (-1)^n c_0 n! e_n with c_0 = 16 b_0 = -Gamma(1/4) zeta(1/2) / (4 pi^{1/4}).
Real jensen_from_zeros(const ZeroTable& zt, int n, const CoefficientTable& table, const PrecisionContext& ctx);

struct RhoSum {
  /// sum_{r<=M} 1/(1/4 + t_r^2)
  Real value;
  /// 1 + gamma/2 - ln(4 pi)/2
  Real identity_rhs;
};

RhoSum rho_sum(const ZeroTable& zt, const PrecisionContext& ctx);

/// prod_{r<=M} t_r^2/(1/4 + t_r^2); error_bound = value (1 - exp(-tail_bound/4)).
SeriesResult<Real> hadamard_c0(const ZeroTable& zt, const PrecisionContext& ctx);

}  // namespace ximl

#endif  // XIML_ZEROS_HPP
