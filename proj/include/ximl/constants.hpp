#ifndef XIML_CONSTANTS_HPP
#define XIML_CONSTANTS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "ximl/coefficients.hpp"
#include "ximl/precision.hpp"
#include "ximl/series.hpp"

namespace ximl {

using Rational = boost::multiprecision::mpq_rational;

/// Which coefficient column feeds a series.
enum class Method { a_series, b_series, c_series };

std::string to_string(Method method);
/// Accepts "a", "b", "c".
Method parse_method(const std::string& text);
Family family_of(Method method);

struct GammaDecomposition {
  /// log(4 pi) - 2
  Real constant_part;
  /// The full series term added to constant_part.
  SeriesResult<Real> series_part;
  /// sum n a_2n/4^n, sum n b_n/(2n)! or sum n (-1)^n c_n/(4^n n!).
  Real inner_sum;
  Method method = Method::a_series;

  Real value() const { return constant_part + series_part.value; }
};

/// gamma = log(4 pi) - 2 + S over n = 1..N. N = 0 gives the constant part.
GammaDecomposition gamma_series(Method method, const CoefficientTable& table, int N, const PrecisionContext& ctx);

/// 3/2 - ln(2 pi) - S with the same S as gamma_series.
SeriesResult<Real> lugo(Method method, const CoefficientTable& table, int N, const PrecisionContext& ctx);

/// sum_{i,j<=n} 1/(i+j) - 2n ln 2 + ln n, by pair counts in O(n).
Real lugo_direct(long n, const PrecisionContext& ctx);

/// -64 pi^{1/4} b_0 = Gamma(1/4) zeta(1/2).
Real gamma_quarter_zeta_half(const CoefficientTable& table, const PrecisionContext& ctx);

/// 8 pi^{1/4} (sum_{n=1..N} a_2n/4^n - 1/2), the same quantity via the a column.
Real gamma_quarter_zeta_half_series(const CoefficientTable& table, int N, const PrecisionContext& ctx);

/// gamma_quarter_zeta_half / Gamma(1/4).
Real zeta_half(const CoefficientTable& table, const PrecisionContext& ctx);

/// sum_{n=0..N} a_2n w^{2n} with a_2n taken from the method's column.
SeriesResult<Real> a_series_sum(Method method, const CoefficientTable& table, int N, const Real& w,
                                const PrecisionContext& ctx);

struct BernoulliValue {
  int index = 0;
  SeriesResult<Real> series_value;
  Rational exact_value;
  Method method = Method::a_series;
};

BernoulliValue bernoulli_series(int r, Method method, const CoefficientTable& table, int N,
                                const PrecisionContext& ctx);

/// Exact B_k by the Akiyama-Tanigawa tableau. B_1 = -1/2.
Rational bernoulli_exact(int k);

/// Product of primes p with (p - 1) | k, for even k >= 2.
boost::multiprecision::mpz_int von_staudt_denominator(int k);

/// Coefficient of z^n in z / ln(1 + z).
Rational gregory_coefficient(int n);

struct GregoryBridge {
  int r = 0;
  Real lhs;
  Real rhs;
  Real residual;
};

/// lhs = bernoulli_series(r), rhs = (-G_2r (2r-1) (2r)!)^{1/(2r-1)}. No equality is asserted.
GregoryBridge gregory_bridge(int r, const CoefficientTable& table, int N, const PrecisionContext& ctx,
                             Method method = Method::a_series);

struct BernoulliPartialSums {
  /// 1/2 + sum_{n=1..k} B_2n/(2n), for k = 1..N.
  std::vector<Rational> partial_sums;
  /// k with the smallest |B_2k/(2k)|.
  int argmin = 0;
  Rational smallest_term;
};

BernoulliPartialSums gamma_bernoulli_partial(int N);

/// zeta(2r) = pi^r / ((2r-1) r!) sum a_2n (2r - 1/2)^{2n}.
SeriesResult<Real> zeta_even(int r, const CoefficientTable& table, int N, const PrecisionContext& ctx,
                             Method method = Method::a_series);

/// Closed form (-1)^{r-1} (2 pi)^{2r} B_2r / (2 (2r)!).
Real zeta_even_exact(int r, const PrecisionContext& ctx);

Real to_real(const Rational& q, const PrecisionContext& ctx);

}  // namespace ximl

#endif  // XIML_CONSTANTS_HPP
