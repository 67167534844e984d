#ifndef XIML_NUMERICS_HPP
#define XIML_NUMERICS_HPP

#include "ximl/complex.hpp"
#include "ximl/precision.hpp"
#include "ximl/series.hpp"

namespace ximl {

/// Arithmetic-geometric mean; iterates until |a_k - b_k| <= eps * a_k.
Real agm(const Real& a, const Real& b, const PrecisionContext& ctx);

/// Gauss's constant 1/agm(1, sqrt 2).
Real gauss_constant(const PrecisionContext& ctx);

/// Gamma(1/4) = sqrt(2 G sqrt(2 pi^3)) with G the Gauss constant.
Real gamma_quarter(const PrecisionContext& ctx);

/// Number of Spouge terms used for a given working precision.
int spouge_parameter(const PrecisionContext& ctx);

/// Gamma(z) for complex z by Spouge's approximation, with the reflection
/// formula for Re(z) < 1/2. Throws PoleError at non-positive integers.
ComplexValue complex_gamma(const ComplexValue& z, const PrecisionContext& ctx);

/// zeta(n) - 1 for integer n >= 2 by Dirichlet summation with an
/// Euler-Maclaurin tail. error_bound is the first omitted tail term.
SeriesResult<Real> dirichlet_zeta_minus_one(int n, const PrecisionContext& ctx);

/// Partial sum sum_{n=2}^{terms} (-1)^n zeta(n)/n. This is a slowly
/// converging alternating series; error_bound covers the alternating tail
/// and the zeta evaluation error.
SeriesResult<Real> gamma_reference(const PrecisionContext& ctx, int terms);

/// The same series with zeta(n) split as 1 + (zeta(n) - 1): the unit parts
/// sum in closed form to 1 - ln 2 and the rest converges like 2^-n.
SeriesResult<Real> gamma_reference_split(const PrecisionContext& ctx, int terms);

/// Number of split terms needed to reach the context's working precision.
int gamma_reference_split_terms(const PrecisionContext& ctx);

}  // namespace ximl

#endif  // XIML_NUMERICS_HPP
