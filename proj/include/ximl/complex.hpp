#ifndef XIML_COMPLEX_HPP
#define XIML_COMPLEX_HPP

#include <string>

#include "ximl/precision.hpp"

namespace ximl {

/// Arbitrary-precision complex number. std::complex is unspecified for
/// non-builtin scalars, so the handful of operations needed live here.
struct ComplexValue {
  Real re;
  Real im;

  ComplexValue() : re(0), im(0) {}
  ComplexValue(Real real) : re(std::move(real)), im(0) {}  // NOLINT(google-explicit-constructor)
  ComplexValue(Real real, Real imag) : re(std::move(real)), im(std::move(imag)) {}

  ComplexValue& operator+=(const ComplexValue& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexValue& operator-=(const ComplexValue& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexValue& operator*=(const ComplexValue& o);
  ComplexValue& operator/=(const ComplexValue& o);
};

inline ComplexValue operator+(ComplexValue a, const ComplexValue& b) { return a += b; }
inline ComplexValue operator-(ComplexValue a, const ComplexValue& b) { return a -= b; }
inline ComplexValue operator*(ComplexValue a, const ComplexValue& b) { return a *= b; }
inline ComplexValue operator/(ComplexValue a, const ComplexValue& b) { return a /= b; }
inline ComplexValue operator-(const ComplexValue& a) { return {-a.re, -a.im}; }

/// Component-wise bitwise equality (signed zeros compare equal).
inline bool operator==(const ComplexValue& a, const ComplexValue& b) { return a.re == b.re && a.im == b.im; }

ComplexValue conj(const ComplexValue& z);
Real abs(const ComplexValue& z);
Real arg(const ComplexValue& z);
ComplexValue exp(const ComplexValue& z);
/// Principal branch.
ComplexValue log(const ComplexValue& z);
/// Principal branch: exp(w log z).
ComplexValue pow(const ComplexValue& z, const ComplexValue& w);
ComplexValue sqrt(const ComplexValue& z);
ComplexValue sin(const ComplexValue& z);

bool is_finite(const Real& x);
bool is_finite(const ComplexValue& z);

/// Throws AccuracyError naming `where` if a component is NaN or infinite.
const ComplexValue& require_finite(const ComplexValue& z, const char* where);

/// "re,im" pair; also accepts a single real literal.
ComplexValue parse_complex(const std::string& text);

}  // namespace ximl

#endif  // XIML_COMPLEX_HPP
