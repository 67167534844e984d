#include "ximl/complex.hpp"

#include "ximl/errors.hpp"

namespace ximl {

ComplexValue& ComplexValue::operator*=(const ComplexValue& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

ComplexValue& ComplexValue::operator/=(const ComplexValue& o) {
  // Smith's algorithm keeps the intermediate quotient bounded.
  if (boost::multiprecision::abs(o.re) >= boost::multiprecision::abs(o.im)) {
    if (o.re == 0) throw DomainError("complex division by zero");
    Real ratio = o.im / o.re;
    Real denom = o.re + o.im * ratio;
    Real r = (re + im * ratio) / denom;
    Real i = (im - re * ratio) / denom;
    re = std::move(r);
    im = std::move(i);
  } else {
    Real ratio = o.re / o.im;
    Real denom = o.re * ratio + o.im;
    Real r = (re * ratio + im) / denom;
    Real i = (im * ratio - re) / denom;
    re = std::move(r);
    im = std::move(i);
  }
  return *this;
}

ComplexValue conj(const ComplexValue& z) { return {z.re, -z.im}; }

Real abs(const ComplexValue& z) { return boost::multiprecision::hypot(z.re, z.im); }

Real arg(const ComplexValue& z) { return boost::multiprecision::atan2(z.im, z.re); }

ComplexValue exp(const ComplexValue& z) {
  Real scale = boost::multiprecision::exp(z.re);
  if (z.im == 0) return {scale, Real(0)};
  return {scale * boost::multiprecision::cos(z.im), scale * boost::multiprecision::sin(z.im)};
}

ComplexValue log(const ComplexValue& z) {
  if (z.re == 0 && z.im == 0) throw PoleError("log(0)");
  return {boost::multiprecision::log(abs(z)), arg(z)};
}

ComplexValue pow(const ComplexValue& z, const ComplexValue& w) { return exp(w * log(z)); }

ComplexValue sqrt(const ComplexValue& z) {
  if (z.re == 0 && z.im == 0) return {};
  Real modulus = abs(z);
  Real u = boost::multiprecision::sqrt((modulus + boost::multiprecision::abs(z.re)) / 2);
  if (z.re >= 0) return {u, z.im / (2 * u)};
  Real v = z.im >= 0 ? u : Real(-u);
  return {boost::multiprecision::abs(z.im) / (2 * u), v};
}

ComplexValue sin(const ComplexValue& z) {
  return {boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
          boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im)};
}

bool is_finite(const Real& x) { return boost::multiprecision::isfinite(x); }

bool is_finite(const ComplexValue& z) { return is_finite(z.re) && is_finite(z.im); }

const ComplexValue& require_finite(const ComplexValue& z, const char* where) {
  if (!is_finite(z)) throw AccuracyError(std::string(where) + ": result is not finite");
  return z;
}

ComplexValue parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text), Real(0)};
  return {parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1))};
}

}  // namespace ximl
