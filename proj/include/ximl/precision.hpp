#ifndef XIML_PRECISION_HPP
#define XIML_PRECISION_HPP

#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace ximl {

/// Arbitrary-precision real. Precision is taken from the active PrecisionGuard
/// when a value is created; mixed-precision arithmetic keeps the larger one.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Working precision of a computation, in significant decimal digits.
///
/// Every public entry point takes a context and evaluates at
/// `digits + guard_digits`; results are meaningful to `digits`.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 20;
  static constexpr int kDefaultDigits = 60;
  static constexpr int kDefaultGuardDigits = 10;

  explicit PrecisionContext(int digits = kDefaultDigits, int guard_digits = kDefaultGuardDigits);

  int digits() const { return digits_; }
  int guard_digits() const { return guard_digits_; }
  int working_digits() const { return digits_ + guard_digits_; }

  /// 10^(-digits).
  Real eps() const;

  /// Same guard digits, `extra` more significant digits.
  PrecisionContext widened(int extra) const { return PrecisionContext(digits_ + extra, guard_digits_); }

 private:
  int digits_;
  int guard_digits_;
};

/// Sets the precision used for newly created Real values on this thread and
/// restores the previous one on destruction.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(const PrecisionContext& ctx);
  explicit PrecisionGuard(int decimal_digits);
  ~PrecisionGuard();

  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned previous_;
};

/// Copy of `x` rounded to the context's working precision.
Real rounded(const Real& x, const PrecisionContext& ctx);

Real pi(const PrecisionContext& ctx);
Real ln2(const PrecisionContext& ctx);

/// Parses a decimal literal ("1.5e-3", "-2", "0.25"); throws FormatError otherwise.
Real parse_real(const std::string& text);

/// True when `text` is a plain decimal literal accepted by parse_real.
bool is_decimal_literal(const std::string& text);

/// Scientific notation with exactly `significant` digits, locale independent.
std::string to_scientific(const Real& x, int significant);

/// Fixed notation rounded to `significant` significant digits.
std::string to_fixed_significant(const Real& x, int significant);

/// Number of significant digits in the mantissa of a decimal literal.
int significant_digits(const std::string& text);

}  // namespace ximl

#endif  // XIML_PRECISION_HPP
