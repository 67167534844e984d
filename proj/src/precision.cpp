#include "ximl/precision.hpp"

#include <mpfr.h>

#include <regex>

#include "ximl/errors.hpp"

namespace ximl {

namespace {

// Φ(t) and exp(-πx) tails reach far below MPFR's default exponent floor.
void widen_exponent_range() {
  thread_local bool done = false;
  if (!done) {
    mpfr_set_emin(mpfr_get_emin_min());
    mpfr_set_emax(mpfr_get_emax_max());
    done = true;
  }
}

}  // namespace

PrecisionContext::PrecisionContext(int digits, int guard_digits)
    : digits_(digits), guard_digits_(guard_digits) {
  if (digits < kMinDigits) {
    throw DomainError("precision: digits must be >= " + std::to_string(kMinDigits) + ", got " +
                      std::to_string(digits));
  }
  if (guard_digits < 0) throw DomainError("precision: guard_digits must be non-negative");
}

Real PrecisionContext::eps() const {
  PrecisionGuard guard(*this);
  return pow(Real(10), -digits_);
}

PrecisionGuard::PrecisionGuard(const PrecisionContext& ctx) : PrecisionGuard(ctx.working_digits()) {}

PrecisionGuard::PrecisionGuard(int decimal_digits) : previous_(Real::default_precision()) {
  widen_exponent_range();
  Real::default_precision(static_cast<unsigned>(decimal_digits));
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(previous_); }

Real rounded(const Real& x, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  Real value;
  mpfr_set(value.backend().data(), x.backend().data(), MPFR_RNDN);
  return value;
}

Real pi(const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  Real value;
  mpfr_const_pi(value.backend().data(), MPFR_RNDN);
  return value;
}

Real ln2(const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  Real value;
  mpfr_const_log2(value.backend().data(), MPFR_RNDN);
  return value;
}

bool is_decimal_literal(const std::string& text) {
  static const std::regex pattern(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  return std::regex_match(text, pattern);
}

Real parse_real(const std::string& text) {
  if (!is_decimal_literal(text)) throw FormatError("not a decimal number: '" + text + "'");
  return Real(text);
}

std::string to_scientific(const Real& x, int significant) {
  if (significant < 1) significant = 1;
  return x.str(significant - 1, std::ios_base::scientific);
}

std::string to_fixed_significant(const Real& x, int significant) {
  const std::string sci = to_scientific(x, significant);
  const auto epos = sci.find('e');
  std::string mantissa = sci.substr(0, epos);
  const long exponent = std::stol(sci.substr(epos + 1));
  const bool negative = !mantissa.empty() && mantissa[0] == '-';
  if (negative) mantissa.erase(0, 1);
  std::string digits;
  for (char ch : mantissa) {
    if (ch != '.') digits.push_back(ch);
  }
  std::string out;
  if (exponent < 0) {
    out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
  } else if (static_cast<std::size_t>(exponent) + 1 >= digits.size()) {
    out = digits + std::string(static_cast<std::size_t>(exponent) + 1 - digits.size(), '0');
  } else {
    out = digits.substr(0, static_cast<std::size_t>(exponent) + 1) + "." +
          digits.substr(static_cast<std::size_t>(exponent) + 1);
  }
  return negative ? "-" + out : out;
}

int significant_digits(const std::string& text) {
  std::string mantissa = text.substr(0, text.find_first_of("eE"));
  std::string digits;
  for (char ch : mantissa) {
    if (ch >= '0' && ch <= '9') digits.push_back(ch);
  }
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 1;
  return static_cast<int>(digits.size() - first);
}

}  // namespace ximl
