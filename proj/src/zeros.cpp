#include "ximl/zeros.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>

#include "ximl/errors.hpp"
#include "ximl/numerics.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Rational decimal_to_rational(const std::string& text) {
  const auto epos = text.find_first_of("eE");
  const std::string mantissa = text.substr(0, epos);
  long exponent = epos == std::string::npos ? 0 : std::stol(text.substr(epos + 1));
  std::string digits;
  bool negative = false;
  bool after_point = false;
  for (char ch : mantissa) {
    if (ch == '-') negative = true;
    if (ch == '.') after_point = true;
    if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (after_point) --exponent;
    }
  }
  mp::mpz_int num(digits.empty() ? "0" : digits);
  if (negative) num = -num;
  const mp::mpz_int scale = mp::pow(mp::mpz_int(10), static_cast<unsigned>(std::labs(exponent)));
  return exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
}

}  // namespace

ZeroTable read_zeros(std::istream& in, const std::string& source, long max_count, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  ZeroTable zt;
  zt.source = source;
  std::vector<std::pair<Real, std::string>> rows;
  std::string line;
  long line_no = 0;
  bool any_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (!is_decimal_literal(text)) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": not a decimal ordinate: '" + text + "'", line_no);
    }
    any_data = true;
    if (max_count >= 0 && static_cast<long>(rows.size()) >= max_count) break;
    Real value = parse_real(text);
    if (value <= 0) {
      throw DomainError(source + ":" + std::to_string(line_no) + ": ordinate must be positive");
    }
    rows.emplace_back(std::move(value), text);
  }
  if (!any_data) throw FormatError(source + ": no zero ordinates found");
  if (!std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; })) {
    zt.warnings.push_back(source + ": ordinates not in ascending order; sorted");
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  for (auto& [value, text] : rows) {
    zt.values.push_back(std::move(value));
    zt.texts.push_back(std::move(text));
  }
  if (!zt.values.empty() && mp::abs(zt.values.front() - Real("14.1347")) > Real("0.001")) {
    zt.warnings.push_back(source + ": first ordinate is not 14.1347...; table may not be genuine");
  }
  return zt;
}

ZeroTable load_zeros(const std::string& path, long max_count, const PrecisionContext& ctx) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zeros file " + path);
  return read_zeros(in, path, max_count, ctx);
}

ZeroTable first_zeros(const ZeroTable& zt, int m) {
  if (m < 0 || m > zt.count()) throw DomainError("first_zeros: m outside 0..M");
  ZeroTable out;
  out.source = zt.source;
  out.values.assign(zt.values.begin(), zt.values.begin() + m);
  out.texts.assign(zt.texts.begin(), zt.texts.begin() + m);
  return out;
}

Real zero_tail_bound(const Real& t_m, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  const Real two_pi = 2 * pi(ctx);
  return (mp::log(t_m / two_pi) + 1) / (two_pi * t_m);
}

SymmetricSums symmetric_sums(const ZeroTable& zt, int k_max, const PrecisionContext& ctx) {
  if (k_max < 1) throw DomainError("symmetric_sums: k_max must be >= 1");
  if (zt.count() < k_max) {
    throw DomainError("symmetric_sums: need at least " + std::to_string(k_max) + " zeros, have " +
                      std::to_string(zt.count()));
  }
  PrecisionGuard guard(ctx);
  SymmetricSums s;
  s.M = zt.count();
  s.p.assign(static_cast<std::size_t>(k_max) + 1, Real(0));
  s.p[0] = s.M;
  for (const auto& t : zt.values) {
    const Real x = 1 / (t * t);
    Real power = x;
    for (int k = 1; k <= k_max; ++k) {
      s.p[static_cast<std::size_t>(k)] += power;
      power *= x;
    }
  }
  s.e = newton_elementary(s.p);
  s.tail_bound = zero_tail_bound(zt.values.back(), ctx);
  return s;
}

std::vector<Rational> inverse_squares_exact(const ZeroTable& zt) {
  std::vector<Rational> out;
  out.reserve(zt.texts.size());
  for (const auto& text : zt.texts) {
    const Rational t = decimal_to_rational(text);
    out.push_back(1 / (t * t));
  }
  return out;
}

Real jensen_from_zeros(const ZeroTable& zt, int n, const CoefficientTable& table, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("jensen_from_zeros: n must be non-negative");
  if (n > 3) throw UnsupportedOrderError("jensen_from_zeros: orders above 3 are not implemented");
  PrecisionGuard guard(ctx);
  const Real c0 = -gamma_quarter_zeta_half(table, ctx) / (4 * mp::pow(pi(ctx), Real(1) / 4));
  if (n == 0) return c0;
  const SymmetricSums s = symmetric_sums(zt, n, ctx);
  Real factorial(1);
  for (int k = 2; k <= n; ++k) factorial *= k;
  const Real value = c0 * factorial * s.e[static_cast<std::size_t>(n)];
  return n % 2 == 0 ? value : Real(-value);
}

RhoSum rho_sum(const ZeroTable& zt, const PrecisionContext& ctx) {
  if (zt.count() < 1) throw DomainError("rho_sum: no zeros");
  PrecisionGuard guard(ctx);
  RhoSum r;
  r.value = 0;
  const Real quarter = Real(1) / 4;
  for (const auto& t : zt.values) r.value += 1 / (quarter + t * t);
  const Real gamma = gamma_reference_split(ctx, gamma_reference_split_terms(ctx)).value;
  r.identity_rhs = 1 + gamma / 2 - mp::log(4 * pi(ctx)) / 2;
  return r;
}

SeriesResult<Real> hadamard_c0(const ZeroTable& zt, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  Real product(1);
  const Real quarter = Real(1) / 4;
  for (const auto& t : zt.values) {
    const Real t2 = t * t;
    product *= t2 / (quarter + t2);
  }
  if (zt.count() == 0) return {product, 0, Real(1), BoundKind::heuristic};
  const Real tail = zero_tail_bound(zt.values.back(), ctx);
  return {product, zt.count(), product * (1 - mp::exp(-tail / 4)), BoundKind::heuristic};
}

}  // namespace ximl
