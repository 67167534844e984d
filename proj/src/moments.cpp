#include "ximl/moments.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "ximl/errors.hpp"
#include "ximl/quadrature.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

QuadratureConfig QuadratureConfig::defaults(const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  QuadratureConfig cfg;
  cfg.t_max = 3;
  cfg.target_abs_error = pow(Real(10), -ctx.digits() + 5);
  cfg.series_cutoff_rel = pow(Real(10), -ctx.digits() - 10);
  cfg.x_max = mp::exp(Real(12));
  return cfg;
}

namespace {

struct PhiSum {
  Real value;
  int terms;
};

PhiSum phi_sum(const Real& t, const Real& p, const Real& cutoff_rel) {
  const Real e4 = mp::exp(4 * t);
  const Real e5 = mp::exp(5 * t);
  const Real e9 = mp::exp(9 * t);
  const Real q = mp::exp(-p * e4);
  const Real q2 = q * q;
  Real qk = q;        // q^{k^2}
  Real step = q * q2;  // q^{2k+1}
  Real sum(0);
  int k = 1;
  for (;; ++k) {
    const Real k2(k * k);
    const Real term = (2 * k2 * k2 * p * p * e9 - 3 * k2 * p * e5) * qk;
    sum += term;
    if (mp::abs(term) < cutoff_rel * mp::abs(sum)) break;
    qk *= step;
    step *= q2;
  }
  return {sum, k};
}

}  // namespace

Real phi(const Real& t, const PrecisionContext& ctx, const Real& cutoff_rel) {
  if (t < 0) throw DomainError("phi: t must be non-negative");
  PrecisionGuard guard(ctx);
  return phi_sum(t, pi(ctx), cutoff_rel).value;
}

Real phi(const Real& t, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  return phi(t, ctx, pow(Real(10), -ctx.digits() - 10));
}

int phi_terms(const Real& t, const PrecisionContext& ctx, const Real& cutoff_rel) {
  if (t < 0) throw DomainError("phi: t must be non-negative");
  PrecisionGuard guard(ctx);
  return phi_sum(t, pi(ctx), cutoff_rel).terms;
}

Real moment_envelope(const Real& t, int n, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  return 2 * p * p * mp::exp(9 * t) * mp::exp(-p * mp::exp(4 * t)) * mp::pow(t, 2 * n);
}

Real moment_tail_bound(const Real& t, int n, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  // The log-derivative of the envelope is decreasing, so the tail is at most
  // envelope / |log-derivative| at t. The factor 2 covers k >= 2 in Phi.
  const Real decay = 4 * pi(ctx) * mp::exp(4 * t) - 9 - Real(2 * n) / t;
  if (decay <= 0) throw DomainError("moment_tail_bound: t too small for the envelope estimate");
  return 2 * moment_envelope(t, n, ctx) / decay;
}

std::vector<MomentRecord> turan_moments(int n_max, const QuadratureConfig& cfg, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("turan_moments: n_max must be non-negative");
  if (!(cfg.t_max > 0)) throw DomainError("turan_moments: t_max must be positive");
  PrecisionGuard guard(ctx);
  for (int n = 0; n <= n_max; ++n) {
    if (!(moment_envelope(cfg.t_max, n, ctx) < cfg.target_abs_error / 10)) {
      throw DomainError("turan_moments: t_max too small for n=" + std::to_string(n));
    }
  }
  const Real p = pi(ctx);
  const auto components = static_cast<std::size_t>(n_max + 1);
  const VectorIntegrand integrand = [&](const Real& t, std::vector<Real>& out) {
    const Real value = phi_sum(t, p, cfg.series_cutoff_rel).value;
    if (!(value > 0)) {
      throw AccuracyError("phi is not positive at t=" + to_scientific(t, 20));
    }
    const Real t2 = t * t;
    Real weight = value;
    for (std::size_t n = 0; n < components; ++n) {
      out[n] = weight;
      weight *= t2;
    }
  };
  DoublingOptions options;
  options.order = cfg.order;
  options.initial_panels = cfg.initial_panels;
  options.max_doublings = cfg.max_doublings;
  options.target_abs_error = cfg.target_abs_error;
  const PanelIntegral result = integrate_doubling(integrand, components, Real(0), cfg.t_max, options, ctx);

  std::vector<MomentRecord> records;
  for (int n = 0; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    MomentRecord r;
    r.n = n;
    r.value = result.values[i];
    r.error_bound = result.deltas[i] + moment_tail_bound(cfg.t_max, n, ctx);
    r.source = MomentSource::quadrature;
    records.push_back(std::move(r));
  }
  if (!result.converged) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < components; ++i) {
      if (result.deltas[i] > result.deltas[worst]) worst = i;
    }
    throw AccuracyError("turan_moments: no convergence after " + std::to_string(cfg.max_doublings) +
                            " doublings (n=" + std::to_string(worst) + ")",
                        to_scientific(records[worst].value, ctx.digits()),
                        to_scientific(records[worst].error_bound, 3));
  }
  return records;
}

MomentRecord turan_moment(int n, const QuadratureConfig& cfg, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("turan_moment: n must be non-negative");
  auto records = turan_moments(n, cfg, ctx);
  return std::move(records.back());
}

MomentRecord fixture_moment(int n, const PrecisionContext& ctx) {
  const auto& table = builtin_table();
  if (n < 0 || n > table.max_index()) throw DomainError("fixture_moment: n outside 0..20");
  PrecisionGuard guard(ctx);
  const auto& e = table.rows[static_cast<std::size_t>(n)].bhat;
  MomentRecord r;
  r.n = n;
  r.value = parse_real(e.text);
  r.error_bound = r.value * pow(Real(10), -e.digits) * 5;
  r.source = MomentSource::fixture;
  return r;
}

CoefficientTable moment_table(const std::vector<MomentRecord>& records, const PrecisionContext& ctx) {
  if (records.empty()) throw DomainError("moment_table: no moments");
  PrecisionGuard guard(ctx);
  CoefficientTable table;
  table.provenance = Provenance::quadrature;
  table.source = "quadrature";
  for (const auto& r : records) {
    CoefficientRow row;
    row.n = r.n;
    row.bhat = {to_scientific(r.value, ctx.digits()), ctx.digits()};
    row.bhat_error = to_scientific(r.error_bound, 3);
    table.rows.push_back(std::move(row));
  }
  return convert(table, Family::bhat, ctx);
}

CoefficientTable moment_table(int n_max, const QuadratureConfig& cfg, const PrecisionContext& ctx) {
  return moment_table(turan_moments(n_max, cfg, ctx), ctx);
}

namespace {

// Bound on |integrand| of the x-integral: 8 pi^2 x^{5/4} e^{-pi x} L^{2n}/(2n)!.
Real x_envelope(const Real& x, int n, const Real& p) {
  const Real half_log = mp::log(x) / 2;
  Real f(1);
  for (int k = 2; k <= 2 * n; ++k) f *= k;
  return 8 * p * p * mp::pow(x, Real(5) / 4) * mp::exp(-p * x) * mp::pow(half_log, 2 * n) / f;
}

Real x_tail(const Real& x, int n, const Real& p) {
  const Real decay = p - Real(5) / (4 * x) - Real(2 * n) / (x * mp::log(x));
  return x_envelope(x, n, p) / decay;
}

}  // namespace

SeriesResult<Real> a2n_integral(int n, const QuadratureConfig& cfg, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("a2n_integral: n must be non-negative");
  if (!(cfg.x_max > 1)) throw DomainError("a2n_integral: x_max must exceed 1");
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  // Same relative accuracy as the moment it corresponds to.
  const Real target = cfg.target_abs_error * a_over_bhat(n, ctx);
  // Past the envelope peak, stop once the remaining tail is far below target.
  Real upper(2);
  while (upper < cfg.x_max) {
    const Real decay = p - Real(5) / (4 * upper) - Real(2 * n) / (upper * mp::log(upper));
    if (decay > p / 2 && x_tail(upper, n, p) < target / 1000) break;
    upper += 2;
  }
  if (upper > cfg.x_max) upper = cfg.x_max;

  const VectorIntegrand integrand = [&](const Real& x, std::vector<Real>& out) {
    const Real q = mp::exp(-p * x);
    const Real x_half = mp::sqrt(x);
    const Real x_three_halves = x * x_half;
    const Real q2 = q * q;
    Real qm = q;
    Real step = q * q2;
    Real sum(0);
    for (int m = 1;; ++m) {
      const Real m2(m * m);
      const Real term = (m2 * m2 * p * p * x_three_halves - Real(3) / 2 * m2 * p * x_half) * qm;
      sum += term;
      if (mp::abs(term) < cfg.series_cutoff_rel * mp::abs(sum)) break;
      qm *= step;
      step *= q2;
    }
    const Real half_log = mp::log(x) / 2;
    Real power(1);
    for (int k = 1; k <= 2 * n; ++k) power = power * half_log / k;
    out[0] = 4 * sum * power / mp::sqrt(x_half);
  };
  DoublingOptions options;
  options.order = cfg.order;
  options.initial_panels = cfg.initial_panels;
  options.max_doublings = cfg.max_doublings;
  options.target_abs_error = target;
  const PanelIntegral result = integrate_doubling(integrand, 1, Real(1), upper, options, ctx);
  const Real bound = result.deltas[0] + x_tail(upper, n, p);
  if (!result.converged) {
    throw AccuracyError("a2n_integral: no convergence after " + std::to_string(cfg.max_doublings) + " doublings",
                        to_scientific(result.values[0], ctx.digits()), to_scientific(bound, 3));
  }
  return {result.values[0], result.panels * cfg.order, bound, BoundKind::heuristic};
}

void write_moment_cache(std::ostream& out, const std::vector<MomentRecord>& records, int digits) {
  out << "# xi-moment-lab moments digits=" << digits << '\n';
  for (const auto& r : records) {
    out << r.n << '\t' << to_scientific(r.value, digits) << '\t' << to_scientific(r.error_bound, 3) << '\n';
  }
}

std::vector<MomentRecord> read_moment_cache(std::istream& in, int* digits) {
  static const std::regex header(R"(^# xi-moment-lab moments digits=(\d+)\s*$)");
  std::string line;
  if (!std::getline(in, line)) throw FormatError("moment cache: empty file", 1);
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw FormatError("moment cache: bad header", 1);
  const int cached_digits = std::stoi(m[1].str());
  if (digits != nullptr) *digits = cached_digits;
  // Values keep every digit written, whatever the caller's precision.
  PrecisionGuard guard(std::max(cached_digits, 20) + PrecisionContext::kDefaultGuardDigits);
  std::vector<MomentRecord> records;
  long line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string index, value, bound;
    if (!std::getline(ss, index, '\t') || !std::getline(ss, value, '\t') || !std::getline(ss, bound) ||
        !is_decimal_literal(value) || !is_decimal_literal(bound)) {
      throw FormatError("moment cache: malformed line " + std::to_string(line_no), line_no);
    }
    MomentRecord r;
    try {
      r.n = std::stoi(index);
    } catch (const std::exception&) {
      throw FormatError("moment cache: bad index on line " + std::to_string(line_no), line_no);
    }
    r.value = parse_real(value);
    r.error_bound = parse_real(bound);
    r.source = MomentSource::quadrature;
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace ximl
