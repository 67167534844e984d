#include "ximl/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ximl/acceptance.hpp"
#include "ximl/coefficients.hpp"
#include "ximl/constants.hpp"
#include "ximl/errors.hpp"
#include "ximl/moments.hpp"
#include "ximl/numerics.hpp"
#include "ximl/xi_eval.hpp"
#include "ximl/zeros.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

namespace {

constexpr const char* kMomentCacheTag = "# xi-moment-lab moments";

struct RunConfig {
  int digits = PrecisionContext::kDefaultDigits;
  int terms = 20;
  std::string table = "builtin";
  std::string zeros_file;
  long max_zeros = -1;
  std::string out;
  int print_digits = 12;
  bool verbose = false;

  std::string method = "a";
  int r = 1;
  int n_max = 20;
  long direct = 0;
  int degree = 10;
  std::string s = "0.5";
  GridSpec grid = GridSpec::standard();
  std::string re_min = "0", re_max = "1", im_min = "-15", im_max = "15";
  std::string from;
  std::vector<int> only;
};

// Failing verifications are reported like accuracy failures.
class VerificationFailed : public Error {
 public:
  using Error::Error;
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), ctx_(cfg.digits), out_(out), err_(err) {}

  void run(const std::string& command) {
    std::ofstream file;
    if (!cfg_.out.empty()) {
      file.open(cfg_.out);
      if (!file) throw IoError("cannot write " + cfg_.out);
      sink_ = &file;
    } else {
      sink_ = &out_;
    }
    PrecisionGuard guard(ctx_);
    if (command == "moments") moments();
    else if (command == "table") table();
    else if (command == "gamma") gamma();
    else if (command == "lugo") lugo_cmd();
    else if (command == "bernoulli") bernoulli();
    else if (command == "derivatives") derivatives();
    else if (command == "inequalities") inequalities();
    else if (command == "zeros-verify") zeros_verify();
    else if (command == "xi-eval") xi_eval();
    else if (command == "grid") grid();
    else if (command == "report") report();
    else throw DomainError("unknown command " + command);
    sink_->flush();
    if (file.is_open()) {
      file.close();
      if (!file) throw IoError("write failed for " + cfg_.out);
    }
  }

 private:
  std::ostream& out() { return *sink_; }

  std::string fmt(const Real& x) const { return to_fixed_significant(x, cfg_.print_digits); }
  std::string sci(const Real& x) const { return to_scientific(x, cfg_.print_digits); }
  std::string sci3(const Real& x) const { return to_scientific(x, 3); }

  void line(const std::string& key, const std::string& value) {
    out() << key;
    for (std::size_t i = key.size(); i < 22; ++i) out() << ' ';
    out() << value << '\n';
  }

  CoefficientTable load_source() {
    if (cfg_.table == "builtin") return builtin_table();
    if (cfg_.table == "quadrature") {
      if (cfg_.terms < 1) throw DomainError("--terms must be >= 1");
      CoefficientTable t = moment_table(cfg_.terms, QuadratureConfig::defaults(ctx_), ctx_);
      return t;
    }
    std::ifstream in(cfg_.table);
    if (!in) throw IoError("cannot open table " + cfg_.table);
    std::string first;
    std::getline(in, first);
    in.clear();
    in.seekg(0);
    CoefficientTable t;
    if (first.rfind(kMomentCacheTag, 0) == 0) {
      t = moment_table(read_moment_cache(in), ctx_);
      t.provenance = Provenance::file;
      t.source = cfg_.table;
    } else {
      t = read_table(in, cfg_.table);
    }
    for (Family f : {Family::bhat, Family::c, Family::a}) {
      if (t.complete(f) && !(t.complete(Family::bhat) && t.complete(Family::c) && t.complete(Family::a))) {
        t = convert(t, f, ctx_);
        break;
      }
    }
    return t;
  }

  const CoefficientTable& source() {
    if (!table_) table_ = load_source();
    return *table_;
  }

  int terms() {
    const int n = cfg_.terms;
    if (n > source().max_index()) {
      throw DomainError("--terms " + std::to_string(n) + " exceeds table range 0.." +
                        std::to_string(source().max_index()));
    }
    return n;
  }

  ZeroTable zeros() {
    const std::string path = cfg_.zeros_file.empty() ? bundled_zeros_path() : cfg_.zeros_file;
    ZeroTable zt = load_zeros(path, cfg_.max_zeros, ctx_);
    for (const auto& w : zt.warnings) err_ << "warning: " << w << '\n';
    return zt;
  }

  void moments() {
    const std::vector<MomentRecord> records = turan_moments(cfg_.n_max, QuadratureConfig::defaults(ctx_), ctx_);
    write_moment_cache(out(), records, cfg_.digits);
  }

  void table() {
    CoefficientTable t = source();
    if (!cfg_.from.empty()) t = convert(project(t, parse_family(cfg_.from)), parse_family(cfg_.from), ctx_);
    write_table(out(), t);
  }

  void gamma() {
    const Method m = parse_method(cfg_.method);
    const GammaDecomposition g = gamma_series(m, source(), terms(), ctx_);
    const Real reference = gamma_reference_split(ctx_, gamma_reference_split_terms(ctx_)).value;
    line("gamma", fmt(g.value()));
    line("method", to_string(m));
    line("terms", std::to_string(cfg_.terms));
    line("inner_sum", sci(g.inner_sum));
    line("series_error_bound", sci3(g.series_part.error_bound));
    line("reference", fmt(reference));
    line("delta", sci3(g.value() - reference));
  }

  void lugo_cmd() {
    const Method m = parse_method(cfg_.method);
    const SeriesResult<Real> l = lugo(m, source(), terms(), ctx_);
    line("lugo", fmt(l.value));
    line("method", to_string(m));
    line("terms", std::to_string(cfg_.terms));
    line("error_bound", sci3(l.error_bound));
    if (cfg_.direct > 0) {
      const Real d = lugo_direct(cfg_.direct, ctx_);
      line("direct_n", std::to_string(cfg_.direct));
      line("direct", fmt(d));
      line("direct_delta", sci3(d - l.value));
    }
  }

  void bernoulli() {
    const Method m = parse_method(cfg_.method);
    const BernoulliValue b = bernoulli_series(cfg_.r, m, source(), terms(), ctx_);
    const Real exact = to_real(b.exact_value, ctx_);
    line("index", std::to_string(b.index));
    line("series", fmt(b.series_value.value));
    line("exact", b.exact_value.str());
    line("exact_decimal", fmt(exact));
    line("delta", sci3(b.series_value.value - exact));
    line("method", to_string(m));
    line("terms", std::to_string(cfg_.terms));
  }

  void derivatives() {
    const int n_max = terms();
    out() << "# n\tby_bhat\tby_c\tby_a\n";
    for (int n = 0; n <= n_max; ++n) {
      out() << n;
      for (Family f : {Family::bhat, Family::c, Family::a}) out() << '\t' << sci(even_derivative(n, source(), f, ctx_));
      out() << '\n';
    }
  }

  void inequalities() {
    bool ok = true;
    const int n_max = terms();
    out() << "# turan n\tmargin\tholds\n";
    for (int n = 1; n < n_max; ++n) {
      const TuranResult t = turan_inequality(n, source(), ctx_);
      out() << n << '\t' << sci(t.margin) << '\t' << (t.holds ? "yes" : "no") << '\n';
      ok &= t.holds;
    }
    out() << "# jensen d\treal_roots\thyperbolic\n";
    for (int d = 1; d <= cfg_.degree; ++d) {
      const HyperbolicityResult h = hyperbolicity_check(jensen_polynomial(d, source(), ctx_), ctx_);
      out() << d << '\t' << h.real_root_count << '\t' << (h.hyperbolic ? "yes" : "no") << '\n';
      ok &= h.hyperbolic;
    }
    if (!ok) throw VerificationFailed("inequalities: at least one check failed");
  }

  void zeros_verify() {
    const ZeroTable zt = zeros();
    const int k = std::min(3, zt.count());
    const SymmetricSums s = symmetric_sums(zt, k, ctx_);
    line("zeros", std::to_string(s.M));
    line("t_M", fmt(zt.values.back()));
    line("tail_bound", sci(s.tail_bound));
    for (int i = 1; i <= k; ++i) line("p" + std::to_string(i), sci(s.p[static_cast<std::size_t>(i)]));
    for (int i = 1; i <= k; ++i) line("e" + std::to_string(i), sci(s.e[static_cast<std::size_t>(i)]));
    const Real c0 = jensen_from_zeros(zt, 0, source(), ctx_);
    line("c0", fmt(c0));
    for (int n = 1; n <= k; ++n) {
      const Real cn = jensen_from_zeros(zt, n, source(), ctx_);
      const auto& row = source().rows[static_cast<std::size_t>(n)];
      line("c" + std::to_string(n), fmt(cn));
      if (!row.c.missing()) line("c" + std::to_string(n) + "_table", row.c.text);
    }
    const Real c1 = jensen_from_zeros(zt, 1, source(), ctx_);
    const Real c1_table = parse_real(source().rows[1].c.text);
    const Real c1_bound = 2 * mp::abs(c0) * s.tail_bound;
    const bool c1_ok = mp::abs(c1 - c1_table) <= c1_bound;
    line("c1_gap", sci3(mp::abs(c1 - c1_table)) + " <= " + sci3(c1_bound) + (c1_ok ? " ok" : " FAIL"));
    const SeriesResult<Real> h = hadamard_c0(zt, ctx_);
    const Real c0_table = parse_real(source().rows[0].c.text);
    const bool h_ok = mp::abs(h.value - c0_table) <= h.error_bound + Real("1e-12");
    line("hadamard_c0", fmt(h.value));
    line("hadamard_gap", sci3(h.value - c0_table) + " <= " + sci3(h.error_bound) + (h_ok ? " ok" : " FAIL"));
    const RhoSum rho = rho_sum(zt, ctx_);
    line("rho_sum", fmt(rho.value));
    line("rho_identity", fmt(rho.identity_rhs));
    if (!c1_ok || !h_ok) throw VerificationFailed("zeros-verify: truncation bound violated");
  }

  void xi_eval() {
    const XiSeries xs = make_xi_series(source(), terms(), ctx_, parse_method(cfg_.method));
    const ComplexValue s = parse_complex(cfg_.s);
    bool beyond = false;
    const ComplexValue x = xi(s, xs, ctx_, &beyond);
    line("s", fmt(s.re) + "," + fmt(s.im));
    line("xi", sci(x.re) + "," + sci(x.im));
    line("abs_xi", sci(abs(x)));
    if (beyond) err_ << "warning: |s - 1/2| beyond validity radius " << to_scientific(xs.validity_radius, 6) << '\n';
    try {
      const ComplexValue z = zeta(s, xs, ctx_);
      line("zeta", sci(z.re) + "," + sci(z.im));
    } catch (const PoleError& e) {
      line("zeta", std::string("undefined (") + e.what() + ")");
    }
  }

  void grid() {
    GridSpec spec = cfg_.grid;
    spec.re_min = parse_real(cfg_.re_min);
    spec.re_max = parse_real(cfg_.re_max);
    spec.im_min = parse_real(cfg_.im_min);
    spec.im_max = parse_real(cfg_.im_max);
    const XiSeries xs = make_xi_series(source(), terms(), ctx_, parse_method(cfg_.method));
    write_grid(out(), spec, xs, ctx_);
  }

  void report() {
    AcceptanceConfig config;
    config.digits = cfg_.digits;
    config.zeros_file = cfg_.zeros_file;
    config.max_zeros = cfg_.max_zeros;
    AcceptanceSuite suite(config);
    std::vector<int> ids = cfg_.only;
    if (ids.empty()) {
      for (int id = 1; id <= AcceptanceSuite::kCriteria; ++id) ids.push_back(id);
    }
    int failed = 0;
    for (int id : ids) {
      const CriterionResult r = suite.run(id);
      print_result(out(), r, cfg_.verbose);
      if (!r.passed) ++failed;
    }
    out() << (failed == 0 ? "all " + std::to_string(ids.size()) + " criteria passed"
                          : std::to_string(failed) + " of " + std::to_string(ids.size()) + " criteria failed")
          << '\n';
    if (failed > 0) throw VerificationFailed("report: " + std::to_string(failed) + " criteria failed");
  }

  const RunConfig& cfg_;
  PrecisionContext ctx_;
  std::ostream& out_;
  std::ostream& err_;
  std::ostream* sink_ = nullptr;
  std::optional<CoefficientTable> table_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Taylor coefficients of the Riemann xi function: moments, constants, zero sums, evaluation"};
  app.name(args.empty() ? "ximl" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--digits", cfg.digits, "decimal digits of precision")->check(CLI::Range(20, 100000));
  app.add_option("--terms", cfg.terms, "series truncation N")->check(CLI::Range(1, 100000));
  app.add_option("--table", cfg.table, "coefficient source: builtin, quadrature or a table/moment-cache path");
  app.add_option("--zeros-file", cfg.zeros_file, "zero ordinates, one per line");
  app.add_option("--max-zeros", cfg.max_zeros, "use at most this many ordinates")->check(CLI::NonNegativeNumber);
  app.add_option("--out", cfg.out, "write the command output to this file");
  app.add_option("--print-digits", cfg.print_digits, "significant digits in printed values")
      ->check(CLI::Range(1, 100000));

  const auto method = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "series family: a, b or c")->check(CLI::IsMember({"a", "b", "bhat", "c"}));
  };

  auto* moments = app.add_subcommand("moments", "compute Turan moments by quadrature and print a moment cache");
  moments->add_option("--n-max", cfg.n_max, "highest moment index")->check(CLI::Range(0, 1000));
  auto* table = app.add_subcommand("table", "print the coefficient table");
  table->add_option("--from", cfg.from, "rebuild all columns from this family")
      ->check(CLI::IsMember({"a", "b", "bhat", "c"}));
  method(app.add_subcommand("gamma", "Euler-Mascheroni constant from the coefficient series"));
  auto* lugo = app.add_subcommand("lugo", "Lugo constant from the coefficient series");
  method(lugo);
  lugo->add_option("--direct", cfg.direct, "also evaluate the double harmonic sum up to this n")
      ->check(CLI::Range(1L, 100000000L));
  auto* bernoulli = app.add_subcommand("bernoulli", "B_2r from the coefficient series");
  method(bernoulli);
  bernoulli->add_option("--r", cfg.r, "index r of B_2r")->check(CLI::Range(0, 1000));
  app.add_subcommand("derivatives", "even derivatives of xi at 1/2 by the three families");
  auto* inequalities = app.add_subcommand("inequalities", "Turan margins and Jensen hyperbolicity");
  inequalities->add_option("--degree", cfg.degree, "highest Jensen degree")->check(CLI::Range(1, 1000));
  app.add_subcommand("zeros-verify", "zero-sum identities against the coefficient table");
  auto* xi_eval = app.add_subcommand("xi-eval", "xi(s) and zeta(s) from the truncated series");
  method(xi_eval);
  xi_eval->add_option("--s", cfg.s, "point as 're,im' or 're'");
  auto* grid = app.add_subcommand("grid", "CSV grid of xi over a rectangle");
  method(grid);
  grid->add_option("--steps", cfg.grid.steps, "nodes per axis")->check(CLI::Range(2, 100000));
  grid->add_option("--re-min", cfg.re_min, "lower real bound");
  grid->add_option("--re-max", cfg.re_max, "upper real bound");
  grid->add_option("--im-min", cfg.im_min, "lower imaginary bound");
  grid->add_option("--im-max", cfg.im_max, "upper imaginary bound");
  auto* report = app.add_subcommand("report", "run the acceptance suite and print a pass/fail matrix");
  report->add_option("--only", cfg.only, "criteria to run")->check(CLI::Range(1, AcceptanceSuite::kCriteria));
  report->add_flag("-v,--verbose", cfg.verbose, "print every check");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Runner(cfg, out, err).run(command);
    return kExitOk;
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const VerificationFailed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ximl
