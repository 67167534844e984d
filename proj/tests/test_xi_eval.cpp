#include <doctest.h>

#include <sstream>

#include "ximl/coefficients.hpp"
#include "ximl/errors.hpp"
#include "ximl/xi_eval.hpp"

using namespace ximl;
namespace mp = boost::multiprecision;

namespace {

// mpmath, xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s) (tools/gen_oracles.py).
const char* kXi03 = "0.497580414651126903577791075256";
const char* kXi23Re = "0.416271259899623814740602448056";
const char* kXi23Im = "0.0888233049656393907559498443557";
const char* kZeta23Re = "0.798021985146275720622294500725";
const char* kZeta23Im = "-0.113744308052938500215913365857";
const char* kZetaMinus15 = "-0.0254852018898330359495429869107";
const char* kZetaHalf = "-1.46035450880958681288949915252";

Real rel(const Real& a, const Real& b) { return mp::abs(a - b) / mp::abs(b); }

ComplexValue cv(const char* re, const char* im = "0") { return {Real(re), Real(im)}; }

}  // namespace

TEST_CASE("xi at special points") {
  PrecisionContext ctx(40);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  PrecisionGuard guard(ctx);
  CHECK(xs.a.size() == 21);
  CHECK(to_fixed_significant(xi(cv("0.5"), xs, ctx).re, 12) == "0.497120778188");
  CHECK(mp::abs(xi(cv("0"), xs, ctx).re - Real("0.5")) < Real("1e-10"));
  CHECK(mp::abs(xi(cv("1"), xs, ctx).re - Real("0.5")) < Real("1e-10"));
  CHECK(abs(xi(cv("0.5", "14.134725"), xs, ctx)) < Real("1e-6"));
  CHECK(mp::abs(xi(cv("0.3"), xs, ctx).re - Real(kXi03)) < Real("1e-11"));
  const ComplexValue x23 = xi(cv("2", "3"), xs, ctx);
  CHECK(mp::abs(x23.re - Real(kXi23Re)) < Real("1e-10"));
  CHECK(mp::abs(x23.im - Real(kXi23Im)) < Real("1e-10"));
}

TEST_CASE("xi symmetries are exact") {
  PrecisionContext ctx(40);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  PrecisionGuard guard(ctx);
  for (const auto& [re, im] : std::vector<std::pair<const char*, const char*>>{
           {"0.25", "3.5"}, {"-1.75", "0.125"}, {"0.5", "9"}, {"2", "-7.25"}, {"0.875", "14.5"}}) {
    const ComplexValue s = cv(re, im);
    const ComplexValue v = xi(s, xs, ctx);
    // 1 - s as the exact negated offset from 1/2.
    const ComplexValue d(s.re - Real(1) / 2, s.im);
    CHECK(xi_at_offset(d, xs, ctx) == xi_at_offset(-d, xs, ctx));
    CHECK(xi(conj(s), xs, ctx) == conj(v));
  }
  for (const char* x : {"0", "1", "14.134725", "25"}) {
    CHECK(xi(cv("0.5", x), xs, ctx).im == 0);
  }
}

TEST_CASE("validity radius") {
  PrecisionContext ctx(30);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  PrecisionGuard guard(ctx);
  CHECK(xs.validity_radius > 15);
  CHECK(xs.validity_radius < 20);
  bool beyond = true;
  xi(cv("0.5", "14"), xs, ctx, &beyond);
  CHECK_FALSE(beyond);
  xi(cv("0.5", "20"), xs, ctx, &beyond);
  CHECK(beyond);
  CHECK_THROWS_AS(make_xi_series(builtin_table(), 21, ctx), DomainError);
}

TEST_CASE("zeta from xi") {
  PrecisionContext ctx(40);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  PrecisionGuard guard(ctx);
  const Real p = pi(ctx);
  CHECK(rel(zeta(cv("2"), xs, ctx).re, p * p / 6) < Real("1e-8"));
  CHECK(mp::abs(zeta(cv("0.5"), xs, ctx).re - Real("-1.460354")) < Real("1e-5"));
  CHECK(mp::abs(zeta(cv("0.5"), xs, ctx).re - Real(kZetaHalf)) < Real("1e-11"));
  CHECK(rel(zeta(cv("-1.5"), xs, ctx).re, Real(kZetaMinus15)) < Real("1e-9"));
  const ComplexValue z = zeta(cv("2", "3"), xs, ctx);
  CHECK(mp::abs(z.re - Real(kZeta23Re)) < Real("1e-9"));
  CHECK(mp::abs(z.im - Real(kZeta23Im)) < Real("1e-9"));
  CHECK_THROWS_AS(zeta(cv("1"), xs, ctx), PoleError);
  CHECK_THROWS_AS(zeta(cv("1.0000001"), xs, ctx), PoleError);
  CHECK_THROWS_AS(zeta(cv("-2"), xs, ctx), DomainError);
}

TEST_CASE("zeta agrees across coefficient columns") {
  PrecisionContext ctx(40);
  const XiSeries a = make_xi_series(builtin_table(), 20, ctx, Method::a_series);
  const XiSeries b = make_xi_series(builtin_table(), 20, ctx, Method::b_series);
  const XiSeries c = make_xi_series(builtin_table(), 20, ctx, Method::c_series);
  PrecisionGuard guard(ctx);
  for (const auto& [re, im] : std::vector<std::pair<const char*, const char*>>{
           {"2", "0"}, {"0.5", "2.5"}, {"-1", "1"}, {"3", "1"}, {"0.5", "0"}}) {
    const ComplexValue s = cv(re, im);
    const ComplexValue za = zeta(s, a, ctx);
    const ComplexValue zb = zeta(s, b, ctx);
    const ComplexValue zc = zeta(s, c, ctx);
    CHECK(abs(za - zb) <= Real("1e-9") * abs(za));
    CHECK(abs(za - zc) <= Real("1e-9") * abs(za));
  }
}

TEST_CASE("Hadamard comparison") {
  PrecisionContext ctx(40);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  const ZeroTable zt = load_zeros(std::string(XIML_DATA_DIR) + "/zeros100.txt", -1, ctx);
  PrecisionGuard guard(ctx);
  const HadamardComparison h0 = hadamard_eval(Real(0), zt, xs, ctx);
  CHECK(h0.taylor_value == 2 * xs.a[0]);
  CHECK(mp::abs(h0.product_value - h0.taylor_value) < Real("1e-3"));
  const HadamardComparison h1 = hadamard_eval(zt.values[0], zt, xs, ctx);
  CHECK(h1.product_value == 0);
  CHECK(mp::abs(h1.taylor_value) < Real("1e-6"));
  const HadamardComparison h2 = hadamard_eval(Real(5), zt, xs, ctx);
  // Missing zeros beyond t_M scale the product by about exp(-x^2 tail).
  const Real x2_tail = 25 * zero_tail_bound(zt.values.back(), ctx);
  CHECK(h2.taylor_value < h2.product_value);
  CHECK(mp::abs(mp::log(h2.product_value / h2.taylor_value) - x2_tail) < x2_tail / 10);
  CHECK_THROWS_AS(hadamard_eval(Real(0), first_zeros(zt, 0), xs, ctx), DomainError);
}

TEST_CASE("power basis") {
  PrecisionContext ctx(40);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  PrecisionGuard guard(ctx);
  const std::vector<Real> g = power_basis(xs, 40, ctx);
  CHECK(mp::abs(g[0] - Real("0.5")) < Real("1e-10"));
  CHECK(to_fixed_significant(g[1], 7) == "-0.01154785");
  const Real s("0.3");
  Real sum(0);
  for (auto it = g.rbegin(); it != g.rend(); ++it) sum = sum * s + *it;
  CHECK(mp::abs(sum - xi(ComplexValue(s), xs, ctx).re) < Real("1e-35"));
  CHECK_THROWS_AS(power_basis(xs, 41, ctx), DomainError);
  CHECK_THROWS_AS(power_basis(xs, -1, ctx), DomainError);
}

TEST_CASE("standard grid") {
  PrecisionContext ctx(30);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  std::ostringstream out;
  write_grid(out, GridSpec::standard(), xs, ctx);
  const std::string text = out.str();
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "re,im,xi_re,xi_im,xi_abs");
  int rows = 0;
  bool center_found = false;
  PrecisionGuard guard(ctx);
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 5);
    if (parse_real(cells[0]) == Real("0.5") && parse_real(cells[1]) == 0) {
      center_found = true;
      CHECK(to_fixed_significant(parse_real(cells[2]), 7) == "0.4971208");
      CHECK(parse_real(cells[3]) == 0);
    }
  }
  CHECK(rows == 3721);
  CHECK(center_found);

  std::ostringstream again;
  write_grid(again, GridSpec::standard(), xs, ctx);
  CHECK(again.str() == text);
}

TEST_CASE("grid argument checks") {
  PrecisionContext ctx(30);
  const XiSeries xs = make_xi_series(builtin_table(), 20, ctx);
  GridSpec spec = GridSpec::standard();
  spec.steps = 1;
  CHECK_THROWS_AS(grid_nodes(spec, xs, ctx), DomainError);
  spec = GridSpec::standard();
  spec.re_max = spec.re_min;
  CHECK_THROWS_AS(grid_nodes(spec, xs, ctx), DomainError);
  spec = GridSpec::standard();
  spec.steps = 3;
  CHECK(grid_nodes(spec, xs, ctx).size() == 9);
  CHECK_THROWS_AS(write_grid_file("/nonexistent/dir/grid.csv", spec, xs, ctx), IoError);
}
