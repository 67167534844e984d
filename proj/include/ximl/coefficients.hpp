#ifndef XIML_COEFFICIENTS_HPP
#define XIML_COEFFICIENTS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ximl/precision.hpp"

namespace ximl {

/// The three coefficient families: Turan moments b_n, Jensen coefficients c_n
/// and even Taylor coefficients a_2n of xi(1/2 + ix).
enum class Family { bhat, c, a };

enum class Provenance { builtin_fixture, quadrature, file };

std::string to_string(Family family);
std::string to_string(Provenance provenance);
Family parse_family(const std::string& text);

/// A decimal string and the number of digits it is trusted to. An empty
/// text marks a missing cell.
struct CoefficientEntry {
  std::string text;
  int digits = 0;

  bool missing() const { return text.empty(); }
  static CoefficientEntry from_text(const std::string& text);
};

struct CoefficientRow {
  int n = 0;
  CoefficientEntry bhat;
  CoefficientEntry c;
  CoefficientEntry a;
  /// Absolute error bound on bhat when it was computed, else empty.
  std::string bhat_error;

  const CoefficientEntry& entry(Family family) const;
  CoefficientEntry& entry(Family family);
};

/// Rows n = 0..N, contiguous. Invariants across a fully populated row:
/// a_2n = 8 4^n b_n / (2n)!  and  c_n = 2 n! (-1)^n a_2n.
struct CoefficientTable {
  std::vector<CoefficientRow> rows;
  Provenance provenance = Provenance::builtin_fixture;
  std::string source;

  int max_index() const { return static_cast<int>(rows.size()) - 1; }
  bool complete(Family family) const;
};

/// Reference moments and coefficients, verbatim: 16 digits for b, 12 for c and a.
const CoefficientTable& builtin_table();

/// Family column as reals at the active precision. Throws DomainError on a
/// missing cell or when the table is shorter than `count` rows.
std::vector<Real> values(const CoefficientTable& table, Family family, const PrecisionContext& ctx);

/// Fills the other two columns from `from`. Derived entries carry the digit
/// count of the entry they came from.
CoefficientTable convert(const CoefficientTable& table, Family from, const PrecisionContext& ctx);

/// Keeps only one column; used to feed convert.
CoefficientTable project(const CoefficientTable& table, Family keep);

/// Exact factor a_2n / b_n = 8 4^n / (2n)!.
Real a_over_bhat(int n, const PrecisionContext& ctx);
/// Exact factor c_n / a_2n = 2 n! (-1)^n.
Real c_over_a(int n, const PrecisionContext& ctx);

/// d^{2n}/dx^{2n} xi(1/2 + ix) at x = 0 from one family.
Real even_derivative(int n, const CoefficientTable& table, Family source, const PrecisionContext& ctx);

struct TuranResult {
  int n = 0;
  /// c_n^2 - c_{n-1} c_{n+1}
  Real margin;
  /// b_n^2 - (2n-1)/(2n+1) b_{n-1} b_{n+1}
  Real moment_margin;
  bool holds = false;
};

/// Both forms are evaluated. Throws AccuracyError when their verdicts differ.
TuranResult turan_inequality(int n, const CoefficientTable& table, const PrecisionContext& ctx);

struct JensenPolynomial {
  int degree = 0;
  int shift = 0;
  /// coefficients[h] = c_h * C(d, h), ascending powers.
  std::vector<Real> coefficients;
};

JensenPolynomial jensen_polynomial(int d, const CoefficientTable& table, const PrecisionContext& ctx);

struct HyperbolicityResult {
  int real_root_count = 0;
  bool hyperbolic = false;
};

/// Sturm-sequence count of distinct real roots. Coefficients below
/// 10^(-digits/2) times the largest magnitude are treated as zero.
HyperbolicityResult hyperbolicity_check(const JensenPolynomial& poly, const PrecisionContext& ctx);

/// Same check on an arbitrary polynomial given by ascending coefficients.
HyperbolicityResult count_real_roots(const std::vector<Real>& coefficients, const PrecisionContext& ctx);

/// `n<TAB>bhat<TAB>c<TAB>a`, `-` for a missing cell, `#` comments.
void write_table(std::ostream& out, const CoefficientTable& table);
CoefficientTable read_table(std::istream& in, const std::string& source);
CoefficientTable load_table(const std::string& path);
void save_table(const std::string& path, const CoefficientTable& table);

}  // namespace ximl

#endif  // XIML_COEFFICIENTS_HPP
