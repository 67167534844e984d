#include "ximl/coefficients.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ximl/errors.hpp"

namespace ximl {

namespace mp = boost::multiprecision;

std::string to_string(Family family) {
  switch (family) {
    case Family::bhat: return "bhat";
    case Family::c: return "c";
    case Family::a: return "a";
  }
  return "?";
}

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::builtin_fixture: return "builtin_fixture";
    case Provenance::quadrature: return "quadrature";
    case Provenance::file: return "file";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "b" || text == "bhat") return Family::bhat;
  if (text == "c") return Family::c;
  if (text == "a") return Family::a;
  throw FormatError("unknown coefficient family '" + text + "' (expected a, b or c)");
}

CoefficientEntry CoefficientEntry::from_text(const std::string& text) {
  if (text.empty() || text == "-") return {};
  if (!is_decimal_literal(text)) throw FormatError("not a decimal number: '" + text + "'");
  return {text, significant_digits(text)};
}

const CoefficientEntry& CoefficientRow::entry(Family family) const {
  switch (family) {
    case Family::bhat: return bhat;
    case Family::c: return c;
    case Family::a: return a;
  }
  return bhat;
}

CoefficientEntry& CoefficientRow::entry(Family family) {
  return const_cast<CoefficientEntry&>(static_cast<const CoefficientRow&>(*this).entry(family));
}

bool CoefficientTable::complete(Family family) const {
  if (rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [family](const CoefficientRow& r) { return !r.entry(family).missing(); });
}

const CoefficientTable& builtin_table() {
  static const CoefficientTable table = [] {
    struct Raw {
      const char* bhat;
      const char* c;
      const char* a;
    };
    static const Raw raw[] = {
        {"6.214009727353926e-2", "0.994241556376", "0.497120778188"},
        {"7.178732598482949e-4", "-2.29719443152e-2", "1.14859721576e-2"},
        {"2.314725338818463e-5", "4.93808072283e-4", "1.23452018071e-4"},
        {"1.170499895698397e-6", "-9.98826577664e-6", "8.32355481387e-7"},
        {"7.859696022958770e-8", "1.91626874465e-7", "3.99222655135e-9"},
        {"6.47444266092415e-9", "-3.50784618243e-9", "1.46160257601e-11"},
        {"6.248509280628118e-10", "6.15533766557e-11", "4.27454004553e-14"},
        {"6.857113566031334e-11", "-1.03921031437e-12", "1.03096261346e-16"},
        {"8.379562856498463e-12", "1.69325437329e-14", "2.09976980815e-19"},
        {"1.122895900525652e-12", "-2.66944768148e-16", "3.67814109551e-22"},
        {"1.630766572462173e-13", "4.08084512257e-18", "5.62285758732e-25"},
        {"2.543075058368090e-14", "-6.06077541545e-20", "7.59176013038e-28"},
        {"4.226693865498318e-15", "8.75935173682e-22", "9.14334287904e-31"},
        {"7.441357184567353e-16", "-1.23371064104e-23", "9.9061066332e-34"},
        {"1.380660423385153e-16", "1.69556431188e-25", "9.72469343308e-37"},
        {"2.687936596475912e-17", "-2.27655637357e-27", "8.7045996667e-40"},
        {"5.470564386990504e-18", "2.98923338866e-29", "7.14348661116e-43"},
        {"1.160183185841992e-18", "-3.84211459038e-31", "5.40097046858e-46"},
        {"2.556698594979872e-19", "4.83821574529e-33", "3.7784546542e-49"},
        {"5.840019662344811e-20", "-5.97376698863e-35", "2.45540797309e-52"},
        {"1.379672872080269e-20", "7.23728179619e-37", "1.48737634559e-55"},
    };
    CoefficientTable t;
    t.provenance = Provenance::builtin_fixture;
    t.source = "builtin";
    int n = 0;
    for (const auto& r : raw) {
      CoefficientRow row;
      row.n = n++;
      row.bhat = CoefficientEntry::from_text(r.bhat);
      row.c = CoefficientEntry::from_text(r.c);
      row.a = CoefficientEntry::from_text(r.a);
      t.rows.push_back(std::move(row));
    }
    return t;
  }();
  return table;
}

std::vector<Real> values(const CoefficientTable& table, Family family, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  std::vector<Real> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    const auto& e = row.entry(family);
    if (e.missing()) {
      throw DomainError("coefficient table has no " + to_string(family) + " value for n=" + std::to_string(row.n));
    }
    out.push_back(parse_real(e.text));
  }
  return out;
}

namespace {

Real factorial(int n) {
  Real f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

Real a_over_bhat(int n, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  return 8 * mp::pow(Real(4), n) / factorial(2 * n);
}

Real c_over_a(int n, const PrecisionContext& ctx) {
  PrecisionGuard guard(ctx);
  const Real f = 2 * factorial(n);
  return n % 2 == 0 ? f : Real(-f);
}

CoefficientTable project(const CoefficientTable& table, Family keep) {
  CoefficientTable out = table;
  for (auto& row : out.rows) {
    for (Family f : {Family::bhat, Family::c, Family::a}) {
      if (f != keep) row.entry(f) = {};
    }
  }
  return out;
}

CoefficientTable convert(const CoefficientTable& table, Family from, const PrecisionContext& ctx) {
  if (table.rows.empty()) throw DomainError("convert: empty coefficient table");
  PrecisionGuard guard(ctx);
  const std::vector<Real> source = values(table, from, ctx);
  CoefficientTable out = table;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    auto& row = out.rows[i];
    const int n = row.n;
    const int digits = row.entry(from).digits;
    Real a;
    switch (from) {
      case Family::bhat: a = source[i] * a_over_bhat(n, ctx); break;
      case Family::a: a = source[i]; break;
      case Family::c: a = source[i] / c_over_a(n, ctx); break;
    }
    const Real bhat = a / a_over_bhat(n, ctx);
    const Real c = a * c_over_a(n, ctx);
    const auto make = [&](const Real& x) { return CoefficientEntry{to_scientific(x, ctx.digits()), digits}; };
    if (from != Family::bhat) row.bhat = make(bhat);
    if (from != Family::c) row.c = make(c);
    if (from != Family::a) row.a = make(a);
  }
  return out;
}

Real even_derivative(int n, const CoefficientTable& table, Family source, const PrecisionContext& ctx) {
  if (n < 0 || n > table.max_index()) {
    throw DomainError("even_derivative: n=" + std::to_string(n) + " outside table range 0.." +
                      std::to_string(table.max_index()));
  }
  PrecisionGuard guard(ctx);
  const auto& e = table.rows[static_cast<std::size_t>(n)].entry(source);
  if (e.missing()) throw DomainError("even_derivative: missing " + to_string(source) + " value");
  const Real x = parse_real(e.text);
  switch (source) {
    case Family::a: return factorial(2 * n) * x;
    case Family::c: {
      const Real r = factorial(2 * n) / (2 * factorial(n)) * x;
      return n % 2 == 0 ? r : Real(-r);
    }
    case Family::bhat: return 8 * mp::pow(Real(4), n) * x;
  }
  return x;
}

TuranResult turan_inequality(int n, const CoefficientTable& table, const PrecisionContext& ctx) {
  if (n < 1 || n > table.max_index() - 1) {
    throw DomainError("turan_inequality: n=" + std::to_string(n) + " outside 1.." +
                      std::to_string(table.max_index() - 1));
  }
  PrecisionGuard guard(ctx);
  const auto c = values(table, Family::c, ctx);
  const auto b = values(table, Family::bhat, ctx);
  const auto i = static_cast<std::size_t>(n);
  TuranResult r;
  r.n = n;
  r.margin = c[i] * c[i] - c[i - 1] * c[i + 1];
  r.moment_margin = b[i] * b[i] - Real(2 * n - 1) / (2 * n + 1) * b[i - 1] * b[i + 1];
  r.holds = r.margin > 0;
  if (r.holds != (r.moment_margin > 0)) {
    throw AccuracyError("turan_inequality: coefficient and moment forms disagree at n=" + std::to_string(n),
                        to_scientific(r.margin, 12));
  }
  return r;
}

JensenPolynomial jensen_polynomial(int d, const CoefficientTable& table, const PrecisionContext& ctx) {
  if (d < 1 || d > table.max_index()) {
    throw DomainError("jensen_polynomial: degree " + std::to_string(d) + " needs c_0..c_" + std::to_string(d) +
                      ", table has 0.." + std::to_string(table.max_index()));
  }
  PrecisionGuard guard(ctx);
  const auto c = values(table, Family::c, ctx);
  JensenPolynomial p;
  p.degree = d;
  Real binom(1);
  for (int h = 0; h <= d; ++h) {
    p.coefficients.push_back(c[static_cast<std::size_t>(h)] * binom);
    binom = binom * (d - h) / (h + 1);
  }
  return p;
}

namespace {

using Poly = std::vector<Real>;

Real max_abs(const Poly& p) {
  Real m(0);
  for (const auto& x : p) {
    if (mp::abs(x) > m) m = mp::abs(x);
  }
  return m;
}

void normalize(Poly& p) {
  const Real m = max_abs(p);
  if (m > 0) {
    for (auto& x : p) x /= m;
  }
}

// Drops leading coefficients not larger than tol.
void trim(Poly& p, const Real& tol) {
  while (!p.empty() && mp::abs(p.back()) <= tol) p.pop_back();
}

Poly remainder(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && a.size() >= b.size()) {
    const Real q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

HyperbolicityResult count_real_roots(const std::vector<Real>& coefficients, const PrecisionContext& ctx) {
  if (coefficients.size() < 2) throw DomainError("hyperbolicity_check: degree must be at least 1");
  PrecisionGuard guard(ctx);
  const Real rel_tol = pow(Real(10), -(ctx.digits() / 2));
  Poly p = coefficients;
  const Real scale = max_abs(p);
  const int degree = static_cast<int>(p.size()) - 1;
  if (mp::abs(p.back()) <= rel_tol * scale) {
    throw DegeneracyError("hyperbolicity_check: leading coefficient h=" + std::to_string(degree) +
                              " is below the zero tolerance",
                          to_scientific(p.back(), 12));
  }
  normalize(p);
  trim(p, rel_tol);

  std::vector<Poly> chain;
  chain.push_back(p);
  Poly dp;
  for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(p[k] * static_cast<long>(k));
  normalize(dp);
  chain.push_back(dp);
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    trim(r, rel_tol);
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    normalize(r);
    chain.push_back(std::move(r));
  }

  std::vector<int> at_minus;
  std::vector<int> at_plus;
  for (const auto& q : chain) {
    const int lead = q.back() > 0 ? 1 : -1;
    const int deg = static_cast<int>(q.size()) - 1;
    at_plus.push_back(lead);
    at_minus.push_back(deg % 2 == 0 ? lead : -lead);
  }
  HyperbolicityResult result;
  result.real_root_count = sign_changes(at_minus) - sign_changes(at_plus);
  result.hyperbolic = result.real_root_count == degree;
  return result;
}

HyperbolicityResult hyperbolicity_check(const JensenPolynomial& poly, const PrecisionContext& ctx) {
  if (poly.degree < 1) throw DomainError("hyperbolicity_check: degree must be at least 1");
  return count_real_roots(poly.coefficients, ctx);
}

void write_table(std::ostream& out, const CoefficientTable& table) {
  out << "# n\tbhat\tc\ta\n";
  for (const auto& row : table.rows) {
    const auto cell = [](const CoefficientEntry& e) { return e.missing() ? std::string("-") : e.text; };
    out << row.n << '\t' << cell(row.bhat) << '\t' << cell(row.c) << '\t' << cell(row.a) << '\n';
  }
}

CoefficientTable read_table(std::istream& in, const std::string& source) {
  CoefficientTable table;
  table.provenance = Provenance::file;
  table.source = source;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    if (cells.size() != 4) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": expected 4 tab-separated fields", line_no);
    }
    CoefficientRow row;
    try {
      std::size_t used = 0;
      row.n = std::stoi(cells[0], &used);
      if (used != cells[0].size()) throw std::invalid_argument("index");
    } catch (const std::exception&) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": bad index '" + cells[0] + "'", line_no);
    }
    if (row.n != static_cast<int>(table.rows.size())) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": rows must be n = 0, 1, 2, ...", line_no);
    }
    try {
      row.bhat = CoefficientEntry::from_text(cells[1]);
      row.c = CoefficientEntry::from_text(cells[2]);
      row.a = CoefficientEntry::from_text(cells[3]);
    } catch (const FormatError& e) {
      throw FormatError(source + ":" + std::to_string(line_no) + ": " + e.what(), line_no);
    }
    table.rows.push_back(std::move(row));
  }
  if (table.rows.empty()) throw FormatError(source + ": no coefficient rows");
  return table;
}

CoefficientTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open coefficient table " + path);
  return read_table(in, path);
}

void save_table(const std::string& path, const CoefficientTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_table(out, table);
  out.close();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace ximl
