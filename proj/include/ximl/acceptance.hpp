#ifndef XIML_ACCEPTANCE_HPP
#define XIML_ACCEPTANCE_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ximl/coefficients.hpp"
#include "ximl/precision.hpp"
#include "ximl/zeros.hpp"

namespace ximl {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// One line per individual check, already formatted.
  std::vector<std::string> checks;
  /// Notes on checks that were skipped, e.g. because no large zero file was given.
  std::vector<std::string> notes;
};

struct AcceptanceConfig {
  int digits = PrecisionContext::kDefaultDigits;
  /// Ordinates file; the bundled 100-zero table when empty.
  std::string zeros_file;
  long max_zeros = -1;
};

/// The twelve acceptance criteria. Expensive shared inputs (quadrature table,
/// zero table, reference gamma) are computed once on first use.
class AcceptanceSuite {
 public:
  static constexpr int kCriteria = 12;

  explicit AcceptanceSuite(AcceptanceConfig config);
  ~AcceptanceSuite();

  CriterionResult run(int id);
  std::vector<CriterionResult> run_all();

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// `criterion  N  PASS|FAIL  title`, then indented check lines.
void print_result(std::ostream& out, const CriterionResult& result, bool verbose);

/// Path of the bundled 100-zero fixture.
std::string bundled_zeros_path();

}  // namespace ximl

#endif  // XIML_ACCEPTANCE_HPP
