#ifndef QROOK_VERIFY_HPP
#define QROOK_VERIFY_HPP

#include <string>
#include <vector>

namespace qrook {

struct VerifyOptions {
  int n_max = 4;
  int s_max = 4;
  bool keep_going = false;
  int jobs = 1;
  bool timing = true;
};

// One verified cell. lhs and rhs hold serialized JSON values (QLaurent
// objects, decimal strings or XPoly arrays depending on the check).
struct CellResult {
  int n = 0;
  int s = 0;
  std::string check;
  bool ok = false;
  std::string lhs;
  std::string rhs;
  long long millis = 0;
};

struct VerifyReport {
  std::vector<CellResult> cells;

  bool all_ok() const;
  // JSON array of {"n","s","check","status","lhs","rhs","millis"}.
  std::string to_json() const;
};

// Suites: conjecture, classical, recurrence, qhermite, census, roundtrips.
// Cells are evaluated in a fixed order; with keep_going unset the report
// ends at the first mismatch in that order, whatever the number of jobs.
// Throws std::invalid_argument for an unknown suite or bad bounds.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& options);

std::vector<std::string> suite_names();

}  // namespace qrook

#endif  // QROOK_VERIFY_HPP
