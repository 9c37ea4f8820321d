#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace facering {

// One expected-vs-observed line of a verification report. Informational rows
// (asserted = false) render with a null expected value and never fail.
struct CheckRow {
  std::string name;
  bool asserted = true;
  std::string expected;
  std::string observed;
  bool pass = true;
};

struct VerificationReport {
  std::string theorem;
  std::string complex_name;
  std::string field;
  std::uint64_t seed = 0;
  int trials = 1;
  std::vector<CheckRow> checks;
  std::vector<std::string> notes;
  std::string verdict;  // PASS | FAIL | NOT-APPLICABLE | HYPOTHESIS-NOT-MET

  // FAIL wins over everything; otherwise the gate verdict (PASS by default).
  void finalize(const std::string& when_clean = "PASS");
  bool failed() const { return verdict == "FAIL"; }

  void add_note(const std::string& n) { notes.push_back(n); }
};

std::string vec_to_string(const std::vector<long>& v);

CheckRow check_eq(const std::string& name, long expected, long observed);
CheckRow check_eq(const std::string& name, const std::vector<long>& expected,
                  const std::vector<long>& observed);
CheckRow check_flag(const std::string& name, const std::string& expected,
                    bool pass, const std::string& observed);
CheckRow info(const std::string& name, const std::string& observed);

std::string to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);

}  // namespace facering
