#include "facering/report.hpp"

#include <sstream>

#include "json.hpp"

namespace facering {

void VerificationReport::finalize(const std::string& when_clean) {
  for (const CheckRow& c : checks) {
    if (c.asserted && !c.pass) {
      verdict = "FAIL";
      return;
    }
  }
  verdict = when_clean;
}

std::string vec_to_string(const std::vector<long>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

CheckRow check_eq(const std::string& name, long expected, long observed) {
  CheckRow c;
  c.name = name;
  c.expected = std::to_string(expected);
  c.observed = std::to_string(observed);
  c.pass = expected == observed;
  return c;
}

CheckRow check_eq(const std::string& name, const std::vector<long>& expected,
                  const std::vector<long>& observed) {
  CheckRow c;
  c.name = name;
  c.expected = vec_to_string(expected);
  c.observed = vec_to_string(observed);
  c.pass = expected == observed;
  return c;
}

CheckRow check_flag(const std::string& name, const std::string& expected,
                    bool pass, const std::string& observed) {
  CheckRow c;
  c.name = name;
  c.expected = expected;
  c.observed = observed;
  c.pass = pass;
  return c;
}

CheckRow info(const std::string& name, const std::string& observed) {
  CheckRow c;
  c.name = name;
  c.asserted = false;
  c.observed = observed;
  c.pass = true;
  return c;
}

std::string to_json(const VerificationReport& r) {
  // nlohmann::json keeps keys sorted, so serialization is deterministic
  nlohmann::json j;
  j["theorem"] = r.theorem;
  j["inputs"]["complex"] = r.complex_name;
  j["inputs"]["field"] = r.field;
  j["inputs"]["seed"] = r.seed;
  j["inputs"]["trials"] = r.trials;
  j["checks"] = nlohmann::json::array();
  for (const CheckRow& c : r.checks) {
    nlohmann::json row;
    row["name"] = c.name;
    if (c.asserted)
      row["expected"] = c.expected;
    else
      row["expected"] = nullptr;
    row["observed"] = c.observed;
    row["pass"] = c.pass;
    j["checks"].push_back(row);
  }
  j["notes"] = r.notes;
  j["verdict"] = r.verdict;
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "[" << r.theorem << "] complex=" << r.complex_name
     << " field=" << r.field << " seed=" << r.seed << " trials=" << r.trials
     << "\n";
  for (const CheckRow& c : r.checks) {
    os << "  " << c.name << ": ";
    if (c.asserted)
      os << "expected " << c.expected << ", observed " << c.observed << " "
         << (c.pass ? "ok" : "MISMATCH");
    else
      os << c.observed;
    os << "\n";
  }
  for (const std::string& n : r.notes) os << "  note: " << n << "\n";
  os << "verdict: " << r.verdict << "\n";
  return os.str();
}

}  // namespace facering
