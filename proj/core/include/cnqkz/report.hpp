#ifndef CNQKZ_REPORT_HPP
#define CNQKZ_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cnqkz {

using Json = nlohmann::ordered_json;

/// One verified identity: pass/fail, its parameters and, on failure,
/// a short counterexample description.
struct CheckResult {
  std::string identity;
  Json params = Json::object();
  bool pass = true;
  std::string counterexample;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void add(const std::string& identity, Json params, bool pass, std::string detail = "");
  void merge(const Report& o);
  Json to_json() const;
};

}  // namespace cnqkz

#endif
