#include "cnqkz/report.hpp"

namespace cnqkz {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(const std::string& identity, Json params, bool pass, std::string detail) {
  checks.push_back({identity, std::move(params), pass, std::move(detail)});
}

void Report::merge(const Report& o) {
  for (const auto& c : o.checks) checks.push_back(c);
}

Json Report::to_json() const {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["identity"] = c.identity;
    item["parameters"] = c.params;
    item["status"] = c.pass ? "pass" : "fail";
    if (!c.pass && !c.counterexample.empty()) item["counterexample"] = c.counterexample;
    arr.push_back(std::move(item));
  }
  Json out;
  out["suite"] = suite;
  out["pass"] = all_pass();
  out["checks"] = arr;
  return out;
}

}  // namespace cnqkz
