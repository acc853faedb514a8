#include "ddp/report.hpp"

#include <json.hpp>

namespace ddp {

void Report::input(const std::string& key, const std::string& value) {
  inputs_.emplace_back(key, value);
}

void Report::input(const std::string& key, long value) {
  inputs_.emplace_back(key, std::to_string(value));
}

void Report::result(const std::string& key, const std::string& value) {
  results_.emplace_back(key, value);
}

void Report::result(const std::string& key, const char* value) {
  results_.emplace_back(key, std::string(value));
}

void Report::result(const std::string& key, const mpz_class& value) {
  results_.emplace_back(key, value.get_str());
}

void Report::result(const std::string& key, long value) {
  results_.emplace_back(key, std::to_string(value));
}

void Report::result(const std::string& key, bool value) {
  results_.emplace_back(key, value ? "true" : "false");
}

void Report::check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, pass, detail});
}

bool Report::all_passed() const {
  for (const auto& c : checks_) {
    if (!c.pass) return false;
  }
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs_) j["inputs"][k] = v;
  j["results"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : results_) j["results"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out = "command: " + command_ + "\n";
  if (!inputs_.empty()) {
    out += "inputs:\n";
    for (const auto& [k, v] : inputs_) out += "  " + k + " = " + v + "\n";
  }
  if (!results_.empty()) {
    out += "results:\n";
    for (const auto& [k, v] : results_) out += "  " + k + " = " + v + "\n";
  }
  if (!checks_.empty()) {
    out += "checks:\n";
    for (const auto& c : checks_) {
      out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    out += std::string("overall: ") + (all_passed() ? "PASS" : "FAIL") + "\n";
  }
  return out;
}

}  // namespace ddp
