#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ddp {

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

// Accumulates one command's inputs, results and named pass/fail checks.
// Key order is insertion order in both renderings; all numbers are written
// as exact decimal strings by the caller, so the JSON form is stable.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& value);
  void input(const std::string& key, long value);
  void result(const std::string& key, const std::string& value);
  void result(const std::string& key, const char* value);  // avoids the bool overload
  void result(const std::string& key, const mpz_class& value);
  void result(const std::string& key, long value);
  void result(const std::string& key, bool value);
  void check(const std::string& name, bool pass, const std::string& detail = "");

  bool all_passed() const;
  const std::vector<Check>& checks() const { return checks_; }

  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, std::string>> results_;
  std::vector<Check> checks_;
};

}  // namespace ddp
