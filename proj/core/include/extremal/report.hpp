#pragma once

#include <string>
#include <vector>

namespace extremal {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Report {
  std::string name;
  std::vector<Check> checks;

  void add(std::string check, std::string expected, std::string actual, bool pass) {
    checks.push_back({std::move(check), std::move(expected), std::move(actual), pass});
  }
  template <class T>
  void expect_eq(std::string check, const T& expected, const T& actual) {
    add(std::move(check), to_text(expected), to_text(actual), expected == actual);
  }
  void expect_true(std::string check, bool actual) {
    add(std::move(check), "true", actual ? "true" : "false", actual);
  }
  void merge(const Report& o, const std::string& prefix = "") {
    for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.expected, c.actual, c.pass});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

 private:
  static std::string to_text(const std::string& s) { return s; }
  static std::string to_text(const char* s) { return s; }
  static std::string to_text(bool b) { return b ? "true" : "false"; }
  template <class T>
  static std::string to_text(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_text(v[i]);
    return s + "]";
  }
  template <class T>
  static std::string to_text(const T& v) {
    if constexpr (requires { v.to_string(); })
      return v.to_string();
    else
      return std::to_string(v);
  }
};

}  // namespace extremal
