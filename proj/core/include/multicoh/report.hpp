#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace multicoh {

/// Outcome of one axiom family: how many instances were enumerated and the
/// witnesses of every violation (the first few verbatim, the rest counted).
struct AxiomResult {
  std::string axiom;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> witnesses;  // at most kMaxWitnesses kept

  static constexpr std::size_t kMaxWitnesses = 16;

  bool ok() const { return failed == 0; }
};

/// Checker output. Deterministic: axioms appear in the order the checker
/// enumerates them, witnesses in enumeration order.
class Report {
 public:
  void pass(const std::string& axiom, std::uint64_t instances = 1);
  void fail(const std::string& axiom, const std::string& witness);
  void merge(const Report& other);

  bool ok() const;
  std::uint64_t total_checked() const;
  std::uint64_t total_failed() const;

  const std::vector<AxiomResult>& results() const { return results_; }

  /// One line per axiom: "PASS/FAIL <axiom> (<n> instances)[: first witness]".
  std::string str() const;

 private:
  AxiomResult& entry(const std::string& axiom);
  std::vector<AxiomResult> results_;
};

}  // namespace multicoh
