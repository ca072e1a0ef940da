#include "multicoh/report.hpp"

#include <sstream>

namespace multicoh {

AxiomResult& Report::entry(const std::string& axiom) {
  for (auto& r : results_)
    if (r.axiom == axiom) return r;
  results_.push_back(AxiomResult{axiom});
  return results_.back();
}

void Report::pass(const std::string& axiom, std::uint64_t instances) {
  entry(axiom).checked += instances;
}

void Report::fail(const std::string& axiom, const std::string& witness) {
  AxiomResult& r = entry(axiom);
  r.checked += 1;
  r.failed += 1;
  if (r.witnesses.size() < AxiomResult::kMaxWitnesses) r.witnesses.push_back(witness);
}

void Report::merge(const Report& other) {
  for (const auto& r : other.results_) {
    AxiomResult& mine = entry(r.axiom);
    mine.checked += r.checked;
    mine.failed += r.failed;
    for (const auto& w : r.witnesses) {
      if (mine.witnesses.size() >= AxiomResult::kMaxWitnesses) break;
      mine.witnesses.push_back(w);
    }
  }
}

bool Report::ok() const {
  for (const auto& r : results_)
    if (!r.ok()) return false;
  return true;
}

std::uint64_t Report::total_checked() const {
  std::uint64_t n = 0;
  for (const auto& r : results_) n += r.checked;
  return n;
}

std::uint64_t Report::total_failed() const {
  std::uint64_t n = 0;
  for (const auto& r : results_) n += r.failed;
  return n;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.ok() ? "PASS " : "FAIL ") << r.axiom << " (" << r.checked << " instances";
    if (r.failed > 0) os << ", " << r.failed << " failed";
    os << ")";
    if (!r.ok() && !r.witnesses.empty()) os << ": " << r.witnesses.front();
    os << '\n';
  }
  return os.str();
}

}  // namespace multicoh
