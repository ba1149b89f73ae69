#pragma once

#include <string>
#include <vector>

namespace bqk {

struct Violation {
  std::string axiom;
  std::vector<long long> witness;
};

// passed() iff no violations; one witness per axiom unless verbose
struct AxiomReport {
  std::vector<Violation> violations;
  bool verbose = false;

  bool passed() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return passed(); }

  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
  // records unless this axiom already has a witness (non-verbose)
  void add(std::string axiom, std::vector<long long> witness) {
    if (!verbose && has(axiom)) return;
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  void merge(const AxiomReport& o) {
    for (const auto& v : o.violations) add(v.axiom, v.witness);
  }

  std::string summary() const {
    if (passed()) return "passed";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.axiom + " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + std::to_string(v.witness[i]);
      s += ")";
    }
    return s;
  }
};

}  // namespace bqk
