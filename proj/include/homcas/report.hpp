#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace homcas {

/// Outcome of one axiom. Only the first failure is kept as witness.
struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;

  void fail(std::vector<std::size_t> at, std::string why = {}) {
    if (!passed) return;
    passed = false;
    witness = std::move(at);
    detail = std::move(why);
  }
};

/// Ordered list of axiom outcomes plus free-form key/value notes.
class Report {
 public:
  /// Returns the entry for `axiom`, creating a passing one if absent.
  AxiomResult& axiom(const std::string& name);
  const AxiomResult* find(const std::string& name) const;

  void note(std::string key, std::string value);
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<AxiomResult>& results() const { return results_; }
  const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }

  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }
  double elapsed_ms() const { return elapsed_ms_; }

  /// One line per axiom, then notes, then the verdict.
  std::string to_text() const;
  /// One JSON record per axiom and note, then a verdict record.
  std::string to_jsonl() const;

 private:
  std::vector<AxiomResult> results_;
  std::vector<std::pair<std::string, std::string>> notes_;
  double elapsed_ms_ = 0.0;
};

}  // namespace homcas
