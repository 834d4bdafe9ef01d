#include "homcas/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace homcas {

AxiomResult& Report::axiom(const std::string& name) {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const AxiomResult& r) { return r.axiom == name; });
  if (it != results_.end()) return *it;
  results_.push_back(AxiomResult{name, true, {}, {}});
  return results_.back();
}

const AxiomResult* Report::find(const std::string& name) const {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const AxiomResult& r) { return r.axiom == name; });
  return it == results_.end() ? nullptr : &*it;
}

void Report::note(std::string key, std::string value) {
  notes_.emplace_back(std::move(key), std::move(value));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& r : other.results_) {
    AxiomResult copy = r;
    copy.axiom = prefix + r.axiom;
    results_.push_back(std::move(copy));
  }
  for (const auto& [k, v] : other.notes_) notes_.emplace_back(prefix + k, v);
}

bool Report::passed() const {
  return std::all_of(results_.begin(), results_.end(), [](const AxiomResult& r) { return r.passed; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& r : results_) {
    os << (r.passed ? "PASS " : "FAIL ") << r.axiom;
    if (!r.passed) {
      os << " witness=(";
      for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? "," : "") << r.witness[i];
      os << ")";
      if (!r.detail.empty()) os << " " << r.detail;
    }
    os << "\n";
  }
  for (const auto& [k, v] : notes_) os << "NOTE " << k << " = " << v << "\n";
  os << "VERDICT " << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

std::string Report::to_jsonl() const {
  using nlohmann::json;
  std::ostringstream os;
  for (const auto& r : results_) {
    json j = {{"axiom", r.axiom}, {"pass", r.passed}, {"witness", r.witness}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    os << j.dump() << "\n";
  }
  for (const auto& [k, v] : notes_) os << json{{"note", k}, {"value", v}}.dump() << "\n";
  os << json{{"verdict", passed() ? "pass" : "fail"}, {"elapsed_ms", elapsed_ms_}}.dump() << "\n";
  return os.str();
}

}  // namespace homcas
