#include "quosyn/report.hpp"

#include <sstream>

#include "json.hpp"

namespace quosyn {

bool check_report::all_passed() const {
  for (const auto& p : properties) {
    if (p.passes < p.trials) return false;
  }
  return true;
}

const property_record* check_report::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string check_report::to_json() const {
  nlohmann::ordered_json j;
  j["instance"] = instance;
  j["properties"] = nlohmann::ordered_json::array();
  for (const auto& p : properties) {
    nlohmann::ordered_json pj;
    pj["name"] = p.name;
    pj["trials"] = p.trials;
    pj["passes"] = p.passes;
    if (p.counterexample) {
      pj["counterexample"] = *p.counterexample;
    } else {
      pj["counterexample"] = nullptr;
    }
    pj["seed"] = p.seed;
    j["properties"].push_back(std::move(pj));
  }
  return j.dump(2);
}

std::string check_report::to_text() const {
  std::ostringstream out;
  out << "instance: " << instance << "\n";
  for (const auto& p : properties) {
    out << "  " << (p.passes == p.trials ? "ok   " : "FAIL ") << p.name << "  "
        << p.passes << "/" << p.trials;
    if (p.counterexample) {
      out << "  counterexample: " << *p.counterexample << "  (seed "
          << p.seed << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace quosyn
