#include "pentagon/report.hpp"

#include <sstream>

namespace pentagon {

void RunReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void RunReport::value(std::string name, std::string v) {
  values.emplace_back(std::move(name), std::move(v));
}

bool RunReport::all_ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks)
    jchecks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  nlohmann::json jvalues = nlohmann::json::object();
  for (const auto& [k, v] : values) jvalues[k] = v;
  return {{"command", command},
          {"checks", jchecks},
          {"values", jvalues},
          {"ok", all_ok()},
          {"elapsed_ms", elapsed_ms}};
}

std::string RunReport::render_text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  for (const auto& [k, v] : values) os << k << ": " << v << "\n";
  for (const auto& c : checks) {
    os << (c.ok ? "[pass] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (all_ok() ? "ok" : "FAILED") << " in " << elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace pentagon
