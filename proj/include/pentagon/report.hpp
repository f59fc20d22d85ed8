#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace pentagon {

/// Run result of a CLI subcommand: per-check verdicts with witnesses and
/// exact values rendered as strings; identical content in text and JSON form.
struct RunReport {
  struct Check {
    std::string name;
    bool ok = true;
    std::string detail;  // witness or value, exact rendering
  };
  std::string command;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> values;
  double elapsed_ms = 0.0;

  void add(std::string name, bool ok, std::string detail = {});
  void value(std::string name, std::string v);
  bool all_ok() const;
  nlohmann::json to_json() const;
  std::string render_text() const;
};

}  // namespace pentagon
