#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gtpoly {

/// Outcome of one verification routine. A line is recorded per checked item;
/// items that could not be checked are recorded as skipped and do not fail.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> lines;

  void record(bool ok, std::string line) {
    ++checked;
    if (!ok) pass = false;
    lines.push_back((ok ? "ok    " : "FAIL  ") + std::move(line));
  }
  void skip(std::string line) {
    ++skipped;
    lines.push_back("skip  " + std::move(line));
  }
  void merge(const CheckReport& o) {
    pass = pass && o.pass;
    checked += o.checked;
    skipped += o.skipped;
    for (const auto& l : o.lines) lines.push_back(o.name.empty() ? l : o.name + ": " + l);
  }
};

}  // namespace gtpoly
