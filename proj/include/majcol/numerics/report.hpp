#pragma once

#include <string>
#include <utility>
#include <vector>

namespace majcol::numerics {

struct ReportItem {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  /// Signed distance to the bound; >= 0 when the item holds.
  double margin = 0.0;
  bool pass = true;
  /// Exact form or extra context, e.g. a rational.
  std::string detail;
};

struct VerificationReport {
  std::string lemma;
  bool pass = true;
  std::vector<ReportItem> items;
  std::vector<std::pair<std::string, std::string>> parameters;

  void add(ReportItem item) {
    pass = pass && item.pass;
    items.push_back(std::move(item));
  }
  void param(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
};

}  // namespace majcol::numerics
