#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uac {

/// Plain "key value" lines; '#' starts a comment.
struct SuiteConfig {
  std::vector<std::string> suites;  // canonical order, no duplicates
  int q = 3;
  int p = 3;
  int n = 1;
  int prec = 8;
  int window = 6;
  int order_cap = 24;
  std::string output;         // empty: stdout
  std::string format = "tsv"; // tsv | text
  std::vector<std::string> warnings;

  std::string render() const;
  friend bool operator==(const SuiteConfig& a, const SuiteConfig& b) {
    return a.suites == b.suites && a.q == b.q && a.p == b.p && a.n == b.n && a.prec == b.prec &&
           a.window == b.window && a.order_cap == b.order_cap && a.output == b.output && a.format == b.format;
  }
};

const std::vector<std::string>& known_suites();

/// kParse (with the line number) on syntax errors and unknown keys,
/// kUsage on out-of-range values. Duplicate keys: last wins, warning kept.
SuiteConfig parse_config(std::string_view text);
/// Defaults with every suite selected.
SuiteConfig default_config();

struct CheckRow {
  std::string id;
  std::string anchor;   // what is being checked, in words
  std::string status;   // PASS | FAIL | skipped (budget)
  std::string witness;
};

struct Report {
  std::vector<CheckRow> rows;
  bool ok() const;
  std::string render(std::string_view format) const;
};

Report run_suite(const SuiteConfig& config);

}  // namespace uac
