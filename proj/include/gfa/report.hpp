#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfa/json_io.hpp"

namespace gfa {

inline constexpr const char* kSchemaVersion = "1.0";

struct Comparison {
  std::string label;
  json computed;
  json paper_value;
  std::optional<bool> agrees;  // null when the two values do not share a tolerance context
};

/// Envelope for every CLI result.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  json& result() { return result_; }
  void warn(std::string message);

  /// agrees is decided with the given relative tolerance (0 means exact
  /// equality) when one is supplied; otherwise it is null and `warning` is
  /// recorded. A disagreement also records `warning` when one is supplied.
  const Comparison& emit_comparison(std::string label, json computed, json paper_value,
                                    std::optional<double> tolerance, std::string warning = {});

  const std::vector<Comparison>& comparisons() const { return comparisons_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  json to_json() const;

 private:
  std::string command_;
  json result_ = json::object();
  std::vector<Comparison> comparisons_;
  std::vector<std::string> warnings_;
};

/// Numeric agreement of two JSON scalars ("p/q" strings are parsed as
/// rationals) within rel_tol * max(1, |reference|). nullopt when either side is
/// not a number.
std::optional<bool> json_values_agree(const json& computed, const json& reference, double rel_tol);

}  // namespace gfa
