#include "gfa/report.hpp"

#include <algorithm>
#include <cmath>

#include "gfa/scalar.hpp"

namespace gfa {

namespace {

std::optional<Rational> as_exact(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) return std::nullopt;
  try {
    return Rational(j.get<std::string>());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<double> as_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (auto r = as_exact(j)) return static_cast<double>(*r);
  return std::nullopt;
}

}  // namespace

std::optional<bool> json_values_agree(const json& computed, const json& reference, double rel_tol) {
  if (rel_tol == 0.0) {
    const auto a = as_exact(computed), b = as_exact(reference);
    if (a && b) return *a == *b;
  }
  const auto a = as_double(computed), b = as_double(reference);
  if (!a || !b) return std::nullopt;
  return std::abs(*a - *b) <= rel_tol * std::max(1.0, std::abs(*b));
}

void Report::warn(std::string message) {
  if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end()) warnings_.push_back(std::move(message));
}

const Comparison& Report::emit_comparison(std::string label, json computed, json paper_value,
                                          std::optional<double> tolerance, std::string warning) {
  Comparison c{std::move(label), std::move(computed), std::move(paper_value), std::nullopt};
  if (tolerance) c.agrees = json_values_agree(c.computed, c.paper_value, *tolerance);
  if (!c.agrees) {
    warn(warning.empty() ? c.label + ": computed and printed values are not comparable" : c.label + ": " + warning);
  } else if (!*c.agrees && !warning.empty()) {
    warn(c.label + ": " + warning);
  }
  comparisons_.push_back(std::move(c));
  return comparisons_.back();
}

json Report::to_json() const {
  json comps = json::array();
  for (const auto& c : comparisons_) {
    comps.push_back({{"label", c.label},
                     {"computed", c.computed},
                     {"paper_value", c.paper_value},
                     {"agrees", c.agrees ? json(*c.agrees) : json(nullptr)}});
  }
  return {{"schema_version", kSchemaVersion},
          {"command", command_},
          {"result", result_},
          {"comparisons", std::move(comps)},
          {"warnings", warnings_}};
}

}  // namespace gfa
