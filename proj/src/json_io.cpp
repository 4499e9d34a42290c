#include "gfa/json_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "gfa/errors.hpp"

namespace gfa {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_rational_literal(const std::string& text, const std::string& where) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw ParseError(where + ": malformed rational literal \"" + text + "\"");
  }
  const BigInt p(num[0] == '+' ? num.substr(1) : num);
  const BigInt q(den[0] == '+' ? den.substr(1) : den);
  if (q == 0) throw ParseError(where + ": zero denominator in \"" + text + "\"");
  return Rational(p, q);
}

double require_number(const json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  return j.get<double>();
}

std::size_t require_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw ParseError(where + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

const json& require_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::string format_float(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s = buf;
  // Keep floats recognizable as floats on re-read.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_into(const json& j, std::string& out, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map ordering: sorted keys
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& x : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(x, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float: out += format_float(j.get<double>()); return;
    default: out += j.dump(); return;
  }
}

}  // namespace

Scalar scalar_from_json(const json& j, const ScalarDomain& domain, const std::string& where) {
  switch (domain.kind()) {
    case ScalarKind::real: return Scalar::real(require_number(j, where));
    case ScalarKind::complex: {
      if (j.is_number()) return Scalar::complex({j.get<double>(), 0.0});
      if (!j.is_array() || j.size() != 2) throw ParseError(where + ": complex literal must be [re, im]");
      return Scalar::complex({require_number(j[0], where + "[0]"), require_number(j[1], where + "[1]")});
    }
    case ScalarKind::zmod: {
      if (!j.is_number_integer()) throw ParseError(where + ": residue literal must be an integer");
      const auto v = j.get<std::int64_t>();
      if (v < 0 || static_cast<std::uint64_t>(v) >= domain.modulus()) {
        throw ParseError(where + ": residue " + std::to_string(v) + " outside 0.." + std::to_string(domain.modulus() - 1));
      }
      return Scalar::zmod_residue(static_cast<std::uint64_t>(v), domain.modulus());
    }
    case ScalarKind::rational: {
      if (j.is_number_integer()) return Scalar::rational(Rational(j.get<std::int64_t>()));
      if (!j.is_string()) throw ParseError(where + ": rational literal must be a string \"p/q\"");
      return Scalar::rational(parse_rational_literal(j.get<std::string>(), where));
    }
  }
  throw ParseError(where + ": unknown scalar kind");
}

json scalar_to_json(const Scalar& s) {
  switch (s.domain().kind()) {
    case ScalarKind::real: return s.as_real();
    case ScalarKind::complex: return json::array({s.as_complex().real(), s.as_complex().imag()});
    case ScalarKind::zmod: return s.residue();
    case ScalarKind::rational: return s.to_string();
  }
  return nullptr;
}

ScalarDomain domain_from_json(const json& j) {
  const std::string where = "scalar";
  const json& kind = require_field(j, "kind", where);
  if (!kind.is_string()) throw ParseError("scalar.kind: expected a string");
  const auto k = kind.get<std::string>();
  const bool has_modulus = j.contains("modulus");
  if (k == "zmod") {
    if (!has_modulus) throw ParseError("scalar: kind \"zmod\" requires \"modulus\"");
    const json& m = j["modulus"];
    if (!m.is_number_integer() || m.get<std::int64_t>() < 2) throw ParseError("scalar.modulus: expected an integer >= 2");
    try {
      return ScalarDomain::zmod(m.get<std::uint64_t>());
    } catch (const DomainError& e) {
      throw ParseError(std::string("scalar.modulus: ") + e.what());
    }
  }
  if (has_modulus) throw ParseError("scalar: \"modulus\" is only valid for kind \"zmod\"");
  if (k == "real") return ScalarDomain::real();
  if (k == "complex") return ScalarDomain::complex();
  if (k == "rational") return ScalarDomain::rational();
  throw ParseError("scalar.kind: unknown kind \"" + k + "\"");
}

json domain_to_json(const ScalarDomain& d) {
  json j = {{"kind", d.kind_tag()}};
  if (d.kind() == ScalarKind::zmod) j["modulus"] = d.modulus();
  return j;
}

json parse_json_text(std::string_view text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

WeightedGraph parse_graph(std::string_view text) { return graph_from_json(parse_json_text(text, "graph")); }

WeightedGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("graph: expected an object");
  const ScalarDomain domain = domain_from_json(require_field(j, "scalar", "graph"));
  const std::size_t n = require_index(require_field(j, "n", "graph"), "n");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& l = j["labels"];
    if (!l.is_array()) throw ParseError("labels: expected an array of strings");
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) throw ParseError("labels[" + std::to_string(k) + "]: expected a string");
      labels.push_back(l[k].get<std::string>());
    }
  }
  const json& edges = require_field(j, "edges", "graph");
  if (!edges.is_array()) throw ParseError("edges: expected an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    EdgeSpec s{require_index(require_field(e, "u", where), where + ".u"),
               require_index(require_field(e, "v", where), where + ".v"), std::nullopt, std::nullopt, std::nullopt};
    if (s.u == s.v) throw ParseError(where + ": self-loop at node " + std::to_string(s.u));
    if (e.contains("w")) s.w = scalar_from_json(e["w"], domain, where + ".w");
    if (e.contains("gamma_uv")) s.gamma_uv = scalar_from_json(e["gamma_uv"], domain, where + ".gamma_uv");
    if (e.contains("gamma_vu")) s.gamma_vu = scalar_from_json(e["gamma_vu"], domain, where + ".gamma_vu");
    specs.push_back(std::move(s));
  }
  return WeightedGraph::from_edges(domain, n, specs, std::move(labels));
}

json serialize_graph(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json entry = {{"u", e.u}, {"v", e.v}};
    if (g.edge_from_gamma(e.u, e.v)) {
      entry["gamma_uv"] = scalar_to_json(g.stored_gamma(e.u, e.v));
      entry["gamma_vu"] = scalar_to_json(g.stored_gamma(e.v, e.u));
    } else {
      entry["w"] = scalar_to_json(e.weight);
    }
    edges.push_back(std::move(entry));
  }
  json j = {{"scalar", domain_to_json(g.domain())}, {"n", g.node_count()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

NodeFunction node_function_from_json(const json& j, const ScalarDomain& domain, std::size_t n) {
  const json& values = require_field(j, "values", "node function");
  if (!values.is_array()) throw ParseError("values: expected an array");
  if (values.size() != n) {
    throw ParseError("values: has " + std::to_string(values.size()) + " entries, graph has " + std::to_string(n) +
                     " nodes");
  }
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_from_json(values[i], domain, "values[" + std::to_string(i) + "]"));
  return NodeFunction(domain, std::move(out));
}

json node_function_to_json(const NodeFunction& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(scalar_to_json(v));
  return {{"values", std::move(values)}};
}

EdgeFunction edge_function_from_json(const json& j, const WeightedGraph& g) {
  const json& values = require_field(j, "values", "edge function");
  if (!values.is_array()) throw ParseError("values: expected an array");
  EdgeFunction f(g.domain());
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::string where = "values[" + std::to_string(k) + "]";
    const auto i = require_index(require_field(values[k], "i", where), where + ".i");
    const auto jj = require_index(require_field(values[k], "j", where), where + ".j");
    if (i >= g.node_count() || jj >= g.node_count() || !g.adjacent(i, jj)) {
      throw ParseError(where + ": (" + std::to_string(i) + "," + std::to_string(jj) + ") is not an edge");
    }
    if (f.contains(i, jj)) throw ParseError(where + ": duplicate key");
    f.set(i, jj, scalar_from_json(require_field(values[k], "v", where), g.domain(), where + ".v"));
  }
  return f;
}

json edge_function_to_json(const EdgeFunction& f) {
  json values = json::array();
  for (const auto& [k, v] : f.values()) values.push_back({{"i", k.first}, {"j", k.second}, {"v", scalar_to_json(v)}});
  return {{"values", std::move(values)}};
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string canonical_dump(const json& j, int indent) {
  std::string out;
  dump_into(j, out, indent, 0);
  return out;
}

}  // namespace gfa
