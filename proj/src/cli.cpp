#include "gfa/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include "gfa/bialgebra.hpp"
#include "gfa/calculus.hpp"
#include "gfa/errors.hpp"
#include "gfa/fokker_planck.hpp"
#include "gfa/json_io.hpp"
#include "gfa/lie.hpp"
#include "gfa/parallel.hpp"
#include "gfa/report.hpp"
#include "gfa/ring_weights.hpp"
#include "gfa/schrodinger.hpp"

namespace gfa {

namespace {

// ---------------------------------------------------------------------------
// IO helpers

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

WeightedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

NodeFunction load_function(const std::string& path, const ScalarDomain& domain, std::size_t n) {
  const json j = parse_json_text(read_file(path), path);
  try {
    return node_function_from_json(j, domain, n);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json values_of(const NodeFunction& f) { return node_function_to_json(f)["values"]; }

json complex_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

json complex_vector_json(const ComplexVector& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

json real_vector_json(const std::vector<double>& v) { return json(v); }

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::pair<std::size_t, std::size_t> parse_edge(std::string text) {
  if (text.rfind("edge=", 0) == 0) text = text.substr(5);
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("edge must be written U,V");
  try {
    std::size_t used = 0;
    const auto u = std::stoul(text.substr(0, comma), &used);
    const auto rest = text.substr(comma + 1);
    const auto v = std::stoul(rest, &used);
    if (used != rest.size()) throw ParseError("edge must be written U,V");
    return {u, v};
  } catch (const std::logic_error&) {
    throw ParseError("edge must be written U,V");
  }
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw ParseError(what + ": not a number: " + text);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(what + ": not a number: " + text);
  }
}

std::set<std::pair<std::size_t, std::size_t>> parse_edge_list(const std::string& text) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    out.insert(parse_edge(item));
  }
  return out;
}

std::vector<WaveCoefficients> load_coefficients(const std::string& path, std::size_t n) {
  const json j = parse_json_text(read_file(path), path);
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array()) {
    throw ParseError(path + ": expected {\"coefficients\": [{\"A\": literal, \"B\": literal}, ...]}");
  }
  const auto& arr = j["coefficients"];
  if (arr.size() != n) throw ParseError(path + ": coefficients: expected " + std::to_string(n) + " entries");
  std::vector<WaveCoefficients> out;
  const auto dom = ScalarDomain::complex();
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = path + ": coefficients[" + std::to_string(k) + "]";
    if (!arr[k].is_object() || !arr[k].contains("A") || !arr[k].contains("B")) throw ParseError(where + ": needs A and B");
    out.push_back({scalar_from_json(arr[k]["A"], dom, where + ".A").to_complex(),
                   scalar_from_json(arr[k]["B"], dom, where + ".B").to_complex()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Command outcome

struct Outcome {
  Report report;
  std::optional<std::string> failed_assertion;
};

struct Common {
  bool pretty = false;
  std::optional<unsigned> threads;
  unsigned resolved_threads() const { return threads ? std::max(1u, *threads) : threads_from_environment(); }
};

// ---------------------------------------------------------------------------
// Commands

struct JacobiArgs {
  std::string graph;
  std::string mode = "full";
  bool assert_ok = false;
};

Outcome cmd_jacobi(const JacobiArgs& a, const Common& c) {
  const auto g = load_graph(a.graph);
  const JacobiMode mode = a.mode == "restricted" ? JacobiMode::restricted : JacobiMode::full;
  const auto rep = jacobi_admissibility(g, mode, c.resolved_threads());
  Outcome o{Report("jacobi"), std::nullopt};
  json violations = json::array();
  for (const auto& v : rep.violations) {
    violations.push_back({{"triple", v.triple}, {"jacobiator", values_of(v.jacobiator)}});
  }
  o.report.result() = {{"admissible", rep.admissible},
                       {"mode", to_string(rep.mode)},
                       {"convention", rep.convention},
                       {"triples_checked", rep.triples_checked},
                       {"violations", std::move(violations)},
                       {"jacobiator_convention", "[x,[y,z]] + [y,[z,x]] + [z,[x,y]]"}};
  if (mode == JacobiMode::restricted) o.report.warn("restricted mode excludes every triple containing a distance-2 pair");
  if (a.assert_ok && !rep.admissible) o.failed_assertion = "Jacobi identity fails on " + std::to_string(rep.violations.size()) + " triple(s)";
  return o;
}

struct BracketArgs {
  std::string graph, f, h, split;
};

Outcome cmd_bracket(const BracketArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  std::optional<NodeFunction> f, h;
  if (!a.f.empty() != !a.h.empty()) throw ParseError("--f and --h must be given together");
  if (!a.f.empty()) {
    f = load_function(a.f, g.domain(), g.node_count());
    h = load_function(a.h, g.domain(), g.node_count());
  }
  Outcome o{Report("bracket"), std::nullopt};
  json& r = o.report.result();
  json sc = json::array();
  const StructureConstants constants(g);
  for (const auto& [key, val] : constants.entries()) {
    sc.push_back({{"a", key.first}, {"b", key.second}, {"f_ab^a", scalar_to_json(val.first)}, {"f_ab^b", scalar_to_json(val.second)}});
  }
  r["structure_constants"] = std::move(sc);
  if (f) {
    const auto sum_form = bracket(g, *f, *h);
    const auto lap_form = bracket_laplacian_form(g, *f, *h);
    bool agree = true;
    for (std::size_t i = 0; i < sum_form.size(); ++i) {
      agree = agree && (g.domain().is_exact() ? sum_form[i] == lap_form[i] : approx_equal(sum_form[i], lap_form[i], 1e-12));
    }
    r["bracket"] = values_of(sum_form);
    r["laplacian_form"] = values_of(lap_form);
    r["forms_agree"] = agree;
  }
  if (!a.split.empty()) {
    const SplitBracket split(g, parse_edge_list(a.split));
    const auto jac = jacobi_admissibility(split.reweighted(), JacobiMode::full);
    json weights = json::array();
    for (const auto& e : split.reweighted().edges()) weights.push_back({{"u", e.u}, {"v", e.v}, {"w", scalar_to_json(e.weight)}});
    r["split"] = {{"weights", std::move(weights)}, {"jacobi_admissible", jac.admissible}};
    if (f) r["split"]["bracket"] = values_of(split(*f, *h));
  }
  return o;
}

struct LaplacianArgs {
  std::string graph, f, leibniz_f, leibniz_h;
};

Outcome cmd_laplacian(const LaplacianArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  std::optional<NodeFunction> f, lf, lh;
  if (!a.f.empty()) f = load_function(a.f, g.domain(), g.node_count());
  if (!a.leibniz_f.empty() != !a.leibniz_h.empty()) throw ParseError("--leibniz-f and --leibniz-h must be given together");
  if (!a.leibniz_f.empty()) {
    lf = load_function(a.leibniz_f, g.domain(), g.node_count());
    lh = load_function(a.leibniz_h, g.domain(), g.node_count());
  }
  Outcome o{Report("laplacian"), std::nullopt};
  json& r = o.report.result();
  const DenseMatrix L = laplacian(g);
  r["laplacian"] = matrix_to_json(L);
  const DenseMatrix ad1 = ad_matrix(g, NodeFunction::constant(g.domain().one(), g.node_count()));
  r["ad_one_equals_minus_laplacian"] = ad1 == -L;
  if (g.has_gamma() || g.edge_count() == 0) {
    const DenseMatrix dd = dstar_d_matrix(g);
    r["dstar_d"] = matrix_to_json(dd);
    r["factorization_max_abs_diff"] = max_abs_diff(dd, L);
    r["factorization_holds"] = g.domain().is_exact() ? dd == L : max_abs_diff(dd, L) <= 1e-12;
  } else {
    o.report.warn("graph has no directed weights on every edge; d and d* were not evaluated");
  }
  if (f) r["apply"] = values_of(laplacian_apply(g, *f));
  if (lf) {
    const EdgeFunction res = leibniz_defect_check(g, *lf, *lh);
    r["leibniz_residual"] = edge_function_to_json(res);
    r["leibniz_holds"] = res.is_zero();
  }
  return o;
}

Outcome cmd_killing(const std::string& path, const Common&) {
  const auto g = load_graph(path);
  const auto k = killing_form(g);
  Outcome o{Report("killing"), std::nullopt};
  o.report.result() = {{"killing", matrix_to_json(k.matrix)},
                       {"determinant", scalar_to_json(k.determinant)},
                       {"nondegenerate", k.nondegenerate}};
  o.report.emit_comparison("lie.killing-nondegenerate", k.nondegenerate, true, std::nullopt,
                           "the printed nondegeneracy claim conflicts with singular Killing matrices computed "
                           "for complete graphs; only the computed determinant is reported");
  return o;
}

Outcome cmd_center(const std::string& path, const Common&) {
  const auto g = load_graph(path);
  const auto basis = center(g);
  Outcome o{Report("center"), std::nullopt};
  json b = json::array();
  for (const auto& v : basis) b.push_back(values_of(v));
  const auto adj = adjacency_list(g);
  bool connected = true;
  if (g.node_count() > 0) {
    for (const auto& d : bfs_distances(adj, 0))
      if (!d) connected = false;
  }
  o.report.result() = {{"dimension", basis.size()}, {"basis", std::move(b)}, {"trivial", basis.empty()}, {"connected", connected}};
  if (!connected) o.report.warn("graph is disconnected; the trivial-center argument assumes connectivity");
  return o;
}

struct FunctionArgs {
  std::string graph, h;
};

Outcome cmd_cobracket(const FunctionArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  const auto h = load_function(a.h, g.domain(), g.node_count());
  const EdgeFunction cb = cobracket(g, h);
  bool antisymmetric = true;
  for (const auto& [k, v] : cb.values())
    if (!(cb.get(k.second, k.first) == -v)) antisymmetric = false;
  Outcome o{Report("cobracket"), std::nullopt};
  o.report.result() = {{"cobracket", edge_function_to_json(cb)}, {"antisymmetric", antisymmetric}};
  return o;
}

struct YbeArgs {
  std::string graph;
  std::optional<std::size_t> a, b;
  bool assert_ok = false;
};

Outcome cmd_ybe(const YbeArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  if (a.a.has_value() != a.b.has_value()) throw ParseError("--a and --b must be given together");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (a.a) {
    pairs.emplace_back(*a.a, *a.b);
  } else {
    for (std::size_t i = 0; i < g.node_count(); ++i)
      for (std::size_t j = 0; j < g.node_count(); ++j)
        if (i != j) pairs.emplace_back(i, j);
  }
  Outcome o{Report("ybe"), std::nullopt};
  json out = json::array();
  bool all = true;
  double worst = 0.0;
  for (const auto& [x, y] : pairs) {
    const auto rep = ybe_check(g, x, y);
    json nonzero = json::array();
    const std::size_t n = rep.sum.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!rep.sum.at(i, j, k).is_zero()) nonzero.push_back({{"index", {i, j, k}}, {"value", scalar_to_json(rep.sum.at(i, j, k))}});
    out.push_back({{"a", x}, {"b", y}, {"max_magnitude", rep.max_magnitude}, {"vanishes", rep.vanishes},
                   {"nonzero_entries", std::move(nonzero)}});
    all = all && rep.vanishes;
    worst = std::max(worst, rep.max_magnitude);
  }
  o.report.result() = {{"pairs", std::move(out)}, {"all_vanish", all}, {"max_magnitude", worst}};
  if (a.assert_ok && !all) o.failed_assertion = "classical Yang-Baxter residual is nonzero";
  return o;
}

struct ManinArgs {
  std::string graph, x, xi;
};

Outcome cmd_manin(const ManinArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  const auto x = load_function(a.x, g.domain(), g.node_count());
  const DualNodeFunction xi{load_function(a.xi, g.domain(), g.node_count())};
  const auto co = coadjoint_actions(g, x, xi);
  const auto mb = manin_bracket(g, x, xi);
  Outcome o{Report("manin"), std::nullopt};
  o.report.result() = {{"ad_star_x_xi", values_of(co.ad_x_xi.coeffs)},
                       {"ad_star_xi_x", values_of(co.ad_xi_x)},
                       {"g_component", values_of(mb.g_part)},
                       {"dual_component", values_of(mb.dual_part.coeffs)}};
  return o;
}

struct ZdgArgs {
  std::uint64_t n = 0;
  bool no_edges = false;
};

Outcome cmd_zdg(const ZdgArgs& a, const Common&) {
  const auto z = zero_divisor_graph(a.n, !a.no_edges);
  const auto q = modulus_qualifies(a.n);
  Outcome o{Report("zdg"), std::nullopt};
  json factors = json::array();
  for (const auto& [p, e] : q.factorization) factors.push_back({p, e});
  json edges = json::array();
  for (const auto& [x, y] : z.edges) edges.push_back({x, y});
  o.report.result() = {{"modulus", z.modulus},
                       {"vertices", z.vertices},
                       {"vertex_count", z.vertices.size()},
                       {"edges", std::move(edges)},
                       {"edges_listed", !a.no_edges},
                       {"girth", optional_size(z.girth)},
                       {"all_non_nilpotent", z.all_non_nilpotent},
                       {"qualifies", q.qualifies},
                       {"distinct_primes", q.c},
                       {"factorization", std::move(factors)}};
  return o;
}

struct ZdgWeightsArgs {
  std::string graph;
  std::uint64_t modulus = 0;
  std::size_t limit = 100;
  bool include_nilpotent = false;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
};

Outcome cmd_zdg_weights(const ZdgWeightsArgs& a, const Common& c) {
  const auto g = load_graph(a.graph);
  WeighingResult res;
  if (a.sample) {
    res = weighing_sample(g, a.modulus, *a.sample, a.seed, a.include_nilpotent);
  } else {
    res = weighing_search(g, a.modulus, {a.limit, a.include_nilpotent, c.resolved_threads()});
  }
  Outcome o{Report("zdg-weights"), std::nullopt};
  json sols = json::array();
  for (const auto& s : res.solutions) {
    json assignment = json::array();
    for (const auto& [e, r] : s.assignment) assignment.push_back({{"u", e.first}, {"v", e.second}, {"w", r}});
    sols.push_back({{"modulus", s.modulus}, {"assignment", std::move(assignment)}});
  }
  o.report.result() = {{"modulus", a.modulus},
                       {"candidates", res.candidates},
                       {"solutions", std::move(sols)},
                       {"count", res.solutions.size()},
                       {"truncated", res.truncated},
                       {"method", a.sample ? "sample" : "exhaustive"},
                       {"conforming", !a.include_nilpotent}};
  if (a.include_nilpotent) o.report.warn("nilpotent candidates included; solutions are non-conforming");
  if (res.truncated) o.report.warn("solution list truncated at --limit " + std::to_string(a.limit));
  return o;
}

struct SchrArgs {
  std::string graph;
  double hbar = 1.0, mass = 1.0;
  std::optional<double> t;
  std::string psi0, coefficients;
  bool modes = false;
  std::optional<std::size_t> boundary;
};

Outcome cmd_schrodinger(const SchrArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  std::optional<NodeFunction> psi0_raw;
  if (!a.psi0.empty()) psi0_raw = load_function(a.psi0, ScalarDomain::complex(), g.node_count());
  std::optional<std::vector<WaveCoefficients>> coeffs;
  if (!a.coefficients.empty()) coeffs = load_coefficients(a.coefficients, g.node_count());

  const QuantumParams p(g, a.hbar, a.mass);
  const auto sol = spectral_solve(p);
  const auto formal = formal_energies(p);
  Outcome o{Report("schrodinger"), std::nullopt};
  json& r = o.report.result();
  r["energies"] = real_vector_json(sol.energies);
  r["formal_energies"] = real_vector_json(formal);
  r["hamiltonian"] = matrix_to_json(hamiltonian(p));
  if (a.modes) {
    json m = json::array();
    for (Eigen::Index k = 0; k < sol.modes.cols(); ++k) {
      std::vector<double> col(sol.modes.rows());
      for (Eigen::Index i = 0; i < sol.modes.rows(); ++i) col[i] = sol.modes(i, k);
      m.push_back(col);
    }
    r["modes"] = std::move(m);
  }
  json waves = json::array();
  std::optional<PlaneWave> first_wave;
  for (std::size_t b = 0; b < p.node_count(); ++b) {
    if (p.magnitudes().degree(b) == 0) continue;
    const auto w = plane_wave(p, b);
    const auto fa = formal_laplacian_action(p, b);
    if (!first_wave) first_wave = w;
    waves.push_back({{"anchor", b},
                     {"wavevector", w.wavevector},
                     {"full_norm_sq", w.full_norm_sq},
                     {"neighbor_norm_sq", w.neighbor_norm_sq},
                     {"formal_action", complex_vector_json(fa.formal)},
                     {"matrix_action", complex_vector_json(fa.matrix_action)},
                     {"formal_residual_norm", fa.residual_norm}});
  }
  r["plane_waves"] = std::move(waves);
  const auto pol = polarization_condition(p);
  r["polarization"] = {{"constant", pol.constant}, {"q", pol.q}};

  if (psi0_raw) {
    ComplexVector psi0;
    for (const auto& v : psi0_raw->values()) psi0.push_back(v.to_complex());
    const double t = a.t.value_or(0.0);
    const auto psi_t = evolve(sol, psi0, t);
    r["t"] = t;
    r["psi_t"] = complex_vector_json(psi_t);
    r["norm_t"] = norm(psi_t);
  } else if (a.t) {
    o.report.warn("--t given without --psi0; no evolution computed");
  }
  if (a.boundary) {
    json bnd = json::object();
    if (coeffs) {
      const auto d = dirichlet_check(p, *coeffs, *a.boundary);
      bnd["dirichlet"] = {{"family", to_string(d.family)}, {"details", d.details}};
    }
    std::optional<ComplexVector> psi;
    if (psi0_raw) {
      psi.emplace();
      for (const auto& v : psi0_raw->values()) psi->push_back(v.to_complex());
    } else if (coeffs) {
      psi = plane_wave_superposition(p, *coeffs, a.t.value_or(0.0));
    }
    if (psi) {
      const auto nr = neumann_relation(p, *psi, *a.boundary);
      bnd["neumann"] = {{"determined", nr.determined},
                        {"value", complex_json(nr.value)},
                        {"residual", complex_json(nr.residual)},
                        {"empty_sum", nr.empty_sum}};
    }
    if (bnd.empty()) o.report.warn("--check-boundary needs --coefficients or --psi0");
    bnd["node"] = *a.boundary;
    r["boundary"] = std::move(bnd);
  }

  // Printed-claim comparisons.
  bool uniform_formal = !formal.empty() && p.magnitudes().edge_count() > 0;
  for (double e : formal) uniform_formal = uniform_formal && std::abs(e - formal.front()) <= 1e-12 * std::max(1.0, std::abs(e));
  if (uniform_formal && !sol.energies.empty()) {
    o.report.emit_comparison("schr.energy", sol.energies.back(), formal.front(), 1e-9,
                             "spectral energy of (hbar^2/2m) L_u^2 differs from the formal plane-wave energy; the "
                             "first-order rule for f_a does not hold for the matrix Laplacian");
  } else if (!formal.empty()) {
    o.report.warn("formal plane-wave energies differ between nodes; no single energy comparison emitted");
  }
  if (first_wave) {
    o.report.emit_comparison("schr.plane-wave-norm", first_wave->full_norm_sq, 1.0, std::nullopt,
                             "the unit norm holds for the neighbour-restricted sum (" +
                                 std::to_string(first_wave->neighbor_norm_sq) +
                                 "), not for the sum over all nodes; both are reported");
  }
  return o;
}

struct FpeArgs {
  std::string graph, drift, diffusion;
  std::string delta2 = "1/8";
  std::vector<std::string> scan;
  std::optional<std::size_t> ansatz_i, ansatz_k;
  double sigma = 1.0, mu = 0.0;
};

Outcome cmd_fpe(const FpeArgs& a, const Common& c) {
  const auto g = load_graph(a.graph);
  const auto drift = load_function(a.drift, g.domain(), g.node_count());
  const auto diffusion = load_function(a.diffusion, g.domain(), g.node_count());
  const Delta2Coefficient c2 = a.delta2 == "1/4" ? Delta2Coefficient::one_quarter : Delta2Coefficient::one_eighth;
  const auto coeffs = FpCoefficients::positive(drift, diffusion);
  const auto rep = stationarity_and_stability(g, coeffs, c2);

  Outcome o{Report("fpe"), std::nullopt};
  json& r = o.report.result();
  json eig = json::array();
  for (const auto& e : rep.eigenvalues) eig.push_back(complex_json(e));
  r = {{"matrix", matrix_to_json(rep.matrix)},
       {"det", scalar_to_json(rep.det)},
       {"trace_b", scalar_to_json(rep.trace_b)},
       {"sym2_c", scalar_to_json(rep.sym2_c)},
       {"paper_b", rep.paper_b ? scalar_to_json(*rep.paper_b) : json(nullptr)},
       {"paper_c", rep.paper_c ? scalar_to_json(*rep.paper_c) : json(nullptr)},
       {"eigenvalues", std::move(eig)},
       {"stationary", rep.stationary},
       {"stable", rep.stable},
       {"discriminant_ok", rep.discriminant_ok},
       {"marginal_degenerate", rep.marginal_degenerate},
       {"delta2_coefficient", to_string(c2)},
       {"notes", rep.notes}};
  const double tol = g.domain().is_exact() ? 0.0 : 1e-9;
  if (rep.paper_b) o.report.emit_comparison("fpe.b", scalar_to_json(rep.trace_b), scalar_to_json(*rep.paper_b), tol);
  if (rep.paper_c) {
    o.report.emit_comparison("fpe.c", scalar_to_json(rep.sym2_c), scalar_to_json(*rep.paper_c), tol);
    const auto f = triangle_formulas(g, drift, diffusion);
    o.report.emit_comparison("fpe.c-as-printed", scalar_to_json(rep.sym2_c), scalar_to_json(f.c_as_printed), tol,
                             "the printed c repeats a3*b1 in the 3/16 group; reading it as a3*b2 matches sym2(M)");
  }

  // Constant-weight triangle with uniform coefficients.
  if (g.node_count() == 3 && g.edge_count() == 3 && c2 == Delta2Coefficient::one_eighth) {
    const auto edges = g.edges();
    auto uniform = [](const NodeFunction& f) {
      for (std::size_t i = 1; i < f.size(); ++i)
        if (!(f[i] == f[0])) return false;
      return true;
    };
    if (edges[0].weight == edges[1].weight && edges[1].weight == edges[2].weight && uniform(drift) && uniform(diffusion)) {
      const double w = edges[0].weight.to_double();
      const auto cw = constant_weight_analysis(w, drift[0].to_double(), diffusion[0].to_double(), c2);
      r["constant_weight"] = {{"mu", cw.mu},
                              {"stable", cw.stable},
                              {"threshold", cw.threshold},
                              {"stable_when", cw.stable_above ? "a > threshold" : "a < threshold"},
                              {"paper_threshold", cw.paper_threshold}};
      if (w < 0) {
        o.report.emit_comparison("fpe.neg-w-threshold", cw.threshold, cw.paper_threshold, std::nullopt,
                                 "the printed bound a > -(63/40) b w conflicts with the eigenvalue threshold "
                                 "a < -(3/4) b w of the printed matrix");
      } else {
        o.report.emit_comparison("fpe.discriminant", rep.discriminant_ok, true, std::nullopt,
                                 "b^2 > 4c is claimed to hold automatically, but equality holds for constant "
                                 "weights (marginal-degenerate)");
      }
    }
  }

  if (!a.scan.empty()) {
    if (a.scan.size() != 4) throw ParseError("--scan expects edge=U,V lo hi steps");
    const auto edge = parse_edge(a.scan[0]);
    const double lo = parse_double(a.scan[1], "scan lo"), hi = parse_double(a.scan[2], "scan hi");
    const double steps = parse_double(a.scan[3], "scan steps");
    if (steps < 2 || steps != std::floor(steps)) throw ParseError("scan steps must be an integer >= 2");
    const auto s = weight_scan(g, coeffs, edge, lo, hi, static_cast<std::size_t>(steps), c2, c.resolved_threads());
    json samples = json::array();
    for (const auto& [x, d] : s.samples) samples.push_back({x, d});
    r["scan"] = {{"edge", {edge.first, edge.second}},
                 {"samples", std::move(samples)},
                 {"roots", s.roots},
                 {"identically_singular", s.identically_singular},
                 {"stability_boundaries", s.stability_boundaries}};
    if (s.identically_singular) {
      o.report.warn("det M vanishes at every sampled weight (the columns of M sum to zero), so it has no isolated roots");
    }
  }

  if (a.ansatz_i) {
    const auto ans = gaussian_ansatz(g, {a.sigma, a.mu}, *a.ansatz_i, a.ansatz_k);
    r["ansatz"] = {{"i", *a.ansatz_i},
                   {"k", a.ansatz_k ? json(*a.ansatz_k) : json(nullptr)},
                   {"normalization", ans.normalization},
                   {"values", ans.values}};
  }
  return o;
}

Outcome cmd_linegraph(const std::string& path, const Common&) {
  const auto g = load_graph(path);
  const auto lg = line_graph(g);
  Outcome o{Report("linegraph"), std::nullopt};
  json origin = json::array();
  for (const auto& [u, v] : lg.origin) origin.push_back({u, v});
  json vanishing = json::array();
  for (const auto& [u, v] : lg.vanishing) vanishing.push_back({u, v});
  o.report.result() = {{"graph", serialize_graph(lg.graph)}, {"origin", std::move(origin)}, {"vanishing", std::move(vanishing)}};
  if (!lg.vanishing.empty()) o.report.warn("some adjacent edge pairs have zero harmonic weight and are not joined");
  return o;
}

struct IndepArgs {
  std::string graph;
  bool greedy = false;
};

Outcome cmd_indepset(const IndepArgs& a, const Common&) {
  const auto g = load_graph(a.graph);
  Outcome o{Report("indepset"), std::nullopt};
  json r = json::object();
  json rank = json::object();
  for (auto v : {IndependenceVariant::independent, IndependenceVariant::two_packing}) {
    const auto set = a.greedy ? greedy_independent_set(g, v) : max_independent_set(g, v);
    r[to_string(v)] = set;
    rank[to_string(v)] = set.size();
  }
  r["cartan_rank"] = std::move(rank);
  r["exact"] = !a.greedy;
  const auto st = triangles_girth_distance(g);
  r["girth"] = optional_size(st.girth);
  r["triangles"] = st.triangles;
  o.report.result() = std::move(r);
  o.report.warn("it is ambiguous whether plain independence or two-packing (no common neighbours) is meant; both are reported");
  if (a.greedy) o.report.warn("greedy sets are not guaranteed maximum");
  return o;
}

// ---------------------------------------------------------------------------

void emit_error(std::ostream& err, const char* kind, const std::string& message, int code) {
  err << canonical_dump(json{{"error", kind}, {"message", message}, {"exit_code", code}}) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie-algebraic toolkit for functions on weighted graphs", "gfa"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Common common;
  app.add_flag("--pretty", common.pretty, "Indented JSON output");
  app.add_option("--threads", common.threads, "Worker threads (default: GFA_THREADS or 1)")->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  JacobiArgs jacobi;
  auto* s_jacobi = sub("jacobi", "Jacobi admissibility of the graph bracket");
  s_jacobi->add_option("graph", jacobi.graph)->required();
  s_jacobi->add_option("--mode", jacobi.mode)->check(CLI::IsMember({"full", "restricted"}));
  s_jacobi->add_flag("--assert", jacobi.assert_ok, "Exit 4 when the check fails");
  s_jacobi->callback([&] { action = [&] { return cmd_jacobi(jacobi, common); }; });

  BracketArgs br;
  auto* s_bracket = sub("bracket", "Bracket, structure constants and split brackets");
  s_bracket->add_option("graph", br.graph)->required();
  s_bracket->add_option("--f", br.f, "Node-function JSON");
  s_bracket->add_option("--h", br.h, "Node-function JSON");
  s_bracket->add_option("--split", br.split, "Edge set A as U,V;U,V;...");
  s_bracket->callback([&] { action = [&] { return cmd_bracket(br, common); }; });

  LaplacianArgs lap;
  auto* s_lap = sub("laplacian", "Laplacian, d*d factorization and Leibniz defect");
  s_lap->add_option("graph", lap.graph)->required();
  s_lap->add_option("--f", lap.f, "Node-function JSON to apply the Laplacian to");
  s_lap->add_option("--leibniz-f", lap.leibniz_f);
  s_lap->add_option("--leibniz-h", lap.leibniz_h);
  s_lap->callback([&] { action = [&] { return cmd_laplacian(lap, common); }; });

  std::string killing_graph;
  auto* s_killing = sub("killing", "Killing form and its determinant");
  s_killing->add_option("graph", killing_graph)->required();
  s_killing->callback([&] { action = [&] { return cmd_killing(killing_graph, common); }; });

  std::string center_graph;
  auto* s_center = sub("center", "Basis of the center");
  s_center->add_option("graph", center_graph)->required();
  s_center->callback([&] { action = [&] { return cmd_center(center_graph, common); }; });

  FunctionArgs cob;
  auto* s_cob = sub("cobracket", "Co-bracket of a node function");
  s_cob->add_option("graph", cob.graph)->required();
  s_cob->add_option("--h", cob.h, "Node-function JSON")->required();
  s_cob->callback([&] { action = [&] { return cmd_cobracket(cob, common); }; });

  YbeArgs ybe;
  auto* s_ybe = sub("ybe", "Classical Yang-Baxter check (all ordered pairs when --a/--b are omitted)");
  s_ybe->add_option("graph", ybe.graph)->required();
  s_ybe->add_option("--a", ybe.a);
  s_ybe->add_option("--b", ybe.b);
  s_ybe->add_flag("--assert", ybe.assert_ok, "Exit 4 when the residual is nonzero");
  s_ybe->callback([&] { action = [&] { return cmd_ybe(ybe, common); }; });

  ManinArgs manin;
  auto* s_manin = sub("manin", "Co-adjoint actions and the Manin-double bracket");
  s_manin->add_option("graph", manin.graph)->required();
  s_manin->add_option("--x", manin.x)->required();
  s_manin->add_option("--xi", manin.xi)->required();
  s_manin->callback([&] { action = [&] { return cmd_manin(manin, common); }; });

  ZdgArgs zdg;
  auto* s_zdg = sub("zdg", "Zero-divisor graph of Z_n");
  s_zdg->add_option("n", zdg.n)->required();
  s_zdg->add_flag("--no-edges", zdg.no_edges, "Omit the edge list");
  s_zdg->callback([&] { action = [&] { return cmd_zdg(zdg, common); }; });

  ZdgWeightsArgs zw;
  auto* s_zw = sub("zdg-weights", "Jacobi-admissible zero-divisor weighings of a graph");
  s_zw->add_option("graph", zw.graph)->required();
  s_zw->add_option("--modulus", zw.modulus)->required();
  s_zw->add_option("--limit", zw.limit, "Maximum number of solutions")->capture_default_str();
  s_zw->add_flag("--include-nilpotent", zw.include_nilpotent, "Also try nilpotent residues (non-conforming)");
  s_zw->add_option("--sample", zw.sample, "Random sampling with this many draws instead of exhaustive search");
  s_zw->add_option("--seed", zw.seed)->capture_default_str();
  s_zw->callback([&] { action = [&] { return cmd_zdg_weights(zw, common); }; });

  SchrArgs schr;
  auto* s_schr = sub("schrodinger", "Free-particle spectrum, plane waves and evolution");
  s_schr->alias("schr");
  s_schr->add_option("graph", schr.graph)->required();
  s_schr->add_option("--hbar", schr.hbar)->capture_default_str();
  s_schr->add_option("--mass", schr.mass)->capture_default_str();
  s_schr->add_option("--t", schr.t);
  s_schr->add_option("--psi0", schr.psi0, "Node-function JSON with complex literals");
  s_schr->add_option("--coefficients", schr.coefficients, "Plane-wave coefficients JSON");
  s_schr->add_flag("--modes", schr.modes, "Include eigenvectors");
  s_schr->add_option("--check-boundary", schr.boundary, "Node for the boundary checks");
  s_schr->callback([&] { action = [&] { return cmd_schrodinger(schr, common); }; });

  FpeArgs fpe;
  auto* s_fpe = sub("fpe", "Fokker-Planck matrix, stationarity and stability");
  s_fpe->add_option("graph", fpe.graph)->required();
  s_fpe->add_option("--drift", fpe.drift)->required();
  s_fpe->add_option("--diffusion", fpe.diffusion)->required();
  s_fpe->add_option("--delta2-coeff", fpe.delta2)->check(CLI::IsMember({"1/8", "1/4"}))->capture_default_str();
  s_fpe->add_option("--scan", fpe.scan, "edge=U,V lo hi steps")->expected(4);
  s_fpe->add_option("--ansatz", fpe.ansatz_i, "Anchor node i of the Gaussian ansatz");
  s_fpe->add_option("--ansatz-k", fpe.ansatz_k, "Second node k of the two-point ansatz");
  s_fpe->add_option("--sigma", fpe.sigma)->capture_default_str();
  s_fpe->add_option("--mu", fpe.mu)->capture_default_str();
  s_fpe->callback([&] { action = [&] { return cmd_fpe(fpe, common); }; });

  std::string lg_graph;
  auto* s_lg = sub("linegraph", "Line graph with harmonic edge weights");
  s_lg->add_option("graph", lg_graph)->required();
  s_lg->callback([&] { action = [&] { return cmd_linegraph(lg_graph, common); }; });

  IndepArgs ind;
  auto* s_ind = sub("indepset", "Maximum independent set and two-packing (Cartan rank)");
  s_ind->add_option("graph", ind.graph)->required();
  s_ind->add_flag("--greedy", ind.greedy, "Greedy heuristic instead of exact search");
  s_ind->callback([&] { action = [&] { return cmd_indepset(ind, common); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "parse", e.what(), kExitParse);
    return kExitParse;
  }

  try {
    Outcome o = action();
    out << canonical_dump(o.report.to_json(), common.pretty ? 2 : -1) << '\n';
    if (o.failed_assertion) {
      emit_error(err, "assertion", *o.failed_assertion, kExitAssertion);
      return kExitAssertion;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    emit_error(err, "parse", e.what(), kExitParse);
    return kExitParse;
  } catch (const ContractError& e) {
    emit_error(err, "contract", e.what(), kExitParse);
    return kExitParse;
  } catch (const DomainError& e) {
    emit_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const SizeError& e) {
    emit_error(err, "size", e.what(), kExitSize);
    return kExitSize;
  } catch (const std::exception& e) {
    emit_error(err, "internal", e.what(), kExitInternal);
    return kExitInternal;
  }
}

}  // namespace gfa
