// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "../support.hpp"
#include "gfa/bialgebra.hpp"
#include "gfa/calculus.hpp"
#include "gfa/cli.hpp"
#include "gfa/errors.hpp"
#include "gfa/fokker_planck.hpp"
#include "gfa/json_io.hpp"
#include "gfa/lie.hpp"
#include "gfa/ring_weights.hpp"
#include "gfa/schrodinger.hpp"

using namespace gfa;
using namespace gfa_test;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string name) : id_(id), name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  bool report() const {
    const bool ok = failures_.empty() && checks_ > 0;
    std::cout << (ok ? "PASS " : "FAIL ") << id_ << " " << name_ << " (" << checks_ << " checks";
    if (!failures_.empty()) std::cout << ", " << failures_.size() << " failed; first: " << failures_.front();
    std::cout << ")\n";
    return ok;
  }

 private:
  int id_;
  std::string name_;
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

// Runs body and turns an escaped exception into a failure.
template <class Fn>
void guarded(Criterion& c, Fn&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    c.expect(false, std::string("unexpected exception: ") + e.what());
  }
}

std::vector<WeightedGraph> test_graphs() {
  std::vector<WeightedGraph> gs = {complete_graph(2, q(3, 2)), complete_graph(3, q(1)), complete_graph(4, q(2)),
                                   complete_graph(5, q(-1, 3)), path_graph(3, q(1)), path_graph(5, q(2, 3)),
                                   cycle_graph(4, q(1)), cycle_graph(6, q(5)), z30_triangle(),
                                   graph_from_weights(ScalarDomain::rational(), 4,
                                                      {{0, 1, q(1)}, {0, 2, q(2)}, {0, 3, q(3)}, {1, 2, q(1, 3)}})};
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 8; ++k) gs.push_back(random_rational_graph(rng, 3 + k % 5, 0.6, false));
  return gs;
}

NodeFunction random_in(std::mt19937_64& rng, const WeightedGraph& g) {
  if (g.domain().kind() == ScalarKind::rational) return random_function(rng, g.node_count());
  std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(g.domain().modulus()) - 1);
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < g.node_count(); ++i) v.push_back(g.domain().from_int(d(rng)));
  return NodeFunction(g.domain(), v);
}

WeightedGraph triangle(const Scalar& w12, const Scalar& w13, const Scalar& w23) {
  return graph_from_weights(w12.domain(), 3, {{0, 1, w12}, {0, 2, w13}, {1, 2, w23}});
}

json run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  if (run(args, out, err) != 0) throw std::runtime_error("gfa failed: " + err.str());
  return json::parse(out.str());
}

std::optional<json> find_comparison(const json& report, const std::string& label) {
  for (const auto& c : report["comparisons"])
    if (c["label"] == label) return std::optional<json>(std::in_place, c);
  return std::nullopt;
}

struct Scratch {
  std::filesystem::path dir;
  Scratch() : dir(std::filesystem::temp_directory_path() / ("gfa_acceptance_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(dir);
  }
  ~Scratch() { std::filesystem::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
};

// ---------------------------------------------------------------------------

void laplacian_factorization(Criterion& c) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const auto g = random_rational_graph(rng, 2 + k % 9, 0.5, true);
    c.expect(dstar_d_matrix(g) == laplacian(g), "rational graph " + std::to_string(k));
    const auto gr = random_real_graph(rng, 2 + k % 9, 0.5, true);
    c.expect(max_abs_diff(dstar_d_matrix(gr), laplacian(gr)) <= 1e-12, "real graph " + std::to_string(k));
  }
}

void leibniz_defect(Criterion& c) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 8;
    const auto g = random_rational_graph(rng, n, 0.6, true);
    const auto f = random_function(rng, n), h = random_function(rng, n);
    c.expect(leibniz_defect_check(g, f, h).is_zero(), "triple " + std::to_string(k));
  }
}

void bracket_identities(Criterion& c) {
  std::mt19937_64 rng(3);
  for (const auto& g : test_graphs()) {
    const std::size_t n = g.node_count();
    const auto s = g.domain().from_int(2), t = g.domain().from_int(-3);
    for (int k = 0; k < 10; ++k) {
      const auto f = random_in(rng, g), h = random_in(rng, g), p = random_in(rng, g);
      c.expect(bracket(g, f, h) == -bracket(g, h, f), "antisymmetry");
      c.expect(bracket(g, f.scaled(s) + p.scaled(t), h) == bracket(g, f, h).scaled(s) + bracket(g, p, h).scaled(t),
               "bilinearity");
      c.expect(bracket(g, f, h) == bracket_laplacian_form(g, f, h), "sum form vs Laplacian form");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ea = base_function(g, a), eb = base_function(g, b);
        c.expect(bracket(g, ea, eb) == (ea - eb).scaled(g.weight(a, b)), "base bracket");
      }
    c.expect(ad_matrix(g, NodeFunction::constant(g.domain().one(), n)) == -laplacian(g), "ad_1 = -Delta");
  }
}

void jacobi_suite(Criterion& c) {
  for (std::size_t n = 3; n <= 6; ++n) {
    c.expect(jacobi_admissibility(complete_graph(n, q(1)), JacobiMode::full).admissible, "K_n rational");
    c.expect(jacobi_admissibility(complete_graph(n, r(1.0)), JacobiMode::full).admissible, "K_n real");
  }
  const auto p3 = jacobi_admissibility(path_graph(3, q(1)), JacobiMode::full);
  c.expect(!p3.admissible && p3.violations.size() == 1, "P3 fails");
  if (!p3.violations.empty()) c.expect(p3.violations[0].jacobiator == rational_function({1, 0, -1}), "P3 Jacobiator (1,0,-1)");
  c.expect(jacobi_admissibility(z30_triangle(), JacobiMode::full).admissible, "Z30 triangle");
  for (const auto& g : test_graphs()) {
    const std::size_t n = g.node_count();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || b == d || a == d) continue;
          c.expect(jacobiator(g, a, b, d) ==
                       jacobiator_brute_force(g, base_function(g, a), base_function(g, b), base_function(g, d)),
                   "closed form vs brute force");
        }
  }
}

void second_order_leibniz(Criterion& c) {
  std::mt19937_64 rng(5);
  std::size_t graphs = 0;
  for (const auto& g : test_graphs()) {
    if (!jacobi_admissibility(g, JacobiMode::full).admissible) continue;
    ++graphs;
    for (int k = 0; k < 50; ++k) {
      const auto f = random_in(rng, g), p = random_in(rng, g), h = random_in(rng, g);
      c.expect(second_order_leibniz_check(g, f, p, h).is_zero(), "second-order residual");
    }
    const auto L = laplacian(g);
    const auto ad1 = ad_matrix(g, NodeFunction::constant(g.domain().one(), g.node_count()));
    const auto h = random_in(rng, g);
    c.expect((ad1 * ad1).apply(h.values()) == (L * L).apply(h.values()), "ad_1^2 g = Delta^2 g");
  }
  c.expect(graphs >= 5, "enough admissible graphs");
}

void killing_pins(Criterion& c) {
  const auto w = q(7, 3);
  const auto k2 = killing_form(complete_graph(2, w));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) c.expect(k2.matrix(i, j) == w * w, "K2 entry");
  c.expect(k2.determinant == q(0), "K2 det 0");
  const auto k3 = killing_form(complete_graph(3, q(1)));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c.expect(k3.matrix(i, j) == q(2), "K3 entry");
  c.expect(k3.determinant == q(0), "K3 det 0");

  Scratch s;
  const auto path = s.write("k3.json", serialize_graph(complete_graph(3, q(1))).dump());
  const auto rep = run_in_process({"killing", path});
  const auto cmp = find_comparison(rep, "lie.killing-nondegenerate");
  c.expect(cmp && (*cmp)["agrees"].is_null(), "nondegeneracy comparison is null");
  c.expect(!rep["warnings"].empty(), "warning emitted");
}

void bialgebra(Criterion& c) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto g = random_rational_graph(rng, n, 0.6, false);
    const auto f = random_function(rng, n), p = random_function(rng, n), h = random_function(rng, n);
    c.expect(pairing_duality_check(g, f, p, h) == q(0), "duality pairing");
  }
  for (const auto& g : {complete_graph(3, q(1)), path_graph(3, q(1)), z30_triangle()})
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) c.expect(ybe_check(g, a, b).sum.is_zero(), "CYBE residual");
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto g = random_rational_graph(rng, n, 0.6, false);
    const DualNodeFunction xi{random_function(rng, n)};
    const auto co = coadjoint_actions(g, NodeFunction::constant(q(1), n), xi);
    c.expect(co.ad_x_xi.coeffs == laplacian_apply(g, xi.coeffs), "ad*_1 xi = Delta xi");
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 2 + k % 6;
    const auto g = random_rational_graph(rng, n, 0.6, false);
    const auto f = random_function(rng, n), p = random_function(rng, n);
    c.expect(bracket_from_cobrackets(g, f, p) == bracket(g, f, p), "bracket from cobrackets");
  }
}

void zero_divisors(Criterion& c) {
  const auto z = zero_divisor_graph(30);
  c.expect(z.vertices.size() == 21, "21 vertices");
  c.expect(z.girth == 3, "girth 3");
  c.expect(z.all_non_nilpotent, "all non-nilpotent");
  std::uint64_t n = 2;
  while (!modulus_qualifies(n).qualifies) ++n;
  c.expect(n == 30, "smallest modulus 30");
  const auto k3 = complete_graph(3, q(1));
  const auto res = weighing_search(k3, 30);
  const std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> target = {{{0, 1}, 6}, {{0, 2}, 10}, {{1, 2}, 15}};
  bool found = false;
  for (const auto& s : res.solutions) {
    found = found || s.assignment == target;
    c.expect(jacobi_admissibility(apply_weighing(k3, s), JacobiMode::full).admissible, "solution re-verifies");
  }
  c.expect(found, "(6,10,15) found");
}

void schrodinger(Criterion& c) {
  const QuantumParams p(complete_graph(3, r(1.0)), 1.0, 1.0);
  const auto sol = spectral_solve(p);
  const std::vector<double> expected = {0.0, 4.5, 4.5};
  for (std::size_t i = 0; i < 3; ++i) c.expect(std::abs(sol.energies[i] - expected[i]) <= 1e-10, "K3 energy");
  for (double e : formal_energies(p)) c.expect(std::abs(e - 2.0) <= 1e-12, "formal energy 2");
  const std::vector<std::vector<double>> kv = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  for (std::size_t a = 0; a < 3; ++a) {
    const auto w = plane_wave(p, a);
    c.expect(w.wavevector == kv[a], "wavevector");
    c.expect(w.wavevector[0] + w.wavevector[1] + w.wavevector[2] == 0.0, "wavevector sum");
  }
  const ComplexVector psi0 = {1.0, 0.0, 0.0};
  for (double t = 0.0; t <= 100.0; t += 0.5) c.expect(std::abs(norm(evolve(sol, psi0, t)) - 1.0) <= 1e-10, "norm drift");
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto e = spectral_solve(QuantumParams(complete_graph(n, r(1.0)), 1.0, 1.0)).energies;
    std::size_t count = 0;
    for (double v : e)
      if (std::abs(v - e.back()) <= 1e-9) ++count;
    c.expect(count == n - 1, "K_n degeneracy");
  }
  Scratch s;
  const auto path = s.write("k3.json", serialize_graph(complete_graph(3, r(1.0))).dump());
  const auto cmp = find_comparison(run_in_process({"schrodinger", path}), "schr.energy");
  c.expect(cmp.has_value(), "energy comparison emitted");
  if (cmp) {
    c.expect(std::abs((*cmp)["computed"].get<double>() - 4.5) <= 1e-10, "comparison computed 4.5");
    c.expect((*cmp)["paper_value"].get<double>() == 2.0, "comparison paper 2.0");
  }
}

// Largest-magnitude eigenvalue of the constant-weight triangle, by the eigensolver.
double dominant_eigenvalue(double w, double a, double b) {
  const auto m = fp_matrix(triangle(r(w), r(w), r(w)), real_function({a, a, a}), real_function({b, b, b}));
  const Eigen::VectorXcd ev = to_eigen_real(m).eigenvalues();
  double best = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i).real()) > std::abs(best)) best = ev(i).real();
  return best;
}

void fokker_planck(Criterion& c) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> pos(0.05, 8.0);
  for (double w : {-2.0, -1.0, 0.5, 1.0, 3.0})
    for (int k = 0; k < 20; ++k) {
      const auto m = fp_matrix(triangle(r(w), r(w), r(w)), real_function({pos(rng), pos(rng), pos(rng)}),
                               real_function({pos(rng), pos(rng), pos(rng)}));
      c.expect(std::abs(determinant(m).as_real()) <= 1e-10 * determinant_scale(m), "det M vanishes");
    }
  for (int k = 0; k < 100; ++k) {
    const auto g = triangle(Scalar::rational(random_positive_rational(rng)), Scalar::rational(random_positive_rational(rng)),
                            Scalar::rational(random_positive_rational(rng)));
    const auto a = rational_function({random_positive_rational(rng), random_positive_rational(rng), random_positive_rational(rng)});
    const auto b = rational_function({random_positive_rational(rng), random_positive_rational(rng), random_positive_rational(rng)});
    const auto m = fp_matrix(g, a, b);
    const auto f = triangle_formulas(g, a, b);
    c.expect(m.trace() == f.b, "tr M");
    c.expect(second_symmetric_function(m) == f.c, "sym2 M");
  }
  const auto one = rational_function({1, 1, 1});
  const auto rep = stationarity_and_stability(triangle(q(1), q(1), q(1)), FpCoefficients::positive(one, one));
  const std::vector<double> ev = {0.0, 21.0 / 8, 21.0 / 8};
  for (std::size_t i = 0; i < 3; ++i) c.expect(std::abs(rep.eigenvalues[i] - ev[i]) <= 1e-10, "eigenvalue");
  c.expect(rep.marginal_degenerate, "marginal-degenerate flag");

  for (double w : {-2.0, -1.0, -0.25})
    for (double b : {0.5, 1.0, 2.0}) {
      const auto cw = constant_weight_analysis(w, 1.0, b);
      double lo = 1e-9, hi = 20.0 * b * std::abs(w);
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (dominant_eigenvalue(w, mid, b) > 0 ? lo : hi) = mid;
      }
      c.expect(std::abs(cw.threshold - 0.75 * b * std::abs(w)) <= 1e-12, "closed-form threshold");
      c.expect(std::abs(0.5 * (lo + hi) - cw.threshold) <= 1e-6, "threshold vs bisection");
    }

  Scratch s;
  const auto path = s.write("t.json", serialize_graph(triangle(r(-1), r(-1), r(-1))).dump());
  const auto ones = s.write("one.json", R"({"values":[1,1,1]})");
  const auto cmp = find_comparison(run_in_process({"fpe", path, "--drift", ones, "--diffusion", ones}), "fpe.neg-w-threshold");
  c.expect(cmp && (*cmp)["agrees"].is_null(), "63/40 comparison null");
  if (cmp) c.expect(std::abs((*cmp)["paper_value"].get<double>() - 1.575) <= 1e-12, "paper threshold 63/40");
}

void line_graph_weights(Criterion& c) {
  const auto lg = line_graph(graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(1)}, {1, 2, q(3)}}));
  c.expect(lg.graph.weight(0, 1) == q(3, 2), "harmonic weight 3/2");
  bool raised = false;
  try {
    line_graph(graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(2)}, {1, 2, q(-2)}}));
  } catch (const DomainError&) {
    raised = true;
  }
  c.expect(raised, "zero denominator raises DomainError");
}

// ---------------------------------------------------------------------------

struct Process {
  int code;
  std::string out;
  std::string err;
};

Process spawn(const std::string& args, const Scratch& s) {
  const auto err_path = (s.dir / "stderr.txt").string();
  const std::string cmd = std::string("'") + GFA_CLI_PATH + "' " + args + " 2>'" + err_path + "'";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  std::ifstream in(err_path);
  std::stringstream err;
  err << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err.str()};
}

void cli_determinism(Criterion& c) {
  Scratch s;
  const auto k3 = s.write("k3.json", serialize_graph(complete_graph(3, q(1))).dump());
  const auto k3r = s.write("k3r.json", serialize_graph(complete_graph(3, r(1.0))).dump());
  const auto k2 = s.write("k2.json", serialize_graph(complete_graph(2, q(3, 2))).dump());
  const auto p3 = s.write("p3.json", serialize_graph(path_graph(3, q(1))).dump());
  const auto z30 = s.write("z30.json", serialize_graph(z30_triangle()).dump());
  const auto tri = s.write("tri.json", serialize_graph(triangle(r(-1), r(-1), r(-1))).dump());
  const auto lpath = s.write("lp.json", serialize_graph(graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(1)}, {1, 2, q(3)}})).dump());
  const auto gam = s.write("gam.json", R"({"scalar":{"kind":"rational"},"n":3,"edges":[{"u":0,"v":1,"gamma_uv":1,"gamma_vu":"1/2"},{"u":1,"v":2,"gamma_uv":2,"gamma_vu":-1}]})");
  const auto ones = s.write("one.json", R"({"values":[1,1,1]})");
  const auto f = s.write("f.json", R"({"values":["1/2",-2,3]})");
  const auto psi = s.write("psi.json", R"({"values":[[1,0],[0,0],[0,0]]})");

  const std::vector<std::string> commands = {
      "jacobi " + k3 + " --assert",
      "jacobi " + z30 + " --mode full --threads 3",
      "zdg 30",
      "zdg-weights " + k3 + " --modulus 30 --threads 4",
      "zdg-weights " + k3 + " --modulus 30 --sample 500 --seed 9",
      "killing " + k2,
      "killing " + k3,
      "center " + p3,
      "bracket " + p3 + " --f " + f + " --h " + ones + " --split 0,1",
      "laplacian " + gam + " --f " + f + " --leibniz-f " + f + " --leibniz-h " + ones,
      "cobracket " + k3 + " --h " + f,
      "ybe " + k3,
      "ybe " + p3,
      "ybe " + z30,
      "manin " + k3 + " --x " + ones + " --xi " + f,
      "schrodinger " + k3r + " --t 7.5 --psi0 " + psi + " --modes",
      "fpe " + k3 + " --drift " + ones + " --diffusion " + ones,
      "fpe " + tri + " --drift " + ones + " --diffusion " + ones + " --scan edge=0,1 -2 2 21 --threads 2",
      "linegraph " + lpath,
      "indepset " + p3,
  };
  for (const auto& cmd : commands) {
    const auto a = spawn(cmd, s), b = spawn(cmd, s);
    c.expect(a.code == 0, "exit 0: " + cmd);
    c.expect(!a.out.empty() && a.out == b.out, "byte-identical: " + cmd);
  }

  const auto bad_json = s.write("bad.json", "{\"scalar\":");
  const auto loop = s.write("loop.json", R"({"scalar":{"kind":"real"},"n":2,"edges":[{"u":0,"v":0,"w":1}]})");
  const auto big = s.write("big.json", R"({"scalar":{"kind":"rational"},"n":65,"edges":[]})");
  const auto zero_den = s.write("zd.json", serialize_graph(graph_from_weights(ScalarDomain::rational(), 3, {{0, 1, q(1)}, {1, 2, q(-1)}})).dump());
  const auto zero_a = s.write("za.json", R"({"values":[1,0,1]})");
  const std::vector<std::pair<std::string, int>> failing = {
      {"jacobi " + p3 + " --assert", kExitAssertion},
      {"jacobi " + bad_json, kExitParse},
      {"jacobi " + loop, kExitParse},
      {"jacobi " + (s.dir / "missing.json").string(), kExitParse},
      {"nosuch", kExitParse},
      {"zdg 30 --bogus", kExitParse},
      {"zdg 1", kExitDomain},
      {"linegraph " + zero_den, kExitDomain},
      {"center " + z30, kExitDomain},
      {"killing " + big, kExitSize},
      {"zdg-weights " + s.write("k7.json", serialize_graph(complete_graph(7, q(1))).dump()) + " --modulus 30", kExitSize},
      {"fpe " + k3 + " --drift " + zero_a + " --diffusion " + ones, kExitParse},
  };
  for (const auto& [cmd, code] : failing) {
    const auto a = spawn(cmd, s);
    c.expect(a.code == code, "exit " + std::to_string(code) + " (got " + std::to_string(a.code) + "): " + cmd);
    const bool one_line = !a.err.empty() && a.err.find('\n') == a.err.size() - 1;
    c.expect(one_line, "single-line stderr: " + cmd);
    try {
      c.expect(json::parse(a.err)["exit_code"] == code, "error JSON exit_code: " + cmd);
    } catch (const std::exception&) {
      c.expect(false, "stderr is not JSON: " + cmd);
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* name;
    void (*body)(Criterion&);
  };
  const Entry entries[] = {
      {1, "laplacian-factorization", laplacian_factorization},
      {2, "leibniz-defect-identity", leibniz_defect},
      {3, "bracket-identities", bracket_identities},
      {4, "jacobi-suite", jacobi_suite},
      {5, "second-order-leibniz", second_order_leibniz},
      {6, "killing-pins", killing_pins},
      {7, "bialgebra", bialgebra},
      {8, "zero-divisors", zero_divisors},
      {9, "schrodinger-k3", schrodinger},
      {10, "fokker-planck-triangle", fokker_planck},
      {11, "line-graph", line_graph_weights},
      {12, "cli-determinism-and-exit-codes", cli_determinism},
  };
  bool all = true;
  for (const auto& e : entries) {
    Criterion c(e.id, e.name);
    guarded(c, [&] { e.body(c); });
    all = c.report() && all;
  }
  return all ? 0 : 1;
}
