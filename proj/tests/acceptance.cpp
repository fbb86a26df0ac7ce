// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qlift/cover.hpp"
#include "qlift/errors.hpp"
#include "qlift/gz_builder.hpp"
#include "qlift/hgp.hpp"
#include "qlift/presentation.hpp"
#include "qlift/zlift.hpp"

using namespace qlift;
using namespace qlift::fixtures;

namespace {

// Runtime limits in seconds; 0 means the criterion has no limit.
constexpr double limit_orthogonality = 10.0;
constexpr double limit_lifting = 60.0;
constexpr double limit_toric = 60.0;
constexpr double limit_classification = 10.0;
constexpr double limit_fano = 300.0;

constexpr std::size_t random_hpc_count = 200;
constexpr std::size_t min_lift_pairs = 50;
constexpr int fano_k_max = 8;
// Smallest modulus exponent at which the Fano search fails.
constexpr int fano_refutation_exponent = 2;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& o) : o_(o) {}
  void require(bool ok, const std::string& what) {
    if (!ok && o_.pass) {
      o_.pass = false;
      o_.detail = "failed: " + what;
    }
  }

 private:
  Outcome& o_;
};

// Codes seen by criteria 1-6, for the homology cross-check.
std::vector<CssCode> seen_codes;
// Lifted codes from criterion 2 whose Z-lift is support-preserving, with their bases.
struct WeightCase {
  CssCode base;
  CssCode lifted;
  std::size_t degree;
};
std::vector<WeightCase> weight_cases;
// Support-preserving lifts with some |entry| > 1; parallel edges may then carry
// different voltages, so row weights are not expected to survive.
std::size_t weight_excluded = 0;

bool unit_entries(const ZLiftedCode& zl) {
  return (zl.hx.size() == 0 || zl.hx.cwiseAbs().maxCoeff() <= 1) && (zl.hz.size() == 0 || zl.hz.cwiseAbs().maxCoeff() <= 1);
}

void note(const CssCode& c) { seen_codes.push_back(c); }

Outcome orthogonality() {
  Outcome o;
  Checker c(o);
  std::mt19937_64 rng(2024);
  std::size_t lifts = 0;
  for (std::size_t trial = 0; trial < random_hpc_count; ++trial) {
    BitMatrix h1 = random_bits(rng, uniform(rng, 1, 6), uniform(rng, 1, 8));
    BitMatrix h2 = random_bits(rng, uniform(rng, 1, 6), uniform(rng, 1, 8));
    CssCode code = hypergraph_product(h1, h2);
    c.require(multiply_transpose(code.hx(), code.hz()).is_zero(), "random HPC orthogonality");
    note(code);
    ZLiftedCode zl = hpc_naive_zlift(h1, h2);
    c.require(zl.base == code, "naive Z-lift reduces to the product");
    if (trial % 10 == 0) {
      LiftPresentation p = cone_presentation(code);
      LiftedCode lifted = lift_code(code, zl, p, identity_voltages(p, 2));
      CssCode check(lifted.code().hx(), lifted.code().hz());
      note(check);
      ++lifts;
    }
  }
  o.detail = std::to_string(random_hpc_count) + " products, " + std::to_string(lifts) + " lifts validated";
  return o;
}

Outcome lifting_theorem() {
  Outcome o;
  Checker c(o);
  struct Case {
    std::string name;
    ZLiftedCode zl;
    bool cellular;
  };
  std::vector<Case> cases;
  for (std::size_t a : {2u, 3u})
    for (std::size_t b : {2u, 3u})
      cases.push_back({"HPC(rep" + std::to_string(a) + ",rep" + std::to_string(b) + ")",
                       hpc_naive_zlift(repetition_check_matrix(a), repetition_check_matrix(b)), false});
  cases.push_back({"square code (unit lift)", square_unit_zlift(), false});
  cases.push_back({"square code (odd lift, cellular)", square_odd_zlift(), true});
  std::size_t pairs = 0;
  for (const auto& k : cases) {
    LiftPresentation p = k.cellular ? cellular_presentation(k.zl) : cone_presentation(k.zl.base);
    note(k.zl.base);
    for (std::size_t t = 1; t <= 3; ++t) {
      for (const auto& v : enumerate_covers(p, t)) {
        LiftedCode lifted = lift_code(k.zl.base, k.zl, p, v);
        IntMatrix product = multiply(lifted.zlifted.hx, IntMatrix(lifted.zlifted.hz.transpose()));
        c.require(is_zero(product), k.name + " integer product");
        CssCode mod2(to_bits(lifted.zlifted.hx), to_bits(lifted.zlifted.hz));
        c.require(mod2 == lifted.code(), k.name + " mod-2 pair");
        note(mod2);
        if (k.zl.support_preserving && unit_entries(k.zl))
          weight_cases.push_back({k.zl.base, mod2, t});
        else if (k.zl.support_preserving)
          ++weight_excluded;
        ++pairs;
      }
    }
  }
  c.require(pairs >= min_lift_pairs, "at least " + std::to_string(min_lift_pairs) + " pairs");
  if (o.pass) o.detail = std::to_string(pairs) + " (code, voltage) pairs, all products exactly zero";
  return o;
}

Outcome toric_family() {
  Outcome o;
  Checker c(o);
  std::ostringstream s;
  for (std::size_t L : {2u, 3u, 4u}) {
    CssCode code = rep_hpc(L, L);
    note(code);
    CodeParams p = parameters_with_distance(code);
    c.require(p == CodeParams{2 * L * L, 2, L}, "L=" + std::to_string(L) + " gave " + p.to_string());
    s << (L == 2 ? "" : " ") << p.to_string();
  }
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome trivial_lift() {
  Outcome o;
  Checker c(o);
  for (const ZLiftedCode& zl : {hpc_naive_zlift(repetition_check_matrix(2), repetition_check_matrix(2)),
                                hpc_naive_zlift(repetition_check_matrix(3), repetition_check_matrix(2)),
                                square_unit_zlift()}) {
    LiftPresentation p = cone_presentation(zl.base);
    CodeParams base = parameters_with_distance(zl.base);
    for (std::size_t t : {2u, 3u}) {
      LiftedCode lifted = lift_code(zl.base, zl, p, identity_voltages(p, t));
      IntMatrix eye = IntMatrix::Identity(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(t));
      c.require(lifted.zlifted.hx == kron(zl.hx, eye) && lifted.zlifted.hz == kron(zl.hz, eye), "block diagonal");
      CodeParams got = parameters_with_distance(lifted.code());
      note(lifted.code());
      c.require(got.n == t * base.n && got.k == t * base.k && got.d == base.d,
                "params " + got.to_string() + " vs base " + base.to_string());
    }
  }
  if (o.pass) o.detail = "t=2,3 give block-diagonal copies with (tn, tk, d)";
  return o;
}

Outcome classification() {
  Outcome o;
  Checker c(o);
  CssCode code = rep_hpc(2, 2);
  note(code);
  LiftPresentation p = cone_presentation(code);
  auto connected = enumerate_covers(p, 2, true);
  auto total = enumerate_covers(p, 2, false);
  c.require(connected.size() == 3, "connected classes " + std::to_string(connected.size()));
  c.require(total.size() == 4, "total classes " + std::to_string(total.size()));
  bool has_trivial = false;
  for (const auto& v : total) has_trivial = has_trivial || v == identity_voltages(p, 2);
  c.require(has_trivial, "trivial class present");
  if (o.pass) o.detail = "3 connected, 4 total (with the trivial class)";
  return o;
}

Outcome commutation() {
  Outcome o;
  Checker c(o);
  std::ostringstream s;
  for (auto [ell, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    BitMatrix h1 = repetition_check_matrix(ell);
    BitMatrix h2 = repetition_check_matrix(2);
    ZLiftedCode zl = hpc_naive_zlift(h1, h2);
    LiftPresentation p = cone_presentation(zl.base);
    VoltageAssignment v2{m, std::vector<Permutation>(tanner_graph(h2).edges.size(), identity_permutation(m))};
    VoltageAssignment v = product_voltages(p, h1, h2, cyclic_voltages(h1, m), v2, ProductMode::factor1);
    LiftedCode lifted = lift_code(zl.base, zl, p, v);
    CssCode direct = rep_hpc(ell * m, 2);
    note(zl.base);
    note(lifted.code());
    note(direct);
    CodeParams a = parameters_with_distance(lifted.code());
    CodeParams b = parameters_with_distance(direct);
    c.require(a == b, "(" + std::to_string(ell) + "," + std::to_string(m) + "): " + a.to_string() + " vs " + b.to_string());
    s << (s.tellp() > 0 ? " " : "") << "(" << ell << "," << m << ")->" << a.to_string();
  }
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome gz_reproduction() {
  Outcome o;
  Checker c(o);
  ZLiftedCode zl = square_odd_zlift();
  MultCopyGraph m = multigraph_z(zl, 0);
  c.require(m.q_copies.size() == 4, "4 q-copies");
  c.require(m.edges.size() == 12, "12 edges");
  for (std::size_t x : m.x_vertices) {
    int balance = 0;
    for (const auto& e : m.edges)
      if (e.x == x) balance += e.sign;
    c.require(balance == 0, "sign balance at x" + std::to_string(x));
  }
  GzGraph g = pair_edges(m);
  c.require(g.x_copies.size() == 6, "6 x-copies");
  std::vector<std::size_t> degree(g.graph.vertex_count, 0);
  for (const auto& e : g.graph.edges) {
    ++degree[e.from];
    ++degree[e.to];
  }
  for (std::size_t i = 0; i < g.x_copies.size(); ++i) c.require(degree[g.x_copy_vertex(i)] == 2, "x-copy degree 2");
  YzDescriptor d = betti_components(g);
  c.require(d.betti.size() == 1, "connected pairing");
  c.require(d.betti == std::vector<std::size_t>{3}, "b1 = 3");
  c.require(d.to_string() == "#₃ S³×S¹", "descriptor " + d.to_string());
  if (o.pass) o.detail = "4 q-copies, 12 edges, 6 x-copies, " + d.to_string();
  return o;
}

Outcome fano() {
  Outcome o;
  Checker c(o);
  CssCode code = fano_code();
  c.require(rank(code.hz()) == 4, "rank H_Z = 4");
  c.require(rank(code.hx()) == 3, "rank H_X = 3");
  c.require(parameters(code).k == 0, "k = 0");
  RefutationVerdict v = refute_support_preserving(code, fano_k_max);
  c.require(v.refuted, v.to_string());
  c.require(v.exponent == fano_refutation_exponent, "pinned exponent, got " + v.to_string());
  if (o.pass) o.detail = "ranks 3/4, k=0, " + v.to_string();
  return o;
}

Outcome invariance() {
  Outcome o;
  Checker c(o);
  std::size_t compared = 0;
  for (const ZLiftedCode& zl : {square_unit_zlift(), hpc_naive_zlift(repetition_check_matrix(2), repetition_check_matrix(2))}) {
    LiftPresentation a = cone_presentation(zl.base, {RegionTree::forest_restricted, 0});
    LiftPresentation b = cone_presentation(zl.base, {RegionTree::apex_star, 0});
    bool differ = false;
    for (std::size_t z = 0; z < a.regions.size(); ++z) differ = differ || a.regions[z].relators != b.regions[z].relators;
    c.require(differ, "cycle bases differ");
    for (std::size_t t : {2u, 3u}) {
      auto va = enumerate_valid_voltages(a, t);
      auto vb = enumerate_valid_voltages(b, t);
      c.require(va == vb, "valid-voltage sets at t=" + std::to_string(t));
      for (const auto& v : va) {
        LiftedCode la = lift_code(zl.base, zl, a, v);
        LiftedCode lb = lift_code(zl.base, zl, b, v);
        c.require(la.zlifted.hx == lb.zlifted.hx && la.zlifted.hz == lb.zlifted.hz, "lifted matrices");
        ++compared;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " voltages, identical sets and matrices";
  return o;
}

Outcome weight_preservation() {
  Outcome o;
  Checker c(o);
  c.require(!weight_cases.empty(), "suite 2 produced support-preserving lifts");
  for (const auto& w : weight_cases) {
    for (std::size_t r = 0; r < w.lifted.hx().rows(); ++r)
      c.require(w.lifted.hx().row_weight(r) == w.base.hx().row_weight(r / w.degree), "X row weight");
    for (std::size_t r = 0; r < w.lifted.hz().rows(); ++r)
      c.require(w.lifted.hz().row_weight(r) == w.base.hz().row_weight(r / w.degree), "Z row weight");
  }
  if (o.pass)
    o.detail = std::to_string(weight_cases.size()) + " lifted codes with unit-entry Z-lifts (" +
               std::to_string(weight_excluded) + " with entries of magnitude 3 excluded)";
  return o;
}

Outcome homology() {
  Outcome o;
  Checker c(o);
  for (const auto& code : seen_codes) {
    const std::size_t k_rank = code.n() - rank(code.hx()) - rank(code.hz());
    c.require(k_rank == homology_dimension(code), "rank formula vs homology");
  }
  if (o.pass) o.detail = std::to_string(seen_codes.size()) + " codes";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "orthogonality", limit_orthogonality, orthogonality},
      {2, "lifting theorem", limit_lifting, lifting_theorem},
      {3, "toric family", limit_toric, toric_family},
      {4, "trivial lift", 0, trivial_lift},
      {5, "classification count", limit_classification, classification},
      {6, "lift/construct commutation", 0, commutation},
      {7, "G_z reproduction", 0, gz_reproduction},
      {8, "Fano refutation", limit_fano, fano},
      {9, "cycle-basis invariance", 0, invariance},
      {10, "weight preservation", 0, weight_preservation},
      {11, "homology cross-check", 0, homology},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const Error& e) {
      o = {false, std::string("error[") + to_string(e.kind()) + "]: " + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit > 0 && seconds >= cr.limit) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    char timing[64];
    if (cr.limit > 0)
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds, cr.limit);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.name << ": " << o.detail << " [" << timing
              << "]\n";
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed;
}
