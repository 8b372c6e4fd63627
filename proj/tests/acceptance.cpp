// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Criteria 4 and 7 encode count claims that the shipped
// constructions demonstrably cannot meet (see the analysis notes they print
// and the unit suites for the verified behavior); they are asserted as
// written rather than weakened.

#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cordial/constructions.hpp"
#include "cordial/equivalence.hpp"
#include "cordial/search.hpp"
#include "oracles.hpp"

using namespace cordial;

namespace {

int failures_total = 0;

struct Criterion {
  std::string title;
  int checks = 0;
  int failed = 0;
  std::vector<std::string> notes;

  explicit Criterion(std::string t) : title(std::move(t)) {}

  void expect(bool ok, const std::string& detail) {
    ++checks;
    if (!ok) {
      ++failed;
      if (notes.size() < 8) notes.push_back(detail);
    }
  }
  void info(const std::string& text) { notes.push_back("(info) " + text); }
  void finish() {
    std::printf("[%s] %s (%d checks)\n", failed == 0 ? "PASS" : "FAIL", title.c_str(), checks);
    for (const auto& n : notes) std::printf("        %s\n", n.c_str());
    if (failed > 0) ++failures_total;
  }
};

std::vector<i64> one_to(i64 top) {
  std::vector<i64> out;
  for (i64 v = 1; v <= top; ++v) out.push_back(v);
  return out;
}

Graph cycle_with_chord(int n) {
  Graph c = cycle(n);
  auto edges = c.edges;
  edges.emplace_back(0, 2);
  return make_graph(n, std::move(edges));
}

std::string fmt(const char* pattern, i64 a, i64 b = 0, i64 c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, (long long)a, (long long)b, (long long)c);
  return buf;
}

void criterion1_star_jacobi() {
  Criterion cr("criterion 1: star/Jacobi balance and sufficient-condition certificates");
  for (i64 eta : {15, 21, 33, 35}) {
    for (int m : {1, 2}) {
      for (int c : {1, 2}) {
        auto r = label_star_jacobi(eta, m, c);
        auto report = verify(r.graph, r.labeling, r.structure);
        i64 half = i64(m) * euler_phi(eta) / 2;
        cr.expect(report.cordial, fmt("eta=%lld m=%lld c=%lld not cordial", eta, m, c));
        cr.expect(report.e0 == half && report.e1 == half,
                  fmt("eta=%lld m=%lld: counts %lld", eta, m, report.e0));
        auto cert = check_sufficient_condition(r.graph, r.labeling, eta, r.structure.star);
        bool certified = std::holds_alternative<SufficientCertificate>(cert);
        cr.expect(certified, fmt("eta=%lld m=%lld c=%lld: no certificate", eta, m, c));
        if (certified) {
          std::vector<i64> expect_t;
          for (int j = 0; j < m; ++j) expect_t.push_back(c + j);
          cr.expect(std::get<SufficientCertificate>(cert).block_indices == expect_t,
                    fmt("eta=%lld m=%lld c=%lld: wrong T", eta, m, c));
        }
      }
    }
  }
  cr.finish();
}

void criterion2_ladder() {
  Criterion cr("criterion 2: ladder counts, e0 = 3(p-1)/2 + 1");
  for (i64 p : {3, 5, 7, 11, 13}) {
    auto r = label_ladder(p);
    auto report = verify(r.graph, r.labeling, r.structure);
    cr.expect(std::llabs(report.e0 - report.e1) == 1, fmt("p=%lld: |e0-e1| != 1", p));
    cr.expect(report.e0 == 3 * (p - 1) / 2 + 1,
              fmt("p=%lld: e0 = %lld, want %lld", p, report.e0, 3 * (p - 1) / 2 + 1));
    // Independent recount through the brute-force zeta.
    auto counts = oracle::edge_counts(
        r.graph, r.labeling.values, p, [](i64 x, i64 y) { return x + y; },
        [&](i64 v) { return (1 + oracle::legendre(v, p)) / 2; });
    cr.expect(counts.first == report.e0 && counts.second == report.e1,
              fmt("p=%lld: oracle recount disagrees", p));
  }
  auto spot = verify(label_ladder(5).graph, label_ladder(5).labeling, label_ladder(5).structure);
  cr.expect(spot.e0 == 7 && spot.e1 == 6, "p=5 spot value (7,6) missed");
  cr.finish();
}

void criterion3_snake() {
  Criterion cr("criterion 3: snake counts, e0 = n(p-1)/2 + n");
  for (int n : {2, 3, 4}) {
    for (i64 p : {3, 5, 7, 11}) {
      auto r = label_snake(n, p);
      auto report = verify(r.graph, r.labeling, r.structure);
      i64 want = i64(n) * (p - 1) / 2 + n;
      cr.expect(report.e0 == want && report.e1 == want - 1,
                fmt("n=%lld p=%lld: got e0=%lld", n, p, report.e0));
    }
  }
  cr.finish();
}

void criterion4_corona_path() {
  Criterion cr("criterion 4: corona-with-path at p in {7,17,23}, negative control at p=5");
  struct Shape {
    const char* name;
    std::function<Graph(int)> make;
    i64 eps;
    int min_n;
  };
  std::vector<Shape> shapes = {{"cycle", [](int n) { return cycle(n); }, 0, 3},
                               {"path", [](int n) { return path(n); }, -1, 3},
                               {"cycle+chord", cycle_with_chord, 1, 4}};
  for (i64 p : {7, 17, 23}) {
    for (const auto& shape : shapes) {
      for (int n : {3, 4, 5}) {
        if (n < shape.min_n) continue;
        auto r = label_corona_path(shape.make(n), p, {}, /*enforce_hypothesis=*/false);
        auto report = verify(r.graph, r.labeling, r.structure);
        cr.expect(report.e0 - report.e1 == -shape.eps,
                  fmt("p=%lld ", p) + shape.name +
                      fmt("(%lld): e0-e1 = %lld, want %lld", n, report.e0 - report.e1,
                          -shape.eps));
      }
    }
  }
  for (const auto& shape : shapes) {
    for (int n : {3, 4, 5}) {
      if (n < shape.min_n) continue;
      auto r = label_corona_path(shape.make(n), 5, {}, false);
      auto report = verify(r.graph, r.labeling, r.structure);
      i64 want_gap = 2 * n + std::llabs(shape.eps);
      cr.expect(!report.cordial && std::llabs(report.e0 - report.e1) == want_gap,
                std::string("p=5 ") + shape.name +
                    fmt("(%lld): cordial=%lld |e0-e1|=%lld", n, report.cordial ? 1 : 0,
                        std::llabs(report.e0 - report.e1)));
    }
  }
  cr.info("the construction pins zeta(2) the other way around: the per-copy path sums");
  cr.info("cover {1} u {3..p-1}, so the displayed counts balance only when zeta(2) = 0");
  cr.info("(p = +-3 mod 8, e.g. 3, 5, 11, 13); when 2 is a residue the same labeling");
  cr.info("gives e0 - e1 = 2n - eps. Checked below and in the unit suite.");
  {
    bool corrected_ok = true;
    for (i64 p : {3, 5, 11, 13}) {
      for (const auto& shape : shapes) {
        for (int n : {3, 4, 5}) {
          if (n < shape.min_n) continue;
          auto r = label_corona_path(shape.make(n), p);
          auto report = verify(r.graph, r.labeling, r.structure);
          corrected_ok = corrected_ok && report.cordial &&
                         report.e0 - report.e1 == -shape.eps &&
                         report.e0 == i64(n) * (p - 1);
        }
      }
    }
    for (i64 p : {7, 17, 23})
      for (int n : {3, 4}) {
        auto r = label_corona_path(cycle(n), p, {}, false);
        auto report = verify(r.graph, r.labeling, r.structure);
        corrected_ok = corrected_ok && !report.cordial && report.e0 - report.e1 == 2 * n;
      }
    cr.info(std::string("zeta(2)=0 direction verified across the same shapes: ") +
            (corrected_ok ? "all cordial with e0-e1 = -eps" : "UNEXPECTED"));
  }
  cr.finish();
}

void criterion5_tensor() {
  Criterion cr("criterion 5: tensor with complete(p), e0 = e1 = m*p(p-1)/2");
  for (i64 p : {3, 5, 7}) {
    std::vector<Graph> gs = {path(2), path(3), cycle(4)};
    for (const auto& g : gs) {
      auto r = label_tensor_complete(g, p);
      auto report = verify(r.graph, r.labeling, r.structure);
      i64 want = i64(g.size()) * p * (p - 1) / 2;
      cr.expect(report.e0 == want && report.e1 == want,
                fmt("p=%lld size=%lld: e0=%lld", p, g.size(), report.e0));
    }
  }
  cr.finish();
}

void criterion6_kayak() {
  Criterion cr("criterion 6: kayak-paddle join counts");
  for (i64 p : {7, 11, 13}) {
    auto r = label_join_kayak(p);
    auto report = verify(r.graph, r.labeling, r.structure);
    i64 base = (p - 1) * (p + 1) / 2;
    cr.expect(report.e0 == 1 + base && report.e1 == base,
              fmt("p=%lld: (e0,e1) = (%lld,%lld)", p, report.e0, report.e1));
  }
  cr.finish();
}

void criterion7_join_path_cycle() {
  Criterion cr("criterion 7: path+cycle join, certificate epsilon = 1 and e0 - e1 = 1");
  for (i64 p : {17, 41}) {
    auto r = label_join_path_cycle(p);
    int half = int((p - 1) / 2);
    auto cert = check_join_condition(path(half), cycle(half), r.labeling, p);
    cr.expect(cert.epsilon.has_value() && *cert.epsilon == 1,
              fmt("p=%lld: certificate epsilon missing or not 1", p));
    auto report = verify(r.graph, r.labeling, r.structure);
    cr.expect(report.e0 - report.e1 == 1,
              fmt("p=%lld: e0 - e1 = %lld, want 1", p, report.e0 - report.e1));
    cr.expect(report.cordial, fmt("p=%lld: not cordial", p));
  }
  cr.info("expanding the balance equation gives e0 - e1 = -epsilon, not +epsilon: the");
  cr.info("certificate epsilon = 1 labelings land on e0 - e1 = -1 (still cordial). The");
  cr.info("unit suite pins the -epsilon direction on 200 randomized certified joins.");
  cr.finish();
}

void criterion8_corona_k1() {
  Criterion cr("criterion 8: corona with K1, (e0, e1) = ((p-1)/2, (p-1)/2 + eps)");
  struct Case {
    i64 p;
    Graph g;
    i64 eps;
  };
  std::vector<Case> cases;
  cases.push_back({7, path(3), -1});
  cases.push_back({7, cycle(3), 0});
  cases.push_back({13, path(6), -1});
  cases.push_back({13, cycle(6), 0});
  cases.push_back({13, cycle_with_chord(6), 1});
  for (auto& c : cases) {
    auto r = label_corona_k1(c.g, c.p);
    auto report = verify(r.graph, r.labeling, r.structure);
    cr.expect(report.e0 == (c.p - 1) / 2 && report.e1 == (c.p - 1) / 2 + c.eps,
              fmt("p=%lld eps=%lld: (e0,e1)=(%lld,..)", c.p, c.eps, report.e0));
    cr.expect(report.cordial, fmt("p=%lld eps=%lld: not cordial", c.p, c.eps));
  }
  cr.finish();
}

void criterion9_corona_gh() {
  Criterion cr("criterion 9: corona G over H at p = 5");
  Graph h = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  auto r1 = label_corona_gh(cycle(4), h, 5, 1);
  auto rep1 = verify(r1.graph, r1.labeling, r1.structure);
  cr.expect(rep1.e0 == 20 && rep1.e1 == 20, fmt("cycle(4): (%lld,%lld)", rep1.e0, rep1.e1));
  auto r2 = label_corona_gh(path(4), h, 5, 1);
  auto rep2 = verify(r2.graph, r2.labeling, r2.structure);
  cr.expect(rep2.e0 == 19 && rep2.e1 == 20, fmt("path(4): (%lld,%lld)", rep2.e0, rep2.e1));
  cr.finish();
}

void criterion10_equivalence() {
  Criterion cr("criterion 10: psi construction, transfer, and the negative control");
  for (int m : {1, 2}) {
    for (int variant : {-1, 0}) {
      i64 top = 15 * m + variant;
      auto s1 = make_structure(15, ZetaSpec::jacobi_factor(3), StarOp::product(), one_to(top));
      auto s2 = make_structure(15, ZetaSpec::jacobi_factor(5), StarOp::product(), one_to(top));
      auto w = build_psi(15, m, variant, s1, s2);
      cr.expect(verify_equivalence(s1, s2, w).pass,
                fmt("m=%lld variant=%lld: witness fails", m, variant));
    }
  }
  {
    auto s1 = make_structure(15, ZetaSpec::jacobi_factor(3), StarOp::product(), one_to(14));
    auto s2 = make_structure(15, ZetaSpec::jacobi_factor(5), StarOp::product(), one_to(14));
    SearchOptions wide;
    wide.limit = 14;
    auto outcome = find_cordial_labeling(path(14), s1, wide);
    cr.expect(outcome.found.has_value(), "no cordial labeling of path(14) found");
    if (outcome.found) {
      auto w = build_psi(15, 1, -1, s1, s2);
      auto g = transfer(*outcome.found, w);
      auto r1 = verify(path(14), *outcome.found, s1);
      auto r2 = verify(path(14), g, s2);
      bool same = r1.per_edge.size() == r2.per_edge.size();
      for (size_t i = 0; same && i < r1.per_edge.size(); ++i)
        same = r1.per_edge[i].label == r2.per_edge[i].label;
      cr.expect(same && r1.e0 == r2.e0 && r1.e1 == r2.e1,
                "transfer changed the per-edge label vector");
      cr.expect(r1.cordial && r2.cordial, "transferred labeling lost cordiality");
    }
  }
  {
    auto s1 = make_structure(7, ZetaSpec::legendre(), StarOp::product(), one_to(13));
    auto s2 = make_structure(7, ZetaSpec::negated_legendre(), StarOp::product(), one_to(13));
    bool threw = false;
    try {
      build_psi(7, 2, -1, s1, s2);
    } catch (const PropertyViolation& e) {
      threw = e.property == "multiplicative";
    }
    cr.expect(threw, "negated-legendre did not raise PropertyViolation(multiplicative)");
  }
  cr.finish();
}

void criterion11_oracle() {
  Criterion cr("criterion 11: search oracle agreement and pruning equivalence");
  std::vector<Graph> graphs;
  for (int n = 1; n <= 7; ++n) graphs.push_back(path(n));
  for (int n = 3; n <= 7; ++n) graphs.push_back(cycle(n));
  for (int n = 2; n <= 7; ++n) graphs.push_back(star(n));
  graphs.push_back(ladder(3));
  graphs.push_back(snake(2, 3));
  graphs.push_back(kayak_paddle(3, 0, 3));
  for (const auto& g : graphs) {
    for (const char* spec :
         {"legendre@3:sum", "legendre@5:sum", "legendre@5:product", "jacobi@15:sum"}) {
      auto s = with_labels(parse_structure(spec), one_to(g.order));
      auto found = find_cordial_labeling(g, s);
      SearchOptions unpruned;
      unpruned.prune = false;
      auto counted = count_cordial_labelings(g, s);
      auto counted_plain = count_cordial_labelings(g, s, unpruned);
      cr.expect(found.found.has_value() == (*counted.count > 0),
                std::string(spec) + fmt(": find/count disagree on order %lld", g.order));
      cr.expect(*counted.count == *counted_plain.count,
                std::string(spec) + fmt(": pruned %lld != unpruned %lld", *counted.count,
                                        *counted_plain.count));
      if (found.found)
        cr.expect(verify(g, *found.found, s).cordial,
                  std::string(spec) + ": found labeling does not verify");
    }
  }
  auto k4 = with_labels(parse_structure("legendre@3:sum"), one_to(4));
  cr.expect(*count_cordial_labelings(complete(4), k4).count == 0, "complete(4) count not 0");
  auto c3 = with_labels(parse_structure("legendre@3:sum"), one_to(3));
  cr.expect(*count_cordial_labelings(cycle(3), c3).count == 6, "cycle(3) count not 6");
  cr.finish();
}

void criterion12_property_suites() {
  Criterion cr("criterion 12: exhaustive number-theory and class-structure properties");
  // Euler criterion, p <= 200.
  bool euler_ok = true;
  for (i64 p = 3; p <= 200; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (i64 a = 1; a < p; ++a)
      if (mod_reduce(legendre_symbol(a, p), p) != pow_mod(a, (p - 1) / 2, p)) euler_ok = false;
  }
  cr.expect(euler_ok, "Euler criterion failed somewhere at p <= 200");
  // Jacobi multiplicativity and the Legendre agreement, n <= 200.
  bool jacobi_ok = true;
  for (i64 n = 3; n <= 199 && jacobi_ok; n += 2) {
    for (i64 a = 1; a <= n && jacobi_ok; ++a) {
      if (gcd(a, n) != 1) continue;
      for (i64 b = 1; b <= n; ++b) {
        if (gcd(b, n) != 1) continue;
        if (jacobi_symbol(a * b, n) != jacobi_symbol(a, n) * jacobi_symbol(b, n)) {
          jacobi_ok = false;
          break;
        }
      }
    }
  }
  cr.expect(jacobi_ok, "Jacobi multiplicativity failed");
  bool agree_ok = true;
  for (i64 p = 3; p <= 199; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (i64 a = 0; a <= p; ++a)
      if (jacobi_symbol(a, p) != legendre_symbol(a, p)) agree_ok = false;
  }
  cr.expect(agree_ok, "Jacobi and Legendre disagree on a prime");
  // Discrete-log bijectivity for every eta <= 200 with a primitive root.
  bool dlog_ok = true;
  for (i64 eta = 3; eta <= 200; ++eta) {
    auto root = primitive_root(eta);
    if (!root) continue;
    std::set<i64> image;
    for (i64 a = 1; a < eta; ++a)
      if (gcd(a, eta) == 1) image.insert(discrete_log(a, *root, eta));
    if (i64(image.size()) != euler_phi(eta)) dlog_ok = false;
  }
  cr.expect(dlog_ok, "discrete log is not a bijection somewhere");
  // phi(p) = p - 1 on primes.
  bool phi_ok = true;
  for (i64 p = 2; p <= 200; ++p)
    if (oracle::is_prime(p) && euler_phi(p) != p - 1) phi_ok = false;
  cr.expect(phi_ok, "phi(p) != p-1 on some prime");
  // Class identities for p <= 50.
  for (i64 p = 3; p <= 50; p += 2) {
    if (!oracle::is_prime(p)) continue;
    auto parity = residue_classes(make_structure(p, ZetaSpec::index_parity(), StarOp::sum()));
    auto chi = residue_classes(make_structure(p, ZetaSpec::index_chi(), StarOp::sum()));
    auto legendre = residue_classes(make_structure(p, ZetaSpec::legendre(), StarOp::sum()));
    bool partitions_equal = (parity.a0 == chi.a1 && parity.a1 == chi.a0) ||
                            (parity.a0 == chi.a0 && parity.a1 == chi.a1);
    cr.expect(partitions_equal, fmt("index classes differ as a partition at p=%lld", p));
    cr.expect(legendre.a0 == chi.a0 && legendre.a1 == chi.a1,
              fmt("legendre and index-chi classes differ at p=%lld", p));
    cr.expect(check_prop_balance(make_structure(p, ZetaSpec::legendre(), StarOp::sum())),
              fmt("legendre unbalanced at p=%lld", p));
  }
  // Jacobi balance dichotomy for odd eta <= 50.
  for (i64 eta = 3; eta <= 50; eta += 2) {
    i64 root = 1;
    while (root * root < eta) ++root;
    bool square = root * root == eta;
    cr.expect(check_prop_balance(make_structure(eta, ZetaSpec::jacobi(), StarOp::sum())) ==
                  !square,
              fmt("Jacobi balance dichotomy fails at eta=%lld", eta));
  }
  // Shift invariance of zeta_eval, 1000 random trials per shipped kind.
  {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<i64> pick_x(-2000, 2000);
    std::uniform_int_distribution<i64> pick_k(-40, 40);
    std::vector<ArithmeticStructure> specs;
    specs.push_back(make_structure(7, ZetaSpec::legendre(), StarOp::sum()));
    specs.push_back(make_structure(7, ZetaSpec::negated_legendre(), StarOp::sum()));
    specs.push_back(make_structure(15, ZetaSpec::jacobi(), StarOp::sum()));
    specs.push_back(make_structure(15, ZetaSpec::jacobi_factor(3), StarOp::sum()));
    specs.push_back(make_structure(11, ZetaSpec::index_parity(), StarOp::sum()));
    specs.push_back(make_structure(11, ZetaSpec::index_chi(), StarOp::sum()));
    specs.push_back(make_structure(9, ZetaSpec::euler(), StarOp::sum()));
    for (const auto& s : specs) {
      bool invariant = true;
      for (int trial = 0; trial < 1000; ++trial) {
        i64 x = pick_x(rng);
        if (zeta_eval(s, x) != zeta_eval(s, x + pick_k(rng) * s.eta)) invariant = false;
      }
      cr.expect(invariant, "zeta_eval shift invariance failed for " + to_string(s.zeta));
    }
  }
  cr.finish();
}

}  // namespace

int main() {
  criterion1_star_jacobi();
  criterion2_ladder();
  criterion3_snake();
  criterion4_corona_path();
  criterion5_tensor();
  criterion6_kayak();
  criterion7_join_path_cycle();
  criterion8_corona_k1();
  criterion9_corona_gh();
  criterion10_equivalence();
  criterion11_oracle();
  criterion12_property_suites();
  std::printf("%d of 12 criteria failed\n", failures_total);
  return failures_total;
}
