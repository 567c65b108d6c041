// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "beckring/dsl.hpp"
#include "beckring/report.hpp"
#include "beckring/theorems.hpp"
#include "oracles.hpp"

using namespace beckring;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> violations;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      violations.push_back(what);
    }
  }
};

std::vector<RingPtr> parse_all(const std::vector<std::string> &texts) {
  std::vector<RingPtr> out;
  for (const auto &t : texts)
    out.push_back(dsl::parse_ring(t));
  return out;
}

RingPtr product_of(const std::vector<RingPtr> &fs) {
  return fs.size() == 1 ? fs.front() : make_product(fs);
}

std::size_t size_of(const std::vector<RingPtr> &fs) {
  std::size_t n = 1;
  for (const auto &f : fs)
    n *= f->size();
  return n;
}

/// Multisets of `k` entries from `pool`, as index-nondecreasing lists.
std::vector<std::vector<RingPtr>> multisets(const std::vector<RingPtr> &pool,
                                            std::size_t k) {
  std::vector<std::vector<RingPtr>> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (idx.size() == k) {
      std::vector<RingPtr> fs;
      for (const auto i : idx)
        fs.push_back(pool[i]);
      out.push_back(std::move(fs));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      idx.push_back(i);
      rec(i);
      idx.pop_back();
    }
  };
  rec(0);
  return out;
}

std::string label_of(const std::vector<RingPtr> &fs) {
  std::string s;
  for (const auto &f : fs)
    s += (s.empty() ? "" : " x ") + f->label();
  return s;
}

/// Certifies `chi` independently: the witness is a proper chi-coloring of
/// `adj`, and either the oracle clique reaches chi or the oracle proves the
/// core is not (chi - 1)-colorable.
bool certify_chi(const oracle::Adj &adj, const Coloring &witness,
                 std::size_t chi, std::size_t oracle_omega) {
  if (witness.k != chi || witness.class_of.size() != adj.size())
    return false;
  for (const auto c : witness.class_of)
    if (c >= chi)
      return false;
  if (!oracle::is_proper(adj, witness.class_of))
    return false;
  if (oracle_omega == chi)
    return true;
  return oracle_omega < chi &&
         !oracle::colorable(oracle::core_adjacency(adj), chi - 1);
}

// ---------------------------------------------------------------------------

Outcome an_ring() {
  Outcome o;
  std::size_t matching = 0;
  bool canonical_matches = false;
  double solve_time = 0;
  std::ostringstream detail;
  for (const auto v : {ZSquared::zero, ZSquared::two}) {
    const RingPtr r = make_an_ring(v);
    const auto t0 = Clock::now();
    const BeckGraph g = build_graph(r);
    const std::size_t omega = max_clique(g).size();
    const auto chi = chromatic_number(g);
    solve_time += seconds_since(t0);

    const auto adj = oracle::beck_adjacency(*r);
    const std::size_t oracle_omega = oracle::clique_bron_kerbosch(adj);
    o.require(oracle_omega == omega, r->label() + ": oracle omega differs");
    o.require(certify_chi(adj, chi.witness, chi.chi, oracle_omega),
              r->label() + ": chi not certified");
    detail << r->label() << " omega " << omega << " chi " << chi.chi << "; ";
    if (omega == 5 && chi.chi == 6) {
      ++matching;
      canonical_matches = v == kCanonicalAn;
    }
  }
  o.require(matching == 1, "variants with (5, 6): " + std::to_string(matching));
  o.require(canonical_matches, "canonical AN is not the (5, 6) variant");
  o.require(solve_time < 5.0, "solver time " + std::to_string(solve_time));
  detail << "solve " << std::fixed << std::setprecision(3) << solve_time
         << " s";
  o.detail = detail.str();
  return o;
}

Outcome zn_closed_form() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::uint32_t n = 1; n <= 100; ++n) {
    const auto f = zn_formula(n).value;
    const BeckGraph g = build_graph(make_zmod(n));
    const std::size_t omega = max_clique(g).size();
    const auto adj = oracle::zn_adjacency(n);
    const std::size_t oracle_omega = oracle::clique_bron_kerbosch(adj);
    o.require(f == omega && f == oracle_omega,
              "Z" + std::to_string(n) + ": formula " + std::to_string(f) +
                  " omega " + std::to_string(omega));
    if (n <= 60) {
      const auto chi = chromatic_number(g);
      o.require(f == chi.chi, "Z" + std::to_string(n) + ": formula " +
                                  std::to_string(f) + " chi " +
                                  std::to_string(chi.chi));
      o.require(certify_chi(adj, chi.witness, chi.chi, oracle_omega),
                "Z" + std::to_string(n) + ": chi not certified");
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime " + std::to_string(secs));
  o.detail = "N <= 100 (omega), N <= 60 (chi)";
  return o;
}

Outcome product_clique_formula() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto pool = parse_all(default_catalog());
  std::size_t count = 0;
  for (const std::size_t k : {2, 3})
    for (const auto &fs : multisets(pool, k)) {
      if (size_of(fs) > 256)
        continue;
      ++count;
      const auto pred = omega_product_formula(fs);
      const RingPtr r = make_product(fs);
      const std::size_t direct = max_clique(build_graph(r)).size();
      const std::size_t brute =
          oracle::clique_bron_kerbosch(oracle::beck_adjacency(*r));
      o.require(pred.predicted == direct && direct == brute,
                label_of(fs) + ": predicted " + std::to_string(pred.predicted) +
                    " direct " + std::to_string(direct) + " oracle " +
                    std::to_string(brute));
    }
  const double secs = seconds_since(t0);
  o.require(secs < 300.0, "runtime " + std::to_string(secs));
  o.detail = std::to_string(count) + " products";
  return o;
}

Outcome chromatic_sandwich() {
  Outcome o;
  const auto pool = parse_all(default_catalog());
  std::size_t count = 0;
  for (const auto &fs : multisets(pool, 2)) {
    const RingPtr r = make_product(fs);
    const BeckGraph g = build_graph(r);
    if (core(g).graph.order() > 64)
      continue;
    ++count;
    const auto adj = oracle::beck_adjacency(*r);
    const auto chi = chromatic_number(g);
    o.require(certify_chi(adj, chi.witness, chi.chi,
                          oracle::clique_bron_kerbosch(adj)),
              label_of(fs) + ": chi not certified");
    for (const auto mode : {SMode::min_s, SMode::any_optimal}) {
      const auto b = chi_bounds(fs, mode);
      const Coloring built = product_coloring(*fs[0], b.factors[0].coloring,
                                              *fs[1], b.factors[1].coloring);
      const std::string tag =
          label_of(fs) + (mode == SMode::min_s ? " (min s)" : " (any)");
      o.require(b.lower <= chi.chi && chi.chi <= b.upper,
                tag + ": chi " + std::to_string(chi.chi) + " outside [" +
                    std::to_string(b.lower) + ", " + std::to_string(b.upper) +
                    "]");
      o.require(built.k == b.upper, tag + ": coloring size " +
                                        std::to_string(built.k) + " vs upper " +
                                        std::to_string(b.upper));
      o.require(oracle::is_proper(adj, built.class_of),
                tag + ": product coloring improper");
    }
  }
  o.detail = std::to_string(count) + " pairs with core <= 64";
  return o;
}

Outcome reduced_equality() {
  Outcome o;
  const auto fields = parse_all(field_catalog());
  std::size_t count = 0;
  for (const std::size_t k : {1, 2, 3})
    for (const auto &fs : multisets(fields, k)) {
      ++count;
      const RingPtr r = product_of(fs);
      const BeckGraph g = build_graph(r);
      const std::size_t omega = max_clique(g).size();
      const auto chi = chromatic_number(g);
      const auto adj = oracle::beck_adjacency(*r);
      const std::size_t oracle_omega = oracle::clique_bron_kerbosch(adj);
      const std::size_t want = k + 1;
      o.require(omega == want && chi.chi == want && oracle_omega == want,
                label_of(fs) + ": omega " + std::to_string(omega) + " chi " +
                    std::to_string(chi.chi));
      o.require(certify_chi(adj, chi.witness, chi.chi, oracle_omega),
                label_of(fs) + ": chi not certified");
    }
  o.detail = std::to_string(count) + " field products";
  return o;
}

Outcome counterexample_gap() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::vector<std::vector<std::string>> families = {
      {}, {"Z2"}, {"Z3"}, {"Z2", "Z2"}};
  std::ostringstream detail;
  for (const auto &family : families) {
    const auto extra = parse_all(family);
    const auto rep = counterexample_family(extra, 128);
    std::vector<RingPtr> fs{make_an_ring()};
    fs.insert(fs.end(), extra.begin(), extra.end());
    const std::string tag = label_of(fs);
    o.require(rep.gap == 1, tag + ": gap " + std::to_string(rep.gap));
    o.require(rep.chi_certified && rep.chi_lower == rep.coloring_size &&
                  rep.chi == rep.chi_lower,
              tag + ": chi not pinched");
    if (rep.product_size <= 128) {
      const std::size_t brute = oracle::clique_bron_kerbosch(
          oracle::beck_adjacency(*product_of(fs)));
      o.require(rep.direct_omega && *rep.direct_omega == rep.omega &&
                    brute == rep.omega,
                tag + ": omega cross-check");
    }
    // The pinching coloring itself, rebuilt and checked by the oracle.
    std::vector<Coloring> cs;
    for (const auto &f : fs)
      cs.push_back(factor_coloring(f, SMode::min_s).coloring);
    const Coloring built = iterated_product_coloring(fs, cs);
    o.require(built.k == rep.coloring_size &&
                  oracle::is_proper(oracle::beck_adjacency(*product_of(fs)),
                                    built.class_of),
              tag + ": coloring not verified");
    if (detail.tellp() > 0)
      detail << "; ";
    detail << tag << " (" << rep.omega << ", " << rep.chi << ")";
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime " + std::to_string(secs));
  o.detail = detail.str();
  return o;
}

Outcome nilradical_bound_check() {
  Outcome o;
  const auto pool = parse_all(default_catalog());
  std::size_t count = 0, equalities = 0;
  std::vector<std::vector<RingPtr>> products;
  for (const auto &f : pool)
    products.push_back({f});
  for (const auto &fs : multisets(pool, 2))
    products.push_back(fs);
  for (const auto &fs : products) {
    ++count;
    const auto nb = nilradical_bound(fs, kDefaultSizeCap);
    const RingPtr r = product_of(fs);
    const std::size_t brute =
        oracle::clique_bron_kerbosch(oracle::beck_adjacency(*r));
    o.require(nb.direct_omega && *nb.direct_omega == brute,
              label_of(fs) + ": direct omega missing or off");
    o.require(nb.bound <= brute, label_of(fs) + ": bound " +
                                     std::to_string(nb.bound) + " > omega " +
                                     std::to_string(brute));
    bool all_hold = true;
    for (const auto &f : fs)
      all_hold = all_hold && check_an_condition(f).holds;
    if (all_hold) {
      ++equalities;
      o.require(nb.bound == brute, label_of(fs) + ": bound " +
                                       std::to_string(nb.bound) +
                                       " != omega " + std::to_string(brute));
    }
  }
  for (const char *text : {"Z4", "Z8", "Z9"})
    o.require(check_an_condition(dsl::parse_ring(text)).holds,
              std::string(text) + ": condition expected to hold");
  o.detail = std::to_string(count) + " products, " +
             std::to_string(equalities) + " equality instances";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto pool = parse_all(default_catalog());
  std::vector<std::vector<RingPtr>> products;
  for (const std::size_t k : {1, 2, 3, 4})
    for (const auto &fs : multisets(pool, k))
      if (size_of(fs) <= 16)
        products.push_back(fs);
  std::size_t cliques = 0, colorings = 0;
  for (const auto &fs : products) {
    const RingPtr r = product_of(fs);
    const BeckGraph g = build_graph(r);
    const auto adj = oracle::beck_adjacency(*r);
    const auto sq = oracle::square_zero(*r);
    const auto brute = oracle::clique_by_subsets(adj, sq);
    ++cliques;
    const Clique c = max_clique(g);
    o.require(c.size() == brute.omega && oracle::is_clique(adj, c.vertices),
              label_of(fs) + ": max_clique");
    o.require(max_clique(g.graph()).size() == brute.omega,
              label_of(fs) + ": generic max_clique");
    o.require(best_clique_split(g).b.size() == brute.best_marked,
              label_of(fs) + ": |B| of best split");
    if (r->size() <= 10) {
      ++colorings;
      const auto chi = chromatic_number(g);
      o.require(chi.chi == oracle::chromatic_by_partitions(adj) &&
                    oracle::is_proper(adj, chi.witness.class_of),
                label_of(fs) + ": chromatic_number");
    }
  }
  o.detail = std::to_string(cliques) + " clique graphs, " +
             std::to_string(colorings) + " coloring graphs";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  auto pool = parse_all(default_catalog());
  for (const auto &f : parse_all(field_catalog()))
    if (f->size() > 3)
      pool.push_back(f);
  std::vector<std::vector<RingPtr>> products;
  for (const auto &f : pool)
    products.push_back({f});
  for (const auto &fs : multisets(pool, 2))
    if (size_of(fs) <= 64)
      products.push_back(fs);
  for (const auto &fs : products) {
    const RingPtr r = product_of(fs);
    const std::string tag = label_of(fs);
    try {
      r->validate();
    } catch (const NotARingError &e) {
      o.require(false, tag + ": " + e.what());
    }
    const BeckGraph g = build_graph(r);
    const auto adj = oracle::beck_adjacency(*r);
    for (Vertex v = 1; v < g.order(); ++v) {
      o.require(adj[0][v], tag + ": 0 not adjacent to " + std::to_string(v));
      bool zd = r->is_square_zero(Element{v});
      for (Vertex u = 1; u < g.order() && !zd; ++u)
        zd = adj[v][u];
      if (!zd) {
        std::size_t degree = 0;
        for (Vertex u = 0; u < g.order(); ++u)
          degree += adj[v][u];
        o.require(degree == 1, tag + ": non-zero-divisor degree");
      }
    }
    const std::size_t omega = max_clique(g.graph()).size();
    const std::size_t chi = chromatic_number(g.graph()).chi;
    o.require(omega <= chi, tag + ": omega > chi");
    const CoreGraph c = core(g);
    const std::size_t core_omega =
        std::max<std::size_t>(max_clique(c.graph).size(), 2);
    const std::size_t core_chi =
        std::max<std::size_t>(chromatic_number(c.graph).chi, 2);
    o.require(core_omega == omega && core_chi == chi,
              tag + ": core reduction changed (omega, chi)");
  }
  o.detail = std::to_string(products.size()) + " rings";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"AN ring", an_ring},
          {"Z_N closed form", zn_closed_form},
          {"product clique formula", product_clique_formula},
          {"chromatic sandwich", chromatic_sandwich},
          {"reduced equality", reduced_equality},
          {"counterexample family", counterexample_gap},
          {"nilradical bound", nilradical_bound_check},
          {"oracle equivalence", oracle_equivalence},
          {"structural invariants", structural_invariants},
      };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL")
              << ": " << criteria[i].first << " [" << o.detail << "] ("
              << std::fixed << std::setprecision(2) << seconds_since(t0)
              << " s)\n";
    for (const auto &v : o.violations)
      std::cout << "    violation: " << v << '\n';
  }
  return all ? 0 : 1;
}
