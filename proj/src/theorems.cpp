#include "beckring/theorems.hpp"

#include <algorithm>
#include <numeric>

namespace beckring {

namespace {

std::vector<Element> to_elements(const std::vector<Vertex> &vs) {
  std::vector<Element> out;
  out.reserve(vs.size());
  for (const Vertex v : vs)
    out.push_back(Element{v});
  return out;
}

std::size_t product_size(const std::vector<RingPtr> &factors) {
  std::size_t n = 1;
  for (const auto &f : factors) {
    if (n > static_cast<std::size_t>(-1) / f->size())
      return static_cast<std::size_t>(-1);
    n *= f->size();
  }
  return n;
}

} // namespace

OmegaPrediction omega_product_formula(const std::vector<RingPtr> &factors,
                                      const SolverOptions &opts) {
  if (factors.empty())
    throw PreconditionError("omega_product_formula needs at least one factor");
  OmegaPrediction p;
  for (const auto &f : factors) {
    const auto split = best_clique_split(build_graph(f), opts);
    p.factors.push_back(FactorSplit{split.clique.size(),
                                    to_elements(split.b),
                                    to_elements(split.c)});
  }

  std::size_t prod_b = 1, sum_c = 0, prod_omega_minus_c = 1,
              sum_omega_minus_b = 0;
  for (const auto &s : p.factors) {
    prod_b *= s.b.size();
    sum_c += s.c.size();
    prod_omega_minus_c *= s.omega - s.c.size();
    sum_omega_minus_b += s.omega - s.b.size();
  }
  p.predicted = prod_b + sum_c;
  p.predicted_by_omega = prod_omega_minus_c + sum_omega_minus_b;

  // B_1 x ... x B_n
  const std::size_t n = factors.size();
  std::vector<std::vector<Element>> witness{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Element>> next;
    for (const auto &prefix : witness)
      for (const Element b : p.factors[i].b) {
        auto t = prefix;
        t.push_back(b);
        next.push_back(std::move(t));
      }
    witness = std::move(next);
  }
  // each C_i on its own axis
  for (std::size_t i = 0; i < n; ++i)
    for (const Element c : p.factors[i].c) {
      std::vector<Element> t(n, Element{0});
      t[i] = c;
      witness.push_back(std::move(t));
    }

  for (std::size_t a = 0; a < witness.size(); ++a)
    for (std::size_t b = a + 1; b < witness.size(); ++b) {
      if (witness[a] == witness[b])
        throw InternalError("product clique witness has a repeated element");
      for (std::size_t i = 0; i < n; ++i)
        if (factors[i]->mul(witness[a][i], witness[b][i]).index != 0)
          throw InternalError("product clique witness is not a clique");
    }
  if (witness.size() != p.predicted)
    throw InternalError("product clique witness has the wrong size");
  p.witness = std::move(witness);
  return p;
}

Coloring order_square_zero_first(const FiniteRing &r, const Coloring &c) {
  std::vector<bool> bearing(c.k, false);
  for (std::size_t v = 0; v < c.class_of.size(); ++v)
    if (r.is_square_zero(Element{static_cast<std::uint32_t>(v)}))
      bearing[c.class_of[v]] = true;
  std::vector<std::size_t> order(c.k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t cls) { return bearing[cls]; });
  std::vector<std::size_t> new_index(c.k);
  for (std::size_t i = 0; i < c.k; ++i)
    new_index[order[i]] = i;
  Coloring out{c.class_of, c.k};
  for (auto &cls : out.class_of)
    cls = new_index[cls];
  return out;
}

std::size_t square_zero_classes(const FiniteRing &r, const Coloring &c) {
  std::vector<bool> bearing(c.k, false);
  for (std::size_t v = 0; v < c.class_of.size(); ++v)
    if (r.is_square_zero(Element{static_cast<std::uint32_t>(v)}))
      bearing[c.class_of[v]] = true;
  return static_cast<std::size_t>(
      std::count(bearing.begin(), bearing.end(), true));
}

FactorColoring factor_coloring(const RingPtr &r, SMode mode,
                               const SolverOptions &opts) {
  const BeckGraph g = build_graph(r);
  FactorColoring fc;
  if (mode == SMode::min_s) {
    auto m = min_s_optimal_coloring(g, opts);
    fc.chi = m.coloring.k;
    fc.s = m.s;
    fc.s_exact = m.exact;
    fc.coloring = std::move(m.coloring);
  } else {
    auto res = chromatic_number(g, opts);
    fc.chi = res.chi;
    fc.s = s_of(g, res.witness);
    fc.coloring = std::move(res.witness);
  }
  fc.coloring = order_square_zero_first(*r, fc.coloring);
  return fc;
}

ChiBounds chi_bounds(const std::vector<RingPtr> &factors, SMode mode,
                     const SolverOptions &opts) {
  if (factors.empty())
    throw PreconditionError("chi_bounds needs at least one factor");
  ChiBounds b;
  std::size_t sum_chi = 0, sum_chi_minus_s = 0, prod_s = 1;
  for (const auto &f : factors) {
    b.factors.push_back(factor_coloring(f, mode, opts));
    const auto &fc = b.factors.back();
    sum_chi += fc.chi;
    sum_chi_minus_s += fc.chi - fc.s;
    prod_s *= fc.s;
  }
  b.lower = sum_chi - (factors.size() - 1);
  b.upper = sum_chi_minus_s + prod_s;
  return b;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> zero_products(const FiniteRing &r) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex x = 0; x < r.size(); ++x)
    for (Vertex y = 0; y < r.size(); ++y)
      if (r.mul(Element{x}, Element{y}).index == 0)
        out.emplace_back(x, y);
  return out;
}

bool proper_on(const FiniteRing &r, const Coloring &c) {
  if (c.class_of.size() != r.size())
    return false;
  for (const auto cls : c.class_of)
    if (cls >= c.k)
      return false;
  for (const auto &[x, y] : zero_products(r))
    if (x != y && c.class_of[x] == c.class_of[y])
      return false;
  return true;
}

} // namespace

Coloring product_coloring(const FiniteRing &r1, const Coloring &c1,
                          const FiniteRing &r2, const Coloring &c2) {
  if (!proper_on(r1, c1) || !proper_on(r2, c2))
    throw ContractError("product_coloring needs proper factor colorings");
  const Coloring u = order_square_zero_first(r1, c1);
  const Coloring v = order_square_zero_first(r2, c2);
  const std::size_t k1 = u.k, k2 = v.k;
  const std::size_t s1 = square_zero_classes(r1, u);
  const std::size_t s2 = square_zero_classes(r2, v);

  const std::size_t n1 = r1.size(), n2 = r2.size();
  Coloring out;
  out.k = s1 * s2 + (k1 - s1) + (k2 - s2);
  out.class_of.resize(n1 * n2);
  for (std::size_t y = 0; y < n2; ++y)
    for (std::size_t x = 0; x < n1; ++x) {
      const std::size_t i = u.class_of[x];
      const std::size_t j = v.class_of[y];
      std::size_t colour;
      if (i < s1 && j < s2)
        colour = s2 * i + j;
      else if (i < s1)
        colour = s1 * s2 + (j - s2);
      else
        colour = s1 * s2 + (k2 - s2) + (i - s1);
      out.class_of[x + n1 * y] = colour;
    }

  // (x, y) ~ (a, b) iff xa = 0 and yb = 0 and the pairs differ.
  const auto z1 = zero_products(r1);
  const auto z2 = zero_products(r2);
  for (const auto &[x, a] : z1)
    for (const auto &[y, b] : z2) {
      const std::size_t p = x + n1 * y, q = a + n1 * b;
      if (p != q && out.class_of[p] == out.class_of[q])
        throw InternalError("product coloring is not proper");
    }
  std::vector<bool> used(out.k, false);
  for (const auto cls : out.class_of)
    used[cls] = true;
  if (std::find(used.begin(), used.end(), false) != used.end())
    throw InternalError("product coloring leaves a class empty");
  return out;
}

Coloring iterated_product_coloring(const std::vector<RingPtr> &factors,
                                   const std::vector<Coloring> &colorings) {
  if (factors.empty() || factors.size() != colorings.size())
    throw PreconditionError("one coloring per factor is required");
  Coloring acc = colorings.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const RingPtr prefix =
        i == 1 ? factors.front()
               : make_product({factors.begin(), factors.begin() +
                                                    static_cast<long>(i)});
    acc = product_coloring(*prefix, acc, *factors[i], colorings[i]);
  }
  return acc;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    PrimePower pp{p, 0};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
    }
    out.push_back(pp);
  }
  if (n > 1)
    out.push_back(PrimePower{n, 1});
  return out;
}

ZnFormula zn_formula(std::uint64_t n) {
  if (n == 0)
    throw InvalidModulusError("zn_formula needs N >= 1");
  ZnFormula z;
  z.factorization = factorize(n);
  std::uint64_t prod = 1;
  for (const auto &pp : z.factorization) {
    // exponent 2k contributes p^k; exponent 2k+1 contributes p^k and +1
    for (std::uint32_t e = 0; e < pp.exponent / 2; ++e)
      prod *= pp.prime;
    if (pp.exponent % 2 == 1)
      ++z.odd_exponent_primes;
  }
  z.value = prod + z.odd_exponent_primes;
  return z;
}

NilFactor classify_nilpotency(const RingPtr &r) {
  const auto profile = nilradical(r);
  NilFactor f;
  f.index = profile.index_of_nilpotency;
  f.even = f.index % 2 == 0;
  f.param = f.even ? f.index / 2 : (f.index + 1) / 2;
  f.power_size = profile.power_sizes[f.param - 1];
  return f;
}

NilBound nilradical_bound(const std::vector<RingPtr> &factors,
                          std::size_t direct_cap, const SolverOptions &opts) {
  if (factors.empty())
    throw PreconditionError("nilradical_bound needs at least one factor");
  NilBound nb;
  std::size_t prod = 1;
  for (const auto &f : factors) {
    nb.factors.push_back(classify_nilpotency(f));
    prod *= nb.factors.back().power_size;
    nb.odd_count += nb.factors.back().even ? 0 : 1;
  }
  nb.bound = prod + nb.odd_count;
  if (product_size(factors) <= direct_cap) {
    const RingPtr r = factors.size() == 1 ? factors.front()
                                          : make_product(factors);
    nb.direct_omega = max_clique(build_graph(r), opts).size();
    nb.holds = nb.bound <= *nb.direct_omega;
  }
  return nb;
}

AnCondition check_an_condition(const RingPtr &r, NilType type,
                               std::size_t param, const SolverOptions &opts) {
  const auto profile = nilradical(r);
  const std::size_t index = profile.index_of_nilpotency;
  const bool even = type == NilType::even_n;
  if (param == 0 || (even && index != 2 * param) ||
      (!even && index != 2 * param - 1))
    throw PreconditionError(
        "nilpotency parameter does not match index " + std::to_string(index) +
        " of " + r->label());

  const Ideal jp = ideal_power(profile.ideal, param);
  const Ideal jp1 = ideal_power(profile.ideal, param + 1);

  AnCondition ac;
  for (Vertex x = 0; x < r->size(); ++x)
    for (Vertex y = 0; y < r->size(); ++y) {
      const Element ex{x}, ey{y};
      if (r->mul(ex, ey).index != 0)
        continue;
      if (!jp.contains(ex) && !jp.contains(ey))
        ac.membership = false;
      if (even && !jp1.contains(ex) && !jp.contains(ey))
        ac.even_clause = false;
    }
  ac.holds = ac.membership && (!even || ac.even_clause);
  ac.bound = jp.size() + (even ? 0 : 1);
  if (ac.holds) {
    const BeckGraph g = build_graph(r);
    ac.omega = max_clique(g, opts).size();
    ac.chi = chromatic_number(g, opts).chi;
    ac.equality = *ac.omega == ac.bound && *ac.chi == ac.bound;
  }
  return ac;
}

AnCondition check_an_condition(const RingPtr &r, const SolverOptions &opts) {
  const auto f = classify_nilpotency(r);
  return check_an_condition(r, f.even ? NilType::even_n : NilType::odd_m,
                            f.param, opts);
}

ReducedCheck reduced_theorem_check(const RingPtr &r,
                                   const SolverOptions &opts) {
  ReducedCheck rc;
  rc.field_count = field_factor_count(r); // throws if not reduced
  const BeckGraph g = build_graph(r);
  rc.omega = max_clique(g, opts).size();
  rc.chi = chromatic_number(g, opts).chi;
  rc.consistent =
      rc.omega == rc.field_count + 1 && rc.chi == rc.field_count + 1;
  return rc;
}

CounterexampleReport
counterexample_family(const std::vector<RingPtr> &reduced_factors,
                      std::size_t direct_cap, const SolverOptions &opts) {
  for (const auto &f : reduced_factors)
    if (f->size() < 2 || !is_reduced(f))
      throw PreconditionError(f->label() +
                              " is not a nonzero reduced ring");
  std::vector<RingPtr> factors{make_an_ring()};
  factors.insert(factors.end(), reduced_factors.begin(),
                 reduced_factors.end());

  CounterexampleReport rep;
  rep.product_size = product_size(factors);
  rep.omega = omega_product_formula(factors, opts).predicted;
  if (rep.product_size <= direct_cap) {
    const RingPtr r =
        factors.size() == 1 ? factors.front() : make_product(factors);
    rep.direct_omega = max_clique(build_graph(r), opts).size();
  }

  std::vector<Coloring> colorings;
  std::size_t sum_chi = 0;
  for (const auto &f : factors) {
    auto fc = factor_coloring(f, SMode::min_s, opts);
    sum_chi += fc.chi;
    colorings.push_back(std::move(fc.coloring));
  }
  rep.chi_lower = sum_chi - (factors.size() - 1);
  rep.coloring_size = iterated_product_coloring(factors, colorings).k;
  rep.chi_certified = rep.chi_lower == rep.coloring_size;
  if (rep.chi_certified) {
    rep.chi = rep.chi_lower;
  } else {
    const RingPtr r =
        factors.size() == 1 ? factors.front() : make_product(factors);
    rep.chi = chromatic_number(build_graph(r), opts).chi;
  }
  rep.gap = static_cast<std::ptrdiff_t>(rep.chi) -
            static_cast<std::ptrdiff_t>(rep.omega);
  return rep;
}

} // namespace beckring
