#include "beckring/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "beckring/dsl.hpp"

namespace beckring {

namespace {

std::vector<std::string> format_all(const FiniteRing &r,
                                    const std::vector<Vertex> &vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (const Vertex v : vs)
    out.push_back(r.format(Element{v}));
  return out;
}

ReportCheck at_least(std::string name, std::size_t expected,
                     std::size_t actual) {
  return {std::move(name), static_cast<std::int64_t>(expected),
          static_cast<std::int64_t>(actual), expected <= actual};
}

ReportCheck at_most(std::string name, std::size_t expected,
                    std::size_t actual) {
  return {std::move(name), static_cast<std::int64_t>(expected),
          static_cast<std::int64_t>(actual), actual <= expected};
}

ReportCheck equal(std::string name, std::size_t expected, std::size_t actual) {
  return {std::move(name), static_cast<std::int64_t>(expected),
          static_cast<std::int64_t>(actual), expected == actual};
}

} // namespace

AnalysisReport analyze(const RingPtr &r, const AnalyzeOptions &opts) {
  const BeckGraph g = build_graph(r);
  AnalysisReport rep;
  rep.ring = r->label();
  rep.size = r->size();
  rep.local = is_local(*r);
  rep.reduced = is_reduced(r);
  rep.units = unit_count(*r);
  rep.zero_divisors = zero_divisor_count(*r);

  const auto nil = nilradical(r);
  rep.nilradical_size = nil.ideal.size();
  rep.nilradical_index = nil.index_of_nilpotency;
  rep.nilradical_power_sizes = nil.power_sizes;

  const Clique clique = max_clique(g, opts.solver);
  rep.omega = clique.size();
  rep.omega_witness = format_all(*r, clique.vertices);

  Coloring coloring;
  if (opts.s_mode == SMode::min_s) {
    auto m = min_s_optimal_coloring(g, opts.solver);
    rep.s = m.s;
    coloring = std::move(m.coloring);
  } else {
    coloring = chromatic_number(g, opts.solver).witness;
    rep.s = s_of(g, coloring);
  }
  rep.chi = coloring.k;
  for (const auto &cls : coloring.classes())
    rep.chi_classes.push_back(format_all(*r, cls));

  const CliqueSplit split = best_clique_split(g, opts.solver);
  rep.split_b = split.b.size();
  rep.split_c = split.c.size();

  rep.checks.push_back(at_least("omega<=chi", rep.omega, rep.chi));
  if (r->kind() == RingKind::zmod) {
    const auto zf = zn_formula(r->modulus());
    rep.checks.push_back(equal("zn_formula_omega", zf.value, rep.omega));
    rep.checks.push_back(equal("zn_formula_chi", zf.value, rep.chi));
  }
  if (rep.reduced && rep.size >= 2) {
    const std::size_t fields = field_factor_count(r);
    rep.checks.push_back(equal("reduced_omega", fields + 1, rep.omega));
    rep.checks.push_back(equal("reduced_chi", fields + 1, rep.chi));
  }
  const bool is_product =
      r->kind() == RingKind::product && r->factors().size() >= 2;
  if (rep.size >= 2) {
    const std::vector<RingPtr> parts =
        is_product ? r->factors() : std::vector<RingPtr>{r};
    const auto nb = nilradical_bound(parts, 0, opts.solver);
    rep.checks.push_back(at_least("nilradical_bound", nb.bound, rep.omega));
  }
  if (rep.size >= 2 && !is_product && rep.size <= opts.max_size) {
    const auto ac = check_an_condition(r, opts.solver);
    if (ac.holds) {
      rep.checks.push_back(equal("an_condition_omega", ac.bound, rep.omega));
      rep.checks.push_back(equal("an_condition_chi", ac.bound, rep.chi));
    }
  }
  if (is_product) {
    const auto pred = omega_product_formula(r->factors(), opts.solver);
    rep.checks.push_back(equal("product_omega", pred.predicted, rep.omega));
    const auto bounds = chi_bounds(r->factors(), opts.s_mode, opts.solver);
    rep.checks.push_back(at_least("chi_lower", bounds.lower, rep.chi));
    rep.checks.push_back(at_most("chi_upper", bounds.upper, rep.chi));
  }

  verify_witnesses(rep, *r);
  return rep;
}

void verify_witnesses(const AnalysisReport &rep, const FiniteRing &r) {
  std::map<std::string, Element> lookup;
  for (Vertex v = 0; v < r.size(); ++v)
    lookup.emplace(r.format(Element{v}), Element{v});
  const auto resolve = [&](const std::string &text) {
    const auto it = lookup.find(text);
    if (it == lookup.end())
      throw InternalError("witness element " + text + " is not in " +
                          r.label());
    return it->second;
  };

  std::vector<Element> clique;
  for (const auto &t : rep.omega_witness)
    clique.push_back(resolve(t));
  std::sort(clique.begin(), clique.end());
  if (std::adjacent_find(clique.begin(), clique.end()) != clique.end() ||
      clique.size() != rep.omega)
    throw InternalError("clique witness of " + r.label() +
                        " does not have omega distinct elements");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!r.is_zero(r.mul(clique[i], clique[j])))
        throw InternalError("clique witness of " + r.label() +
                            " has a nonzero product");

  if (rep.chi_classes.size() != rep.chi)
    throw InternalError("coloring witness of " + r.label() +
                        " does not have chi classes");
  std::vector<bool> seen(r.size(), false);
  for (const auto &cls : rep.chi_classes) {
    if (cls.empty())
      throw InternalError("coloring witness has an empty class");
    std::vector<Element> members;
    for (const auto &t : cls) {
      const Element e = resolve(t);
      if (seen[e.index])
        throw InternalError("coloring witness lists " + t + " twice");
      seen[e.index] = true;
      members.push_back(e);
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (r.is_zero(r.mul(members[i], members[j])))
          throw InternalError("coloring witness of " + r.label() +
                              " is not proper");
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InternalError("coloring witness of " + r.label() +
                        " misses an element");
}

Json to_json(const AnalysisReport &rep) {
  Json j;
  j["ring"] = rep.ring;
  j["size"] = rep.size;
  j["local"] = rep.local;
  j["reduced"] = rep.reduced;
  j["units"] = rep.units;
  j["zero_divisors"] = rep.zero_divisors;
  j["nilradical"] = {{"size", rep.nilradical_size},
                     {"index", rep.nilradical_index},
                     {"power_sizes", rep.nilradical_power_sizes}};
  j["omega"] = {{"value", rep.omega}, {"witness", rep.omega_witness}};
  j["chi"] = {{"value", rep.chi}, {"classes", rep.chi_classes}};
  j["split"] = {{"B", rep.split_b}, {"C", rep.split_c}};
  j["s"] = rep.s;
  Json checks = Json::array();
  for (const auto &c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  j["checks"] = std::move(checks);
  return j;
}

AnalysisReport report_from_json(const Json &j) {
  AnalysisReport rep;
  j.at("ring").get_to(rep.ring);
  j.at("size").get_to(rep.size);
  j.at("local").get_to(rep.local);
  j.at("reduced").get_to(rep.reduced);
  j.at("units").get_to(rep.units);
  j.at("zero_divisors").get_to(rep.zero_divisors);
  const auto &nil = j.at("nilradical");
  nil.at("size").get_to(rep.nilradical_size);
  nil.at("index").get_to(rep.nilradical_index);
  nil.at("power_sizes").get_to(rep.nilradical_power_sizes);
  j.at("omega").at("value").get_to(rep.omega);
  j.at("omega").at("witness").get_to(rep.omega_witness);
  j.at("chi").at("value").get_to(rep.chi);
  j.at("chi").at("classes").get_to(rep.chi_classes);
  j.at("split").at("B").get_to(rep.split_b);
  j.at("split").at("C").get_to(rep.split_c);
  j.at("s").get_to(rep.s);
  for (const auto &c : j.at("checks"))
    rep.checks.push_back(ReportCheck{c.at("name").get<std::string>(),
                                     c.at("expected").get<std::int64_t>(),
                                     c.at("actual").get<std::int64_t>(),
                                     c.at("pass").get<bool>()});
  return rep;
}

namespace {

std::string join(const std::vector<std::string> &items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += items[i];
  }
  return out + "}";
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string to_text(const AnalysisReport &rep) {
  std::ostringstream os;
  os << "ring           " << rep.ring << '\n'
     << "size           " << rep.size << '\n'
     << "local          " << yes_no(rep.local) << '\n'
     << "reduced        " << yes_no(rep.reduced) << '\n'
     << "units          " << rep.units << '\n'
     << "zero-divisors  " << rep.zero_divisors << '\n'
     << "nilradical     size " << rep.nilradical_size << ", index "
     << rep.nilradical_index << ", powers";
  for (const auto p : rep.nilradical_power_sizes)
    os << ' ' << p;
  os << '\n'
     << "omega          " << rep.omega << "  " << join(rep.omega_witness)
     << '\n'
     << "chi            " << rep.chi << '\n';
  for (std::size_t i = 0; i < rep.chi_classes.size(); ++i)
    os << "  class " << i << "      " << join(rep.chi_classes[i]) << '\n';
  os << "split          |B| = " << rep.split_b << ", |C| = " << rep.split_c
     << '\n'
     << "s              " << rep.s << '\n';
  for (const auto &c : rep.checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected "
       << c.expected << ", actual " << c.actual << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

std::vector<std::string> default_catalog() {
  return {"Z2", "Z3", "Z4", "Z8", "Z9", "Z12", "Z2[t]/(t^2)", "AN"};
}

std::vector<std::string> field_catalog() {
  return {"Z2", "Z3", "Z5", "Z7", "Z2[t]/(t^2+t+1)"};
}

std::vector<std::pair<std::string, StructureDescriptor>>
structure_rings_from_json(const Json &j) {
  if (!j.is_array())
    throw DescriptorError("structure file must hold a JSON array");
  std::vector<std::pair<std::string, StructureDescriptor>> out;
  for (const auto &entry : j) {
    StructureDescriptor d;
    entry.at("orders").get_to(d.additive_orders);
    entry.at("unity").get_to(d.unity);
    for (const auto &p : entry.at("products")) {
      if (!p.is_array() || p.size() != 3)
        throw DescriptorError("product entries are [i, j, [coords...]]");
      d.products[{p[0].get<std::size_t>(), p[1].get<std::size_t>()}] =
          p[2].get<Coords>();
    }
    if (entry.contains("basis"))
      entry.at("basis").get_to(d.basis_names);
    out.emplace_back(entry.value("name", std::string("structure")),
                     std::move(d));
  }
  return out;
}

namespace {

class Suite {
public:
  explicit Suite(const SuiteOptions &opts) : opts_(opts) {}

  void record(const std::string &theorem, bool pass,
              const std::string &instance) {
    auto it = std::find_if(result_.tallies.begin(), result_.tallies.end(),
                           [&](const SuiteTally &t) { return t.name == theorem; });
    if (it == result_.tallies.end()) {
      result_.tallies.push_back(SuiteTally{theorem});
      it = std::prev(result_.tallies.end());
    }
    if (pass) {
      ++it->passed;
    } else {
      ++it->failed;
      result_.failures.push_back(theorem + ": " + instance);
    }
  }

  SuiteResult run() {
    std::vector<RingPtr> singles;
    for (const auto &text : default_catalog())
      singles.push_back(dsl::parse_ring(text));
    std::vector<RingPtr> fields;
    for (const auto &text : field_catalog())
      fields.push_back(dsl::parse_ring(text));

    std::vector<RingPtr> checked = singles;
    checked.insert(checked.end(), fields.begin() + 2, fields.end());
    for (const auto &[name, desc] : opts_.extra_rings) {
      try {
        auto r = make_structure_ring(desc, name);
        r->validate();
        checked.push_back(std::move(r));
      } catch (const NotARingError &e) {
        record("ring_axioms", false, name + ": " + e.what());
        continue;
      } catch (const DescriptorError &e) {
        record("ring_axioms", false, name + ": " + e.what());
        continue;
      }
    }
    for (const auto &r : checked)
      axioms(r);
    for (const auto &r : checked)
      if (r->size() <= opts_.max_size)
        structure(r);
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i; j < singles.size(); ++j)
        if (singles[i]->size() * singles[j]->size() <= opts_.max_size) {
          const std::vector<RingPtr> pair{singles[i], singles[j]};
          const auto r = make_product(pair);
          if (r->size() <= 64)
            structure(r);
          product_omega(pair, r);
          sandwich(pair, r);
          nil_bound(pair, r);
        }
    for (std::size_t i = 0; i < singles.size(); ++i)
      for (std::size_t j = i; j < singles.size(); ++j)
        for (std::size_t k = j; k < singles.size(); ++k)
          if (singles[i]->size() * singles[j]->size() * singles[k]->size() <=
              opts_.max_size) {
            const std::vector<RingPtr> triple{singles[i], singles[j],
                                              singles[k]};
            product_omega(triple, make_product(triple));
          }
    zn();
    crt();
    reduced(fields);
    counterexamples();
    return std::move(result_);
  }

private:
  void axioms(const RingPtr &r) {
    if (r->size() > kValidationCap) {
      record("ring_axioms", true, r->label());
      return;
    }
    try {
      r->validate();
      record("ring_axioms", true, r->label());
    } catch (const NotARingError &e) {
      record("ring_axioms", false, r->label() + ": " + e.what());
    }
  }

  void structure(const RingPtr &r) {
    const BeckGraph g = build_graph(r);
    const Graph &gr = g.graph();
    bool dominates = true, pendant = true;
    for (Vertex v = 1; v < g.order(); ++v) {
      dominates = dominates && gr.adjacent(0, v);
      if (!g.zero_divisors().test(v))
        pendant = pendant && gr.degree(v) == 1;
    }
    record("zero_dominates", dominates, r->label());
    record("non_zero_divisor_degree", pendant, r->label());

    const std::size_t omega = max_clique(gr, opts_.solver).size();
    const std::size_t chi = chromatic_number(gr, opts_.solver).chi;
    record("omega<=chi", omega <= chi,
           r->label() + " omega " + std::to_string(omega) + " chi " +
               std::to_string(chi));
    if (r->size() >= 2) {
      const CoreGraph c = core(g);
      const std::size_t core_omega =
          std::max<std::size_t>(max_clique(c.graph, opts_.solver).size(), 2);
      const std::size_t core_chi = std::max<std::size_t>(
          chromatic_number(c.graph, opts_.solver).chi, 2);
      record("core_reduction", core_omega == omega && core_chi == chi,
             r->label());
    }
  }

  void product_omega(const std::vector<RingPtr> &factors, const RingPtr &r) {
    const auto pred = omega_product_formula(factors, opts_.solver);
    const std::size_t direct = max_clique(build_graph(r), opts_.solver).size();
    record("product_omega", pred.predicted == direct,
           r->label() + " predicted " + std::to_string(pred.predicted) +
               " direct " + std::to_string(direct));
  }

  void sandwich(const std::vector<RingPtr> &pair, const RingPtr &r) {
    const BeckGraph g = build_graph(r);
    if (core(g).graph.order() > 64)
      return;
    const auto bounds = chi_bounds(pair, SMode::min_s, opts_.solver);
    const std::size_t chi = chromatic_number(g, opts_.solver).chi;
    const Coloring built =
        product_coloring(*pair[0], bounds.factors[0].coloring, *pair[1],
                         bounds.factors[1].coloring);
    const bool ok = bounds.lower <= chi && chi <= bounds.upper &&
                    built.k == bounds.upper && is_proper(g.graph(), built);
    record("chi_sandwich", ok,
           r->label() + " [" + std::to_string(bounds.lower) + ", " +
               std::to_string(bounds.upper) + "] chi " + std::to_string(chi));
  }

  void nil_bound(const std::vector<RingPtr> &pair, const RingPtr &r) {
    const auto nb = nilradical_bound(pair, opts_.max_size, opts_.solver);
    if (!nb.direct_omega)
      return;
    bool ok = nb.holds;
    bool all_hold = true;
    for (const auto &f : pair)
      all_hold = all_hold && check_an_condition(f, opts_.solver).holds;
    if (all_hold)
      ok = ok && nb.bound == *nb.direct_omega;
    record("nilradical_bound", ok,
           r->label() + " bound " + std::to_string(nb.bound) + " omega " +
               std::to_string(*nb.direct_omega));
  }

  void zn() {
    const std::size_t omega_max = std::min<std::size_t>(100, opts_.max_size);
    const std::size_t chi_max = std::min<std::size_t>(60, opts_.max_size);
    for (std::uint32_t n = 1; n <= omega_max; ++n) {
      const BeckGraph g = build_graph(make_zmod(n));
      const auto f = zn_formula(n).value;
      const std::size_t omega = max_clique(g, opts_.solver).size();
      bool ok = f == omega;
      std::string detail = "Z" + std::to_string(n) + " formula " +
                           std::to_string(f) + " omega " +
                           std::to_string(omega);
      if (n <= chi_max) {
        const std::size_t chi = chromatic_number(g, opts_.solver).chi;
        ok = ok && f == chi;
        detail += " chi " + std::to_string(chi);
      }
      record("zn_formula", ok, detail);
    }
  }

  void crt() {
    const std::pair<std::uint32_t, std::uint32_t> coprime[] = {
        {2, 3}, {3, 4}, {2, 5}, {4, 5}, {3, 8}, {4, 9}, {5, 8}, {7, 8}};
    for (const auto &[p, q] : coprime) {
      if (std::size_t{p} * q > opts_.max_size)
        continue;
      const auto a = build_graph(make_zmod(p * q));
      const auto b = build_graph(make_product({make_zmod(p), make_zmod(q)}));
      const bool ok =
          max_clique(a, opts_.solver).size() ==
              max_clique(b, opts_.solver).size() &&
          chromatic_number(a, opts_.solver).chi ==
              chromatic_number(b, opts_.solver).chi;
      record("crt", ok, "Z" + std::to_string(p * q));
    }
  }

  void reduced(const std::vector<RingPtr> &fields) {
    const std::size_t n = fields.size();
    const auto check = [&](std::vector<RingPtr> fs) {
      const RingPtr r = fs.size() == 1 ? fs.front() : make_product(fs);
      if (r->size() > opts_.max_size)
        return;
      const auto rc = reduced_theorem_check(r, opts_.solver);
      record("reduced_equality",
             rc.consistent && rc.field_count == fs.size(),
             r->label() + " omega " + std::to_string(rc.omega) + " chi " +
                 std::to_string(rc.chi));
    };
    for (std::size_t i = 0; i < n; ++i) {
      check({fields[i]});
      for (std::size_t j = i; j < n; ++j) {
        check({fields[i], fields[j]});
        for (std::size_t k = j; k < n; ++k)
          check({fields[i], fields[j], fields[k]});
      }
    }
  }

  void counterexamples() {
    const std::vector<std::vector<std::string>> families = {
        {}, {"Z2"}, {"Z3"}, {"Z2", "Z2"}};
    for (const auto &family : families) {
      std::vector<RingPtr> fs;
      std::string label = "AN";
      std::size_t size = 32;
      for (const auto &t : family) {
        fs.push_back(dsl::parse_ring(t));
        label += " x " + t;
        size *= fs.back()->size();
      }
      if (size > std::max<std::size_t>(opts_.max_size, 32))
        continue;
      const auto rep = counterexample_family(fs, 128, opts_.solver);
      const bool ok = rep.gap == 1 && rep.chi_certified &&
                      (!rep.direct_omega || *rep.direct_omega == rep.omega);
      record("counterexample_family", ok,
             label + " omega " + std::to_string(rep.omega) + " chi " +
                 std::to_string(rep.chi));
    }
  }

  const SuiteOptions &opts_;
  SuiteResult result_;
};

} // namespace

SuiteResult run_verify_suite(const SuiteOptions &opts) {
  return Suite(opts).run();
}

} // namespace beckring
