#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "beckring/dsl.hpp"
#include "beckring/report.hpp"

namespace beckring {

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kCapacity = 3, kBudget = 4,
            kVerify = 5 };

class UsageError : public Error {
public:
  using Error::Error;
};

struct GlobalFlags {
  bool json = false;
  std::optional<double> budget;
  std::string s_mode = "min";
  std::optional<std::size_t> max_size;

  SolverOptions solver() const {
    SolverOptions o = SolverOptions::from_env();
    if (budget)
      o.budget_seconds = *budget;
    return o;
  }
  SMode mode() const {
    return s_mode == "any" ? SMode::any_optimal : SMode::min_s;
  }
  std::size_t size_limit(std::size_t fallback) const {
    return max_size.value_or(fallback);
  }
};

std::vector<RingPtr> factors_of(const dsl::RingExpr &e) {
  std::vector<RingPtr> out;
  for (const auto &a : e.factors)
    out.push_back(dsl::elaborate(a));
  return out;
}

std::string format_tuple(const std::vector<RingPtr> &factors,
                         const std::vector<Element> &parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? ", " : "") + factors[i]->format(parts[i]);
  return s + ")";
}

std::string element_list(const FiniteRing &r,
                         const std::vector<Element> &elements) {
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i)
    s += (i ? ", " : "") + r.format(elements[i]);
  return s + "}";
}

std::vector<std::string> element_strings(const FiniteRing &r,
                                         const std::vector<Element> &es) {
  std::vector<std::string> out;
  for (const Element e : es)
    out.push_back(r.format(e));
  return out;
}

void emit(std::ostream &out, const Json &j) { out << j.dump(2) << '\n'; }

// --- commands --------------------------------------------------------------

int cmd_analyze(const GlobalFlags &g, const std::string &text,
                std::ostream &out) {
  const RingPtr r = dsl::parse_ring(text);
  AnalyzeOptions opts;
  opts.s_mode = g.mode();
  opts.max_size = g.size_limit(opts.max_size);
  opts.solver = g.solver();
  const AnalysisReport rep = analyze(r, opts);
  verify_witnesses(rep, *r);
  if (g.json)
    emit(out, to_json(rep));
  else
    out << to_text(rep);
  const bool ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                              [](const ReportCheck &c) { return c.pass; });
  return ok ? kOk : kVerify;
}

int cmd_predict_omega(const GlobalFlags &g, const std::string &text,
                      std::ostream &out) {
  const auto expr = dsl::parse(text);
  if (!expr.is_product())
    throw UsageError("predict-omega needs a product of at least two rings");
  const auto factors = factors_of(expr);
  const auto solver = g.solver();
  const auto pred = omega_product_formula(factors, solver);
  const RingPtr r = make_product(factors);

  std::optional<std::size_t> direct;
  if (r->size() <= g.size_limit(1024))
    direct = max_clique(build_graph(r), solver).size();
  const bool pass = !direct || *direct == pred.predicted;

  std::size_t prod_b = 1, sum_c = 0;
  for (const auto &f : pred.factors) {
    prod_b *= f.b.size();
    sum_c += f.c.size();
  }

  if (g.json) {
    Json j;
    j["ring"] = r->label();
    Json fs = Json::array();
    for (std::size_t i = 0; i < factors.size(); ++i)
      fs.push_back({{"ring", factors[i]->label()},
                    {"omega", pred.factors[i].omega},
                    {"B", element_strings(*factors[i], pred.factors[i].b)},
                    {"C", element_strings(*factors[i], pred.factors[i].c)}});
    j["factors"] = std::move(fs);
    j["predicted"] = pred.predicted;
    j["direct"] = direct ? Json(*direct) : Json(nullptr);
    Json w = Json::array();
    for (const auto &t : pred.witness)
      w.push_back(format_tuple(factors, t));
    j["witness"] = std::move(w);
    j["pass"] = pass;
    emit(out, j);
  } else {
    out << "ring       " << r->label() << '\n';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto &f = pred.factors[i];
      out << "factor     " << factors[i]->label() << ": omega " << f.omega
          << ", B = " << element_list(*factors[i], f.b)
          << ", C = " << element_list(*factors[i], f.c) << '\n';
    }
    out << "predicted  " << pred.predicted << " = " << prod_b << " + "
        << sum_c << '\n';
    if (direct)
      out << "direct     " << *direct << '\n';
    else
      out << "direct     skipped (" << r->size() << " elements)\n";
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kVerify;
}

int cmd_bound_chi(const GlobalFlags &g, const std::string &text,
                  std::ostream &out) {
  const auto expr = dsl::parse(text);
  if (!expr.is_product())
    throw UsageError("bound-chi needs a product of at least two rings");
  const auto factors = factors_of(expr);
  const auto solver = g.solver();
  const auto bounds = chi_bounds(factors, g.mode(), solver);
  std::vector<Coloring> colorings;
  for (const auto &f : bounds.factors)
    colorings.push_back(f.coloring);
  const Coloring built = iterated_product_coloring(factors, colorings);
  const RingPtr r = make_product(factors);

  std::optional<std::size_t> direct;
  if (r->size() <= g.size_limit(1024))
    direct = chromatic_number(build_graph(r), solver).chi;
  const bool pass = built.k == bounds.upper &&
                    (!direct || (bounds.lower <= *direct &&
                                 *direct <= bounds.upper));

  if (g.json) {
    Json j;
    j["ring"] = r->label();
    j["s_mode"] = g.s_mode;
    Json fs = Json::array();
    for (std::size_t i = 0; i < factors.size(); ++i)
      fs.push_back({{"ring", factors[i]->label()},
                    {"chi", bounds.factors[i].chi},
                    {"s", bounds.factors[i].s},
                    {"s_exact", bounds.factors[i].s_exact}});
    j["factors"] = std::move(fs);
    j["lower"] = bounds.lower;
    j["upper"] = bounds.upper;
    j["coloring_size"] = built.k;
    j["direct"] = direct ? Json(*direct) : Json(nullptr);
    j["pass"] = pass;
    emit(out, j);
  } else {
    out << "ring       " << r->label() << '\n';
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto &f = bounds.factors[i];
      out << "factor     " << factors[i]->label() << ": chi " << f.chi
          << ", s " << f.s << (f.s_exact ? "" : " (not proven minimal)")
          << '\n';
    }
    out << "lower      " << bounds.lower << '\n'
        << "upper      " << bounds.upper << '\n'
        << "coloring   " << built.k << " colors, verified proper\n";
    if (direct)
      out << "direct     " << *direct << '\n';
    else
      out << "direct     skipped (" << r->size() << " elements)\n";
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kVerify;
}

int cmd_zn(const GlobalFlags &g, std::uint64_t n, std::ostream &out) {
  if (n == 0)
    throw InvalidModulusError("modulus must be at least 1");
  const auto f = zn_formula(n);
  if (n > kDefaultSizeCap || n > g.size_limit(kDefaultSizeCap))
    throw CapacityError("Z" + std::to_string(n) + " exceeds the size cap");
  const auto solver = g.solver();
  const BeckGraph graph = build_graph(make_zmod(static_cast<std::uint32_t>(n)));
  const std::size_t omega = max_clique(graph, solver).size();
  const std::size_t chi = chromatic_number(graph, solver).chi;
  const bool pass = omega == f.value && chi == f.value;

  std::ostringstream fact;
  for (std::size_t i = 0; i < f.factorization.size(); ++i)
    fact << (i ? " * " : "") << f.factorization[i].prime << '^'
         << f.factorization[i].exponent;

  if (g.json) {
    Json j;
    j["n"] = n;
    Json fs = Json::array();
    for (const auto &pp : f.factorization)
      fs.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
    j["factorization"] = std::move(fs);
    j["odd_exponent_primes"] = f.odd_exponent_primes;
    j["formula"] = f.value;
    j["omega"] = omega;
    j["chi"] = chi;
    j["pass"] = pass;
    emit(out, j);
  } else {
    out << "n          " << n << (fact.str().empty() ? "" : " = ")
        << fact.str() << '\n'
        << "formula    " << f.value << '\n'
        << "omega      " << omega << '\n'
        << "chi        " << chi << '\n'
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kOk : kVerify;
}

int cmd_counterexample(const GlobalFlags &g,
                       const std::vector<std::string> &texts,
                       std::ostream &out) {
  std::vector<RingPtr> factors;
  for (const auto &t : texts)
    for (auto &f : factors_of(dsl::parse(t)))
      factors.push_back(std::move(f));
  const auto rep =
      counterexample_family(factors, g.size_limit(128), g.solver());
  std::string label = "AN";
  for (const auto &f : factors)
    label += " x " + f->label();
  const bool pass = rep.chi_certified &&
                    (!rep.direct_omega || *rep.direct_omega == rep.omega);

  if (g.json) {
    Json j;
    j["ring"] = label;
    j["size"] = rep.product_size;
    j["omega"] = rep.omega;
    j["direct_omega"] =
        rep.direct_omega ? Json(*rep.direct_omega) : Json(nullptr);
    j["chi_lower"] = rep.chi_lower;
    j["coloring_size"] = rep.coloring_size;
    j["chi_certified"] = rep.chi_certified;
    j["chi"] = rep.chi;
    j["gap"] = rep.gap;
    emit(out, j);
  } else {
    out << "ring       " << label << '\n'
        << "size       " << rep.product_size << '\n'
        << "omega      " << rep.omega;
    if (rep.direct_omega)
      out << " (direct " << *rep.direct_omega << ")";
    out << '\n'
        << "chi        " << rep.chi
        << (rep.chi_certified ? " (lower bound meets coloring)" : "") << '\n'
        << "lower      " << rep.chi_lower << '\n'
        << "coloring   " << rep.coloring_size << " colors\n"
        << "gap        " << rep.gap << '\n';
  }
  return pass ? kOk : kVerify;
}

int cmd_export(const std::string &text, const std::string &format,
               const std::string &path, std::ostream &out) {
  const RingPtr r = dsl::parse_ring(text);
  const auto data = export_graph(
      build_graph(r), format == "json" ? ExportFormat::json
                                       : ExportFormat::dimacs);
  if (path.empty() || path == "-") {
    out << data;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw UsageError("cannot open " + path + " for writing");
  file << data;
  return kOk;
}

int cmd_verify_suite(const GlobalFlags &g, const std::string &structure_path,
                     std::ostream &out) {
  SuiteOptions opts;
  opts.max_size = g.size_limit(opts.max_size);
  opts.solver = g.solver();
  if (!structure_path.empty()) {
    std::ifstream file(structure_path);
    if (!file)
      throw UsageError("cannot open " + structure_path);
    opts.extra_rings = structure_rings_from_json(Json::parse(file));
  }
  const SuiteResult res = run_verify_suite(opts);
  if (g.json) {
    Json j;
    Json ts = Json::array();
    for (const auto &t : res.tallies)
      ts.push_back(
          {{"name", t.name}, {"passed", t.passed}, {"failed", t.failed}});
    j["theorems"] = std::move(ts);
    j["failures"] = res.failures;
    j["pass"] = res.ok();
    emit(out, j);
  } else {
    for (const auto &t : res.tallies)
      out << (t.failed == 0 ? "PASS " : "FAIL ") << t.name << ' '
          << t.passed << '/' << t.passed + t.failed << '\n';
    for (const auto &f : res.failures)
      out << "failed: " << f << '\n';
    out << (res.ok() ? "all checks passed" : "verification failed") << '\n';
  }
  return res.ok() ? kOk : kVerify;
}

void print_parse_error(const ParseError &e, const std::string &text,
                       std::ostream &err) {
  err << "error: " << e.what() << '\n';
  if (!text.empty() && e.offset() <= text.size())
    err << "  " << text << '\n'
        << "  " << std::string(e.offset(), ' ') << "^\n";
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Zero-divisor graph invariants of finite commutative rings",
               "beckring"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--budget", g.budget,
                 "Wall-clock budget per exact solve, in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--s-mode", g.s_mode,
                 "Coloring used for s: any optimal or minimum s")
      ->check(CLI::IsMember({"any", "min"}));
  app.add_option("--max-size", g.max_size,
                 "Largest ring solved directly for cross-checks")
      ->check(CLI::PositiveNumber);

  std::string expr;
  std::uint64_t modulus = 0;
  std::vector<std::string> factor_texts;
  std::string format = "dimacs";
  std::string output;
  std::string structure_path;

  auto *analyze_cmd = app.add_subcommand("analyze", "Report invariants of a ring");
  analyze_cmd->add_option("ring", expr, "Ring expression")->required();
  auto *predict_cmd = app.add_subcommand(
      "predict-omega", "Product clique formula against a direct solve");
  predict_cmd->add_option("ring", expr, "Product expression")->required();
  auto *bound_cmd = app.add_subcommand(
      "bound-chi", "Chromatic bounds and explicit coloring of a product");
  bound_cmd->add_option("ring", expr, "Product expression")->required();
  auto *zn_cmd = app.add_subcommand("zn", "Closed form for Z_N against solvers");
  zn_cmd->add_option("N", modulus, "Modulus")->required();
  auto *counter_cmd = app.add_subcommand(
      "counterexample", "AN times reduced rings: omega, chi and gap");
  counter_cmd->add_option("factors", factor_texts, "Reduced ring expressions");
  auto *export_cmd = app.add_subcommand("export", "Write the zero-divisor graph");
  export_cmd->add_option("ring", expr, "Ring expression")->required();
  export_cmd->add_option("--format", format, "dimacs or json")
      ->check(CLI::IsMember({"dimacs", "json"}));
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  auto *suite_cmd = app.add_subcommand(
      "verify-suite", "Run every check over the built-in catalog");
  suite_cmd->add_option("--structure", structure_path,
                        "JSON file of extra structure-constant rings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*analyze_cmd)
      return cmd_analyze(g, expr, out);
    if (*predict_cmd)
      return cmd_predict_omega(g, expr, out);
    if (*bound_cmd)
      return cmd_bound_chi(g, expr, out);
    if (*zn_cmd)
      return cmd_zn(g, modulus, out);
    if (*counter_cmd)
      return cmd_counterexample(g, factor_texts, out);
    if (*export_cmd)
      return cmd_export(expr, format, output, out);
    if (*suite_cmd)
      return cmd_verify_suite(g, structure_path, out);
  } catch (const ParseError &e) {
    print_parse_error(e, expr, err);
    return kParse;
  } catch (const InvalidModulusError &e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const nlohmann::json::exception &e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityError &e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const BudgetError &e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const NotARingError &e) {
    err << "error: " << e.what() << '\n';
    return kVerify;
  } catch (const DescriptorError &e) {
    err << "error: " << e.what() << '\n';
    return kVerify;
  } catch (const InternalError &e) {
    err << "error: " << e.what() << '\n';
    return kVerify;
  } catch (const ContractError &e) {
    err << "error: " << e.what() << '\n';
    return kVerify;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace beckring
