#include <algorithm>

#include "solver_detail.hpp"

namespace beckring {

namespace detail {

namespace {

struct NodeLimitReached {};

class ColorSearch {
public:
  ColorSearch(const Graph &g, std::size_t k, const Bitset *marked,
              std::size_t s, Deadline &deadline, std::size_t node_limit)
      : n_(g.order()), k_(k), s_(marked != nullptr ? s : k), marked_(marked),
        deadline_(deadline), node_limit_(node_limit), adj_(n_),
        degree_(n_), color_(n_, kNone), forbid_(n_ * k, 0), avail_(n_),
        used_(k, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      g.neighbors(v).for_each(
          [&](std::size_t u) { adj_[v].push_back(static_cast<Vertex>(u)); });
      degree_[v] = adj_[v].size();
      avail_[v] = restricted(v) ? s_ : k_;
    }
    remaining_ = n_;
  }

  bool precolor(const std::vector<Vertex> &vertices) {
    for (std::size_t c = 0; c < vertices.size(); ++c) {
      const Vertex v = vertices[c];
      if (c >= k_ || !allowed(v, c))
        return false;
      assign(v, c);
      --remaining_;
    }
    return true;
  }

  std::optional<std::vector<std::size_t>> run() {
    if (!search())
      return std::nullopt;
    return color_;
  }

private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool restricted(Vertex v) const {
    return marked_ != nullptr && marked_->test(v);
  }
  bool allowed(Vertex v, std::size_t c) const {
    return forbid_[v * k_ + c] == 0 && (c < s_ || !restricted(v));
  }

  void assign(Vertex v, std::size_t c) {
    color_[v] = c;
    ++used_[c];
    for (const Vertex u : adj_[v]) {
      if (forbid_[u * k_ + c]++ == 0 && (c < s_ || !restricted(u)))
        --avail_[u];
    }
  }

  void unassign(Vertex v, std::size_t c) {
    color_[v] = kNone;
    --used_[c];
    for (const Vertex u : adj_[v]) {
      if (--forbid_[u * k_ + c] == 0 && (c < s_ || !restricted(u)))
        ++avail_[u];
    }
  }

  bool search() {
    if (remaining_ == 0)
      return true;
    deadline_.poll();
    if (node_limit_ != 0 && ++nodes_ > node_limit_)
      throw NodeLimitReached{};

    // Fewest available colours first; then highest degree, lowest id.
    Vertex pick = 0;
    std::size_t best_avail = kNone;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != kNone)
        continue;
      if (avail_[v] < best_avail ||
          (avail_[v] == best_avail && degree_[v] > degree_[pick])) {
        pick = v;
        best_avail = avail_[v];
      }
    }
    if (best_avail == 0)
      return false;

    // Unused colours are interchangeable within [0, s) and within [s, k).
    bool fresh_low = false;
    bool fresh_high = false;
    --remaining_;
    for (std::size_t c = 0; c < k_; ++c) {
      if (!allowed(pick, c))
        continue;
      if (used_[c] == 0) {
        bool &fresh = c < s_ ? fresh_low : fresh_high;
        if (fresh)
          continue;
        fresh = true;
      }
      assign(pick, c);
      if (search())
        return true;
      unassign(pick, c);
    }
    ++remaining_;
    return false;
  }

  std::size_t n_, k_, s_;
  const Bitset *marked_;
  Deadline &deadline_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  std::size_t remaining_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> color_;
  std::vector<std::uint16_t> forbid_;
  std::vector<std::size_t> avail_;
  std::vector<std::size_t> used_;
};

} // namespace

std::optional<std::vector<std::size_t>>
color_search(const Graph &g, std::size_t k, const Bitset *marked,
             std::size_t s, const std::vector<Vertex> &precolor,
             Deadline &deadline, std::size_t node_limit, bool *exhausted) {
  if (exhausted != nullptr)
    *exhausted = false;
  if (g.order() == 0)
    return std::vector<std::size_t>{};
  if (k == 0)
    return std::nullopt;
  ColorSearch search(g, k, marked, s, deadline, node_limit);
  if (!search.precolor(precolor))
    return std::nullopt;
  try {
    return search.run();
  } catch (const NodeLimitReached &) {
    if (exhausted != nullptr)
      *exhausted = true;
    return std::nullopt;
  }
}

} // namespace detail

namespace {

// Renumbers classes to 0..k-1 in order of their original index, dropping
// empty ones.
Coloring compact(std::vector<std::size_t> class_of) {
  std::size_t max_class = 0;
  for (const auto c : class_of)
    max_class = std::max(max_class, c + 1);
  std::vector<std::size_t> remap(max_class, 0);
  std::vector<bool> used(max_class, false);
  for (const auto c : class_of)
    used[c] = true;
  std::size_t k = 0;
  for (std::size_t c = 0; c < max_class; ++c)
    if (used[c])
      remap[c] = k++;
  for (auto &c : class_of)
    c = remap[c];
  return Coloring{std::move(class_of), k};
}

Coloring lift(const detail::TwinQuotient &q,
              const std::vector<std::size_t> &quotient_colors) {
  std::vector<std::size_t> class_of(q.class_of.size());
  for (std::size_t v = 0; v < class_of.size(); ++v)
    class_of[v] = quotient_colors[q.class_of[v]];
  return compact(std::move(class_of));
}

} // namespace

std::vector<std::vector<Vertex>> Coloring::classes() const {
  std::vector<std::vector<Vertex>> out(k);
  for (std::size_t v = 0; v < class_of.size(); ++v)
    if (class_of[v] < k)
      out[class_of[v]].push_back(static_cast<Vertex>(v));
  return out;
}

bool is_proper(const Graph &g, const Coloring &c) {
  if (c.class_of.size() != g.order())
    return false;
  std::vector<bool> seen(c.k, false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.class_of[v] >= c.k)
      return false;
    seen[c.class_of[v]] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    return false;
  for (const auto &[u, v] : g.edges())
    if (c.class_of[u] == c.class_of[v])
      return false;
  return true;
}

std::size_t marked_class_count(const Coloring &c, const Bitset &marked) {
  std::vector<bool> hit(c.k, false);
  marked.for_each([&](std::size_t v) {
    if (v < c.class_of.size() && c.class_of[v] < c.k)
      hit[c.class_of[v]] = true;
  });
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), true));
}

Coloring dsatur(const Graph &g) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(n, kNone);
  std::vector<Bitset> neighbour_colors(n, Bitset(n + 1));
  std::vector<std::size_t> sat(n, 0);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v)
    degree[v] = g.degree(v);

  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] != kNone)
        continue;
      if (!found || sat[v] > sat[pick] ||
          (sat[v] == sat[pick] && degree[v] > degree[pick])) {
        pick = v;
        found = true;
      }
    }
    std::size_t c = 0;
    while (neighbour_colors[pick].test(c))
      ++c;
    color[pick] = c;
    g.neighbors(pick).for_each([&](std::size_t u) {
      if (!neighbour_colors[u].test(c)) {
        neighbour_colors[u].set(c);
        ++sat[u];
      }
    });
  }
  return compact(std::move(color));
}

ChromaticResult chromatic_number(const Graph &g, const SolverOptions &opts) {
  if (g.order() == 0)
    return ChromaticResult{0, Coloring{}};
  detail::Deadline deadline(opts.budget_seconds);
  const auto q = detail::false_twin_quotient(g, nullptr);

  const Coloring upper = dsatur(q.graph);
  std::vector<Vertex> clique;
  try {
    const std::vector<std::uint64_t> unit(q.graph.order(), 1);
    clique = detail::max_weight_clique(q.graph, unit, deadline);
  } catch (const BudgetError &e) {
    throw BudgetError("chromatic number search ran out of budget", e.lower(),
                      upper.k);
  }

  for (std::size_t k = clique.size(); k < upper.k; ++k) {
    std::optional<std::vector<std::size_t>> found;
    try {
      found = detail::color_search(q.graph, k, nullptr, k, clique, deadline);
    } catch (const detail::Timeout &) {
      throw BudgetError("chromatic number search ran out of budget", k,
                        upper.k);
    }
    if (found) {
      auto witness = lift(q, *found);
      return ChromaticResult{witness.k, std::move(witness)};
    }
  }
  auto witness = lift(q, upper.class_of);
  return ChromaticResult{witness.k, std::move(witness)};
}

MinSColoring min_marked_coloring(const Graph &g, const Bitset &marked,
                                 const SolverOptions &opts) {
  auto chi = chromatic_number(g, opts);
  MinSColoring best{chi.witness, marked_class_count(chi.witness, marked),
                    true};
  if (g.order() == 0)
    return best;

  detail::Deadline deadline(opts.budget_seconds);
  const auto q = detail::false_twin_quotient(g, &marked);
  const bool unlimited = q.graph.order() <= opts.exhaustive_s_cap;
  const std::size_t limit = unlimited ? 0 : opts.s_search_node_limit;

  const std::size_t lowest = marked.any() ? 1 : 0;
  bool proven_below = true;
  for (std::size_t s = lowest; s < best.s; ++s) {
    bool exhausted = false;
    std::optional<std::vector<std::size_t>> found;
    try {
      found = detail::color_search(q.graph, chi.chi, &q.marked, s, {},
                                   deadline, limit, &exhausted);
    } catch (const detail::Timeout &) {
      throw BudgetError("s minimisation ran out of budget",
                        proven_below ? s : lowest, best.s);
    }
    if (found) {
      auto coloring = lift(q, *found);
      best.s = marked_class_count(coloring, marked);
      best.coloring = std::move(coloring);
      break;
    }
    if (exhausted)
      proven_below = false;
  }
  best.exact = proven_below;
  return best;
}

} // namespace beckring
