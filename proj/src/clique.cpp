#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

#include "solver_detail.hpp"

namespace beckring {

namespace detail {

TwinQuotient false_twin_quotient(const Graph &g, const Bitset *marked) {
  const std::size_t n = g.order();
  TwinQuotient q;
  q.class_of.assign(n, 0);
  std::map<std::vector<std::uint64_t>, Vertex> by_row;
  std::vector<std::vector<Vertex>> members;
  for (Vertex v = 0; v < n; ++v) {
    const auto words = g.neighbors(v).words();
    std::vector<std::uint64_t> key(words.begin(), words.end());
    auto [it, inserted] =
        by_row.emplace(std::move(key), static_cast<Vertex>(members.size()));
    if (inserted)
      members.emplace_back();
    members[it->second].push_back(v);
    q.class_of[v] = it->second;
  }
  q.marked = Bitset(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    Vertex rep = members[c].front();
    if (marked != nullptr) {
      for (const Vertex v : members[c])
        if (marked->test(v)) {
          rep = v;
          q.marked.set(c);
          break;
        }
    }
    q.rep.push_back(rep);
  }
  q.graph = g.induced(q.rep);
  return q;
}

namespace {

class CliqueSearch {
public:
  CliqueSearch(const Graph &g, const std::vector<std::uint64_t> &w,
               Deadline &deadline)
      : deadline_(deadline) {
    const std::size_t n = g.order();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<Vertex> position(n);
    for (std::size_t i = 0; i < n; ++i)
      position[order_[i]] = static_cast<Vertex>(i);
    adj_.assign(n, Bitset(n));
    weight_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      weight_[i] = w[order_[i]];
      g.neighbors(order_[i]).for_each(
          [&](std::size_t u) { adj_[i].set(position[u]); });
    }
  }

  std::vector<Vertex> run(std::size_t *upper_bound) {
    const std::size_t n = adj_.size();
    if (n == 0)
      return {};
    // Greedy seed in search order.
    Bitset cand(n);
    cand.set_all();
    for (std::size_t v = cand.first(); v != Bitset::npos;
         v = cand.next_from(v + 1)) {
      best_.push_back(static_cast<Vertex>(v));
      best_weight_ += weight_[v];
      cand &= adj_[v];
    }
    Bitset all(n);
    all.set_all();
    if (upper_bound != nullptr)
      *upper_bound = colour_class_count(all);
    expand(all);
    std::vector<Vertex> out;
    for (const Vertex v : best_)
      out.push_back(order_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t best_size() const { return best_.size(); }

private:
  std::size_t colour_class_count(Bitset p) const {
    std::size_t k = 0;
    while (p.any()) {
      Bitset q = p;
      while (q.any()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        p.reset(v);
      }
      ++k;
    }
    return k;
  }

  void expand(Bitset p) {
    deadline_.poll();
    // Greedy sequential colouring; bound[i] is the summed class maxima up to
    // and including the class of list[i].
    std::vector<Vertex> list;
    std::vector<std::uint64_t> bound;
    {
      Bitset uncoloured = p;
      std::uint64_t total = 0;
      while (uncoloured.any()) {
        Bitset q = uncoloured;
        std::uint64_t class_max = 0;
        while (q.any()) {
          const std::size_t v = q.first();
          q.reset(v);
          q.subtract(adj_[v]);
          uncoloured.reset(v);
          list.push_back(static_cast<Vertex>(v));
          class_max = std::max(class_max, weight_[v]);
        }
        total += class_max;
        bound.resize(list.size(), total);
      }
    }
    for (std::size_t i = list.size(); i-- > 0;) {
      if (current_weight_ + bound[i] <= best_weight_)
        return;
      const Vertex v = list[i];
      current_.push_back(v);
      current_weight_ += weight_[v];
      Bitset next = p & adj_[v];
      if (next.none()) {
        if (current_weight_ > best_weight_) {
          best_ = current_;
          best_weight_ = current_weight_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      current_weight_ -= weight_[v];
      p.reset(v);
    }
  }

  Deadline &deadline_;
  std::vector<Vertex> order_;
  std::vector<Bitset> adj_;
  std::vector<std::uint64_t> weight_;
  std::vector<Vertex> current_, best_;
  std::uint64_t current_weight_ = 0, best_weight_ = 0;
};

} // namespace

std::vector<Vertex> max_weight_clique(const Graph &g,
                                      const std::vector<std::uint64_t> &w,
                                      Deadline &deadline,
                                      std::size_t *upper_bound) {
  CliqueSearch search(g, w, deadline);
  std::size_t ub = g.order();
  try {
    return search.run(&ub);
  } catch (const Timeout &) {
    if (upper_bound != nullptr)
      *upper_bound = ub;
    throw BudgetError("maximum clique search ran out of budget",
                      search.best_size(), ub);
  }
}

} // namespace detail

SolverOptions SolverOptions::from_env() {
  SolverOptions opts;
  if (const char *env = std::getenv("BECKRING_BUDGET")) {
    char *end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0)
      opts.budget_seconds = v;
  }
  return opts;
}

bool is_clique(const Graph &g, const std::vector<Vertex> &vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order())
      return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
        return false;
  }
  return true;
}

Clique max_clique(const Graph &g, const SolverOptions &opts) {
  detail::Deadline deadline(opts.budget_seconds);
  const auto q = detail::false_twin_quotient(g, nullptr);
  const std::vector<std::uint64_t> unit(q.graph.order(), 1);
  const auto found = detail::max_weight_clique(q.graph, unit, deadline);
  Clique c;
  for (const Vertex v : found)
    c.vertices.push_back(q.rep[v]);
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

Clique max_clique_most_marked(const Graph &g, const Bitset &marked,
                              const SolverOptions &opts) {
  detail::Deadline deadline(opts.budget_seconds);
  const auto q = detail::false_twin_quotient(g, &marked);
  // Size dominates: one extra vertex outweighs every possible mark.
  const std::uint64_t unit = q.graph.order() + 1;
  std::vector<std::uint64_t> w(q.graph.order());
  for (std::size_t v = 0; v < w.size(); ++v)
    w[v] = unit + (q.marked.test(v) ? 1 : 0);
  const auto found = detail::max_weight_clique(q.graph, w, deadline);
  Clique c;
  for (const Vertex v : found)
    c.vertices.push_back(q.rep[v]);
  std::sort(c.vertices.begin(), c.vertices.end());
  return c;
}

} // namespace beckring
