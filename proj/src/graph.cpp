#include "beckring/graph.hpp"

#include <sstream>

#include "json.hpp"

namespace beckring {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v)
    return;
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto &row : rows_)
    twice += row.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < rows_.size(); ++u)
    for (std::size_t v = rows_[u].next_from(u + 1); v != Bitset::npos;
         v = rows_[u].next_from(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        sub.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return sub;
}

BeckGraph build_graph(RingPtr r, std::size_t size_cap) {
  if (r->size() > size_cap)
    throw CapacityError("ring " + r->label() + " of size " +
                        std::to_string(r->size()) + " exceeds the size cap");
  const auto n = static_cast<Vertex>(r->size());
  BeckGraph g;
  g.graph_ = Graph(n);
  g.square_zero_ = Bitset(n);
  g.zero_divisors_ = Bitset(n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x; y < n; ++y) {
      if (r->mul(Element{x}, Element{y}).index != 0)
        continue;
      if (x == y) {
        g.square_zero_.set(x);
      } else {
        g.graph_.add_edge(x, y);
      }
      if (x != 0 && y != 0) {
        g.zero_divisors_.set(x);
        g.zero_divisors_.set(y);
      }
    }
  }
  g.ring_ = std::move(r);
  return g;
}

CoreGraph core(const BeckGraph &g) {
  CoreGraph c;
  c.to_ring.push_back(0);
  g.zero_divisors().for_each(
      [&](std::size_t v) { c.to_ring.push_back(static_cast<Vertex>(v)); });
  c.graph = g.graph().induced(c.to_ring);
  c.square_zero = Bitset(c.to_ring.size());
  for (std::size_t i = 0; i < c.to_ring.size(); ++i)
    if (g.square_zero().test(c.to_ring[i]))
      c.square_zero.set(i);
  return c;
}

std::string export_dimacs(const Graph &g) {
  const auto edges = g.edges();
  std::ostringstream os;
  os << "p edge " << g.order() << ' ' << edges.size() << '\n';
  for (const auto &[u, v] : edges)
    os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string export_json(const Graph &g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto &[u, v] : g.edges())
    j["edges"].push_back({u, v});
  return j.dump() + "\n";
}

std::string export_graph(const BeckGraph &g, ExportFormat format) {
  return format == ExportFormat::dimacs ? export_dimacs(g.graph())
                                        : export_json(g.graph());
}

} // namespace beckring
