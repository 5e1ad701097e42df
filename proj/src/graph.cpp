#include "hamlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hamlab {

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> elems)
    : member_(universe, 0) {
  for (Vertex v : elems) insert(v);
}

VertexSet VertexSet::all(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
  return s;
}

bool VertexSet::insert(Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= member_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " outside universe of size " +
                            std::to_string(member_.size()));
  }
  auto& bit = member_[static_cast<std::size_t>(v)];
  if (bit) return false;
  bit = 1;
  elems_.push_back(v);
  return true;
}

std::vector<Vertex> VertexSet::sorted() const {
  std::vector<Vertex> out = elems_;
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(member_.size());
  for (std::size_t v = 0; v < member_.size(); ++v) {
    if (!member_[v]) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n || e.u == e.v) {
      throw std::invalid_argument("invalid edge {" + std::to_string(e.u) +
                                  "," + std::to_string(e.v) + "} for n=" +
                                  std::to_string(n));
    }
    norm.emplace_back(e.u, e.v);
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g(n);
  for (const Edge& e : norm) {
    ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.nbrs_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Two passes over the sorted edges: lower partners first, then upper ones,
  // which leaves every list ascending without a per-vertex sort.
  for (const Edge& e : norm) g.nbrs_[fill[static_cast<std::size_t>(e.v)]++] = e.u;
  for (const Edge& e : norm) g.nbrs_[fill[static_cast<std::size_t>(e.u)]++] = e.v;
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> es;
  es.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return from_edges(n, es);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t v = 0; v + 1 < n; ++v)
    es.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  if (n >= 3) es.emplace_back(0, static_cast<Vertex>(n - 1));
  return from_edges(n, es);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t v = 0; v + 1 < n; ++v)
    es.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
  return from_edges(n, es);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = n() == 0 ? 0 : degree(0);
  for (std::size_t v = 1; v < n(); ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n(); ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (std::size_t u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

namespace {

void require_same_n(const Graph& g, const Graph& h, const char* op) {
  if (g.n() != h.n()) {
    throw std::invalid_argument(std::string(op) + ": vertex counts differ (" +
                                std::to_string(g.n()) + " vs " +
                                std::to_string(h.n()) + ")");
  }
}

}  // namespace

Graph subtract(const Graph& g, const Graph& h) {
  require_same_n(g, h, "subtract");
  std::vector<Edge> keep;
  keep.reserve(g.m());
  for (const Edge& e : g.edges()) {
    if (!h.has_edge(e.u, e.v)) keep.push_back(e);
  }
  return Graph::from_edges(g.n(), keep);
}

Graph unite(const Graph& g, const Graph& h) {
  require_same_n(g, h, "unite");
  std::vector<Edge> all = g.edges();
  const auto more = h.edges();
  all.insert(all.end(), more.begin(), more.end());
  return Graph::from_edges(g.n(), all);
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  std::vector<std::uint8_t> hit(g.n(), 0);
  for (Vertex v : x.elements()) {
    for (Vertex w : g.neighbors(v)) {
      if (!x.contains(w)) hit[static_cast<std::size_t>(w)] = 1;
    }
  }
  VertexSet out(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    if (hit[v]) out.insert(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y) {
  std::size_t count = 0;
  for (Vertex u : x.elements()) {
    for (Vertex w : g.neighbors(u)) {
      if (y.contains(w)) ++count;
    }
  }
  return count;
}

std::vector<Vertex> components(const Graph& g) {
  std::vector<Vertex> label(g.n(), kNoVertex);
  Vertex next = 0;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (label[s] != kNoVertex) continue;
    label[s] = next;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[static_cast<std::size_t>(w)] == kNoVertex) {
          label[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

bool connected(const Graph& g) {
  if (g.n() <= 1) return true;
  const auto label = components(g);
  return std::all_of(label.begin(), label.end(), [](Vertex l) { return l == 0; });
}

}  // namespace hamlab
