#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hamlab {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Membership bitset over 0..n-1 plus the element list in insertion order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : member_(universe, 0) {}
  VertexSet(std::size_t universe, std::span<const Vertex> elems);

  static VertexSet all(std::size_t universe);

  /// Returns false if v was already present. Throws std::out_of_range.
  bool insert(Vertex v);
  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < member_.size() &&
           member_[static_cast<std::size_t>(v)] != 0;
  }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  std::size_t universe() const { return member_.size(); }
  std::span<const Vertex> elements() const { return elems_; }
  std::vector<Vertex> sorted() const;
  VertexSet complement() const;

 private:
  std::vector<std::uint8_t> member_;
  std::vector<Vertex> elems_;
};

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending; every traversal in the library
/// iterates them in that order, which fixes tie-breaking globally.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Empty graph on n vertices.
  explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

  /// Deduplicates and symmetrizes. Throws std::invalid_argument naming the
  /// offending pair on a self-loop or out-of-range endpoint.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t n() const { return offsets_.size() - 1; }
  std::size_t m() const { return nbrs_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return {nbrs_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t degree(Vertex v) const {
    const auto i = static_cast<std::size_t>(v);
    return offsets_[i + 1] - offsets_[i];
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  /// All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbrs_;
};

/// E(g) \ E(h). Throws std::invalid_argument when vertex counts differ.
Graph subtract(const Graph& g, const Graph& h);

/// E(g) ∪ E(h). Throws std::invalid_argument when vertex counts differ.
Graph unite(const Graph& g, const Graph& h);

/// N(X): vertices outside X adjacent to some member of X, ascending.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

/// Ordered-pair count of edges with one end in X and the other in Y, so
/// cross_edges(g, X, X) == 2 e(X).
std::size_t cross_edges(const Graph& g, const VertexSet& x, const VertexSet& y);

bool connected(const Graph& g);

/// Component label per vertex, labels assigned in order of smallest member.
std::vector<Vertex> components(const Graph& g);

}  // namespace hamlab
