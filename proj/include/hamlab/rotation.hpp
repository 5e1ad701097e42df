#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Ordered sequence of distinct vertices (v_0, ..., v_l). v_0 is the free
/// end (head) that rotations move; v_l is the fixed end (tail).
class PathSeq {
 public:
  PathSeq() = default;
  /// Throws std::invalid_argument on an empty or repeating sequence.
  explicit PathSeq(std::vector<Vertex> verts);

  /// Skips the distinctness check; callers guarantee it.
  static PathSeq unchecked(std::vector<Vertex> verts) {
    PathSeq p;
    p.verts_ = std::move(verts);
    return p;
  }

  std::span<const Vertex> verts() const { return verts_; }
  const std::vector<Vertex>& vector() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  /// Number of edges, l.
  std::size_t length() const { return verts_.empty() ? 0 : verts_.size() - 1; }
  Vertex head() const { return verts_.front(); }
  Vertex tail() const { return verts_.back(); }
  Vertex operator[](std::size_t i) const { return verts_[i]; }

  PathSeq reversed() const;
  /// Every consecutive pair is an edge of g.
  bool realized_in(const Graph& g) const;

  friend bool operator==(const PathSeq&, const PathSeq&) = default;

 private:
  std::vector<Vertex> verts_;
};

/// Rotation with pivot v_i: (v_{i-1}, ..., v_0, v_i, ..., v_l). The caller is
/// responsible for {v_0, v_i} being an edge. Throws std::out_of_range unless
/// 1 <= i <= l.
PathSeq rotate_once(const PathSeq& p, std::size_t pivot_index);

enum class ClosureMode {
  /// One canonical witness path per endpoint; polynomial.
  endpoint,
  /// Search over every distinct rotated path; exponential, small n only.
  exhaustive,
};

struct ClosureOptions {
  /// Stop once this many endpoints are known. 0 means no cap.
  std::size_t cap = 0;
  ClosureMode mode = ClosureMode::endpoint;
  bool stop_on_extension = true;
  bool stop_on_closing = false;
  /// Graph consulted for extension and closing-edge tests. Rotations always
  /// use the closure's own graph. nullptr means the same graph.
  const Graph* reach = nullptr;
  /// Exhaustive mode throws std::length_error past this many path states.
  std::size_t state_limit = 2'000'000;
};

struct Extension {
  Vertex endpoint = kNoVertex;
  Vertex outside = kNoVertex;
};

/// How an endpoint was first reached.
struct Discovery {
  Vertex prev = kNoVertex;  // head before the last rotation
  Vertex pivot = kNoVertex;
  std::size_t layer = 0;
};

/// Heads reachable from a path by rotations that keep its tail fixed.
///
/// Layer i of the breadth-first search is the set of heads first reached
/// after i rotations. Each endpoint keeps one witness: the pivot sequence
/// replayed from the original path.
struct RotationClosure {
  Vertex fixed_end = kNoVertex;
  VertexSet endpoints;
  std::vector<Discovery> parent;
  std::vector<std::vector<Vertex>> history;
  /// First endpoint found adjacent to the fixed end, if any.
  Vertex closing_endpoint = kNoVertex;
  std::optional<Extension> extension;
  std::size_t rotations = 0;
  bool capped = false;

  bool has_closing() const { return closing_endpoint != kNoVertex; }
  std::optional<Edge> closing_edge() const {
    if (!has_closing()) return std::nullopt;
    return Edge(closing_endpoint, fixed_end);
  }
};

/// Rotation closure of p in g with p's tail fixed. A rotation pivots on a
/// graph neighbor v_i of the head with 2 <= i <= l - 1; i = l is the closing
/// edge and is reported, not rotated through.
RotationClosure endpoint_closure(const Graph& g, const PathSeq& p,
                                 const ClosureOptions& opts = {});

/// The witness path for `endpoint`: starts there, ends at the fixed end.
PathSeq witness(const RotationClosure& c, const PathSeq& original, Vertex endpoint);

/// Edges broken along the witness history of `endpoint`, in order.
std::vector<Edge> broken_edges(const RotationClosure& c, const PathSeq& original,
                               Vertex endpoint);

enum class REStatus { extendable, satisfied, violated };

struct RECertificate {
  REStatus status = REStatus::violated;
  VertexSet s_p;
  std::vector<std::pair<Vertex, VertexSet>> t_map;
  double delta = 0.0;
  /// delta * n, the size both S_P and each T_v must reach.
  double required = 0.0;
};

/// Checks the two-sided rotation property for one path: S_P from the head,
/// then T_v for up to `sample` members v of S_P taken in ascending order.
RECertificate re_certificate(const Graph& g, const PathSeq& p, double delta,
                             std::size_t sample = 8, const ClosureOptions& opts = {});

const char* to_string(REStatus s);

}  // namespace hamlab
