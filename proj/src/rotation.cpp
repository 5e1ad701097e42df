#include "hamlab/rotation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace hamlab {

PathSeq::PathSeq(std::vector<Vertex> verts) : verts_(std::move(verts)) {
  if (verts_.empty()) throw std::invalid_argument("path must have at least one vertex");
  std::vector<Vertex> sorted = verts_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path repeats a vertex");
  }
}

PathSeq PathSeq::reversed() const {
  return unchecked(std::vector<Vertex>(verts_.rbegin(), verts_.rend()));
}

bool PathSeq::realized_in(const Graph& g) const {
  for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
    if (!g.has_edge(verts_[i], verts_[i + 1])) return false;
  }
  return true;
}

PathSeq rotate_once(const PathSeq& p, std::size_t pivot_index) {
  if (pivot_index < 1 || pivot_index > p.length()) {
    throw std::out_of_range("pivot index " + std::to_string(pivot_index) +
                            " outside [1, " + std::to_string(p.length()) + "]");
  }
  std::vector<Vertex> out = p.vector();
  std::reverse(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pivot_index));
  return PathSeq::unchecked(std::move(out));
}

namespace {

void rotate_in_place(std::vector<Vertex>& path, std::size_t pivot_index) {
  std::reverse(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(pivot_index));
}

class ClosureBuilder {
 public:
  ClosureBuilder(const Graph& g, const PathSeq& p, const ClosureOptions& opts)
      : g_(g),
        reach_(opts.reach ? *opts.reach : g),
        opts_(opts),
        on_path_(g.n(), p.verts()),
        len_(p.length()) {
    if (reach_.n() != g.n()) throw std::invalid_argument("closure: reach graph size mismatch");
    out_.fixed_end = p.tail();
    out_.endpoints = VertexSet(g.n());
    out_.parent.assign(g.n(), Discovery{});
    out_.history.assign(g.n(), {});
  }

  // Records a newly reached head; returns true when the search must stop.
  bool discover(Vertex x, Vertex prev, Vertex pivot, std::size_t layer,
                std::vector<Vertex> hist) {
    out_.endpoints.insert(x);
    out_.parent[static_cast<std::size_t>(x)] = {prev, pivot, layer};
    out_.history[static_cast<std::size_t>(x)] = std::move(hist);

    for (Vertex w : reach_.neighbors(x)) {
      if (!on_path_.contains(w)) {
        if (!out_.extension) out_.extension = Extension{x, w};
        if (opts_.stop_on_extension) return true;
        break;
      }
    }
    if (len_ >= 2 && !out_.has_closing() && reach_.has_edge(x, out_.fixed_end)) {
      out_.closing_endpoint = x;
      if (opts_.stop_on_closing) return true;
    }
    if (opts_.cap != 0 && out_.endpoints.size() >= opts_.cap) {
      out_.capped = true;
      return true;
    }
    return false;
  }

  RotationClosure run_endpoint(const PathSeq& p) {
    struct Frontier {
      Vertex head;
      std::vector<Vertex> path;
    };
    std::vector<Frontier> layer;
    if (discover(p.head(), kNoVertex, kNoVertex, 0, {})) return std::move(out_);
    layer.push_back({p.head(), p.vector()});
    std::vector<std::ptrdiff_t> pos(g_.n(), -1);

    for (std::size_t depth = 1; !layer.empty(); ++depth) {
      std::vector<Frontier> next;
      for (const Frontier& f : layer) {
        for (std::size_t i = 0; i < f.path.size(); ++i) {
          pos[static_cast<std::size_t>(f.path[i])] = static_cast<std::ptrdiff_t>(i);
        }
        bool stop = false;
        for (Vertex y : g_.neighbors(f.head)) {
          const std::ptrdiff_t i = pos[static_cast<std::size_t>(y)];
          if (i < 2 || static_cast<std::size_t>(i) >= len_) continue;
          const Vertex fresh = f.path[static_cast<std::size_t>(i - 1)];
          if (out_.endpoints.contains(fresh)) continue;
          ++out_.rotations;
          std::vector<Vertex> rotated = f.path;
          rotate_in_place(rotated, static_cast<std::size_t>(i));
          auto hist = out_.history[static_cast<std::size_t>(f.head)];
          hist.push_back(y);
          if (discover(fresh, f.head, y, depth, std::move(hist))) {
            stop = true;
            break;
          }
          next.push_back({fresh, std::move(rotated)});
        }
        for (Vertex v : f.path) pos[static_cast<std::size_t>(v)] = -1;
        if (stop) return std::move(out_);
      }
      layer = std::move(next);
    }
    return std::move(out_);
  }

  RotationClosure run_exhaustive(const PathSeq& p) {
    struct State {
      std::vector<Vertex> path;
      std::vector<Vertex> hist;
      std::size_t depth;
    };
    std::set<std::vector<Vertex>> seen;
    std::deque<State> queue;
    seen.insert(p.vector());
    if (discover(p.head(), kNoVertex, kNoVertex, 0, {})) return std::move(out_);
    queue.push_back({p.vector(), {}, 0});
    std::vector<std::ptrdiff_t> pos(g_.n(), -1);

    while (!queue.empty()) {
      State s = std::move(queue.front());
      queue.pop_front();
      for (std::size_t i = 0; i < s.path.size(); ++i) {
        pos[static_cast<std::size_t>(s.path[i])] = static_cast<std::ptrdiff_t>(i);
      }
      const Vertex head = s.path.front();
      bool stop = false;
      for (Vertex y : g_.neighbors(head)) {
        const std::ptrdiff_t i = pos[static_cast<std::size_t>(y)];
        if (i < 2 || static_cast<std::size_t>(i) >= len_) continue;
        std::vector<Vertex> rotated = s.path;
        rotate_in_place(rotated, static_cast<std::size_t>(i));
        if (!seen.insert(rotated).second) continue;
        if (seen.size() > opts_.state_limit) {
          throw std::length_error("exhaustive closure exceeded state limit");
        }
        ++out_.rotations;
        auto hist = s.hist;
        hist.push_back(y);
        const Vertex fresh = rotated.front();
        if (!out_.endpoints.contains(fresh) &&
            discover(fresh, head, y, s.depth + 1, hist)) {
          stop = true;
          break;
        }
        queue.push_back({std::move(rotated), std::move(hist), s.depth + 1});
      }
      for (Vertex v : s.path) pos[static_cast<std::size_t>(v)] = -1;
      if (stop) break;
    }
    return std::move(out_);
  }

 private:
  const Graph& g_;
  const Graph& reach_;
  const ClosureOptions& opts_;
  VertexSet on_path_;
  std::size_t len_;
  RotationClosure out_;
};

// Replays the pivot history of `endpoint`; calls on_step(path, pivot_index)
// before each rotation.
template <class Fn>
std::vector<Vertex> replay(const RotationClosure& c, const PathSeq& original,
                           Vertex endpoint, Fn&& on_step) {
  if (!c.endpoints.contains(endpoint)) {
    throw std::invalid_argument("vertex " + std::to_string(endpoint) +
                                " is not a closure endpoint");
  }
  std::vector<Vertex> path = original.vector();
  for (Vertex pivot : c.history[static_cast<std::size_t>(endpoint)]) {
    const auto it = std::find(path.begin(), path.end(), pivot);
    const auto i = static_cast<std::size_t>(it - path.begin());
    on_step(path, i);
    rotate_in_place(path, i);
  }
  return path;
}

}  // namespace

RotationClosure endpoint_closure(const Graph& g, const PathSeq& p, const ClosureOptions& opts) {
  ClosureBuilder builder(g, p, opts);
  return opts.mode == ClosureMode::exhaustive ? builder.run_exhaustive(p)
                                              : builder.run_endpoint(p);
}

PathSeq witness(const RotationClosure& c, const PathSeq& original, Vertex endpoint) {
  return PathSeq::unchecked(replay(c, original, endpoint, [](auto&, std::size_t) {}));
}

std::vector<Edge> broken_edges(const RotationClosure& c, const PathSeq& original,
                               Vertex endpoint) {
  std::vector<Edge> out;
  replay(c, original, endpoint, [&](const std::vector<Vertex>& path, std::size_t i) {
    out.emplace_back(path[i - 1], path[i]);
  });
  return out;
}

RECertificate re_certificate(const Graph& g, const PathSeq& p, double delta,
                             std::size_t sample, const ClosureOptions& opts) {
  RECertificate cert;
  cert.delta = delta;
  cert.required = delta * static_cast<double>(g.n());

  ClosureOptions o = opts;
  o.stop_on_extension = true;
  o.stop_on_closing = false;
  const RotationClosure from_head = endpoint_closure(g, p, o);
  if (from_head.extension) {
    cert.status = REStatus::extendable;
    return cert;
  }
  cert.s_p = from_head.endpoints;

  bool ok = static_cast<double>(cert.s_p.size()) >= cert.required;
  const auto members = cert.s_p.sorted();
  const std::size_t count = std::min(sample, members.size());
  for (std::size_t k = 0; k < count; ++k) {
    const Vertex v = members[k];
    const PathSeq flipped = witness(from_head, p, v).reversed();
    RotationClosure other = endpoint_closure(g, flipped, o);
    if (other.extension) {
      cert.status = REStatus::extendable;
      return cert;
    }
    ok = ok && static_cast<double>(other.endpoints.size()) >= cert.required;
    cert.t_map.emplace_back(v, std::move(other.endpoints));
  }
  cert.status = ok ? REStatus::satisfied : REStatus::violated;
  return cert;
}

const char* to_string(REStatus s) {
  switch (s) {
    case REStatus::extendable: return "extendable";
    case REStatus::satisfied: return "satisfied";
    case REStatus::violated: return "violated";
  }
  return "unknown";
}

}  // namespace hamlab
