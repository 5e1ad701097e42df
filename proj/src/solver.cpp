#include "hamlab/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hamlab/rng.hpp"

namespace hamlab {

namespace {

Vertex first_outside(const Graph& g, Vertex v, const std::vector<std::uint8_t>& on_path) {
  for (Vertex w : g.neighbors(v)) {
    if (!on_path[static_cast<std::size_t>(w)]) return w;
  }
  return kNoVertex;
}

// Extends head, then tail, until both are stuck. Returns the number of
// vertices added.
std::size_t extend_maximally(const Graph& g, std::vector<Vertex>& path) {
  std::vector<std::uint8_t> on_path(g.n(), 0);
  for (Vertex v : path) on_path[static_cast<std::size_t>(v)] = 1;
  const std::size_t before = path.size();

  std::vector<Vertex> prefix;  // reversed
  for (Vertex w = first_outside(g, path.front(), on_path); w != kNoVertex;
       w = first_outside(g, w, on_path)) {
    on_path[static_cast<std::size_t>(w)] = 1;
    prefix.push_back(w);
  }
  if (!prefix.empty()) {
    std::reverse(prefix.begin(), prefix.end());
    path.insert(path.begin(), prefix.begin(), prefix.end());
  }
  for (Vertex w = first_outside(g, path.back(), on_path); w != kNoVertex;
       w = first_outside(g, w, on_path)) {
    on_path[static_cast<std::size_t>(w)] = 1;
    path.push_back(w);
  }
  return path.size() - before;
}

// Reopens a non-spanning cycle through the smallest cycle vertex that has a
// neighbor outside it; the outside neighbor becomes the new head.
std::vector<Vertex> reopen(const Graph& g, const std::vector<Vertex>& cycle) {
  std::vector<std::uint8_t> on_cycle(g.n(), 0);
  for (Vertex v : cycle) on_cycle[static_cast<std::size_t>(v)] = 1;
  std::size_t best = cycle.size();
  Vertex out = kNoVertex;
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const Vertex w = first_outside(g, cycle[j], on_cycle);
    if (w != kNoVertex && (best == cycle.size() || cycle[j] < cycle[best])) {
      best = j;
      out = w;
    }
  }
  if (out == kNoVertex) return {};
  std::vector<Vertex> path;
  path.reserve(cycle.size() + 1);
  path.push_back(out);
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    path.push_back(cycle[(best + cycle.size() - k) % cycle.size()]);
  }
  return path;
}

class Search {
 public:
  Search(const Graph& g_rot, const Graph& reach, const SolveConfig& cfg, SolveStats& stats)
      : g_rot_(g_rot), reach_(reach), cfg_(cfg), stats_(stats) {
    opts_.cap = cfg.closure_cap;
    opts_.stop_on_extension = true;
    opts_.stop_on_closing = true;
    opts_.reach = &reach_;
  }

  // One attempt from `start`; returns a cycle (validated by the caller) or
  // empty when the rotation search is exhausted.
  std::vector<Vertex> attempt(Vertex start) {
    std::vector<Vertex> path{start};
    stats_.extensions += extend_maximally(reach_, path);
    const std::size_t n = g_rot_.n();

    for (std::size_t last = 0;;) {
      if (path.size() <= last) throw std::logic_error("solver made no progress");
      last = path.size();

      const PathSeq current = PathSeq::unchecked(path);
      auto step = advance(current);
      if (!step) {
        step = rotate_other_end(current);
        if (!step) return {};
      }
      if (step->closed) {
        if (step->path.size() == n) return std::move(step->path);
        path = reopen(reach_, step->path);
        if (path.empty()) return {};  // cycle is a component of its own
      } else {
        path = std::move(step->path);
      }
      stats_.extensions += extend_maximally(reach_, path);
    }
  }

 private:
  struct Step {
    std::vector<Vertex> path;
    bool closed = false;
  };

  // Closure from the head of p; turns its first extension or closing edge
  // into a longer path or a cycle.
  std::optional<Step> advance(const PathSeq& p) {
    last_ = endpoint_closure(g_rot_, p, opts_);
    ++stats_.closures;
    stats_.rotations += last_.rotations;
    if (last_.extension) {
      std::vector<Vertex> path = witness(last_, p, last_.extension->endpoint).vector();
      path.insert(path.begin(), last_.extension->outside);
      return Step{std::move(path), false};
    }
    if (last_.has_closing()) {
      return Step{witness(last_, p, last_.closing_endpoint).vector(), true};
    }
    return std::nullopt;
  }

  // Fixes a member v of S_P and rotates the old tail instead.
  std::optional<Step> rotate_other_end(const PathSeq& p) {
    const RotationClosure from_head = std::move(last_);
    std::vector<Vertex> members = from_head.endpoints.sorted();
    const std::size_t count = std::min(cfg_.step3_samples, members.size());
    for (std::size_t k = 0; k < count; ++k) {
      const PathSeq flipped = witness(from_head, p, members[k]).reversed();
      if (auto step = advance(flipped)) return step;
    }
    return std::nullopt;
  }

  const Graph& g_rot_;
  const Graph& reach_;
  const SolveConfig& cfg_;
  SolveStats& stats_;
  ClosureOptions opts_;
  RotationClosure last_;
};

}  // namespace

std::optional<PathSeq> extend(const Graph& g, const PathSeq& p) {
  std::vector<std::uint8_t> on_path(g.n(), 0);
  for (Vertex v : p.verts()) on_path[static_cast<std::size_t>(v)] = 1;
  if (const Vertex w = first_outside(g, p.head(), on_path); w != kNoVertex) {
    std::vector<Vertex> out{w};
    out.insert(out.end(), p.verts().begin(), p.verts().end());
    return PathSeq::unchecked(std::move(out));
  }
  if (const Vertex w = first_outside(g, p.tail(), on_path); w != kNoVertex) {
    std::vector<Vertex> out = p.vector();
    out.push_back(w);
    return PathSeq::unchecked(std::move(out));
  }
  return std::nullopt;
}

PathSeq greedy_path(const Graph& g, Vertex start) {
  if (start < 0 || static_cast<std::size_t>(start) >= g.n()) {
    throw std::out_of_range("greedy_path: start vertex out of range");
  }
  std::vector<Vertex> path{start};
  extend_maximally(g, path);
  return PathSeq::unchecked(std::move(path));
}

SolveOutcome hamilton(const Graph& g, const SolveConfig& cfg) {
  return hamilton_split(g, Graph(g.n()), cfg);
}

SolveOutcome hamilton_split(const Graph& g_rot, const Graph& g_ext, const SolveConfig& cfg) {
  if (cfg.max_restarts < 1) throw std::invalid_argument("max_restarts must be >= 1");
  if (g_rot.n() != g_ext.n()) throw std::invalid_argument("hamilton_split: vertex counts differ");
  const auto t0 = std::chrono::steady_clock::now();
  const Graph reach = g_ext.m() == 0 ? g_rot : unite(g_rot, g_ext);
  const std::size_t n = reach.n();

  SolveOutcome out;
  auto finish = [&]() -> SolveOutcome {
    out.stats.millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return std::move(out);
  };

  if (n < 3) {
    out.reason = "too-small";
    return finish();
  }
  if (!connected(reach)) {
    out.reason = "disconnected";
    return finish();
  }
  if (reach.min_degree() < 2) {
    out.reason = "min-degree";
    return finish();
  }

  Search search(g_rot, reach, cfg, out.stats);
  for (std::size_t r = 0; r < cfg.max_restarts; ++r) {
    out.stats.restarts = r;
    Rng rng(mix(cfg.seed, r));
    const auto start = static_cast<Vertex>(rng.below(n));
    std::vector<Vertex> cycle = search.attempt(start);
    if (!cycle.empty()) {
      if (!validate_cycle(reach, cycle)) throw std::logic_error("solver produced an invalid cycle");
      out.status = SolveStatus::hamiltonian;
      out.cycle = std::move(cycle);
      return finish();
    }
  }
  out.reason = "exhausted";
  return finish();
}

bool validate_cycle(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t n = g.n();
  if (n < 3 || cycle.size() != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : cycle) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % n])) return false;
  }
  return true;
}

const char* to_string(SolveStatus s) {
  return s == SolveStatus::hamiltonian ? "hamiltonian" : "failed";
}

}  // namespace hamlab
