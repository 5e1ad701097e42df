#include "hamlab/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hamlab/rng.hpp"

namespace hamlab {

namespace {

void require_budget(const Graph& g, const BudgetVector& budget) {
  if (budget.size() != g.n()) {
    throw std::invalid_argument("budget has " + std::to_string(budget.size()) +
                                " entries for n=" + std::to_string(g.n()));
  }
}

// Greedy deletion over `order`; every accepted edge fits both budgets.
DeletionGraph delete_within_budget(const Graph& g, const std::vector<Edge>& order,
                                   const BudgetVector& budget) {
  std::vector<std::size_t> left = budget.k;
  std::vector<Edge> removed;
  for (const Edge& e : order) {
    auto& lu = left[static_cast<std::size_t>(e.u)];
    auto& lv = left[static_cast<std::size_t>(e.v)];
    if (lu == 0 || lv == 0) continue;
    --lu;
    --lv;
    removed.push_back(e);
  }
  DeletionGraph out{Graph::from_edges(g.n(), removed), g.n()};
  if (!check_budget(out, budget)) throw std::logic_error("attack exceeded its budget");
  return out;
}

}  // namespace

BudgetVector uniform_budget(std::size_t n, double p, double alpha) {
  if (!(alpha >= 0.0) || !(p >= 0.0)) {
    throw std::invalid_argument("uniform_budget: alpha and p must be non-negative");
  }
  const double raw = alpha * static_cast<double>(n) * p;
  const auto each = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return BudgetVector{std::vector<std::size_t>(n, each)};
}

bool check_budget(const DeletionGraph& h, const BudgetVector& k) {
  if (h.h.n() != k.size()) return false;
  for (std::size_t v = 0; v < k.size(); ++v) {
    if (h.h.degree(static_cast<Vertex>(v)) > k.k[v]) return false;
  }
  return true;
}

DeletionGraph bipartition_attack(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const BudgetVector& budget) {
  require_budget(g, budget);
  if (a.universe() != g.n() || b.universe() != g.n() || a.size() + b.size() != g.n()) {
    throw std::invalid_argument("bipartition_attack: parts do not partition V");
  }
  for (Vertex v : a.elements()) {
    if (b.contains(v)) throw std::invalid_argument("bipartition_attack: parts overlap");
  }
  std::vector<Edge> cross;
  for (const Edge& e : g.edges()) {
    if (a.contains(e.u) != a.contains(e.v)) cross.push_back(e);
  }
  return delete_within_budget(g, cross, budget);
}

DeletionGraph random_attack(const Graph& g, const BudgetVector& budget, std::uint64_t seed) {
  require_budget(g, budget);
  std::vector<Edge> order = g.edges();
  Rng rng(seed);
  rng.shuffle(std::span<Edge>(order));
  return delete_within_budget(g, order, budget);
}

DeletionGraph isolation_attack(const Graph& g, Vertex target, const BudgetVector& budget) {
  require_budget(g, budget);
  if (target < 0 || static_cast<std::size_t>(target) >= g.n()) {
    throw std::out_of_range("isolation_attack: target out of range");
  }
  std::vector<Edge> order;
  for (Vertex w : g.neighbors(target)) order.emplace_back(target, w);
  return delete_within_budget(g, order, budget);
}

std::pair<VertexSet, VertexSet> equal_halves(std::size_t n) {
  VertexSet a(n);
  VertexSet b(n);
  for (std::size_t v = 0; v < n; ++v) (v < n / 2 ? a : b).insert(static_cast<Vertex>(v));
  return {std::move(a), std::move(b)};
}

std::size_t bisection_excess(const Graph& g, const VertexSet& a, const BudgetVector& budget) {
  require_budget(g, budget);
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.n(); ++v) {
    std::size_t cross = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (a.contains(w) != a.contains(static_cast<Vertex>(v))) ++cross;
    }
    if (cross > budget.k[v]) total += cross - budget.k[v];
  }
  return total;
}

namespace {

class BisectionSearch {
 public:
  BisectionSearch(const Graph& g, const BudgetVector& budget)
      : g_(g), cap_(budget.k), side_(g.n(), 1), cross_(g.n(), 0), delta_(g.n(), 0), stamp_(g.n(), 0) {
    for (std::size_t v = 0; v < g.n() / 2; ++v) side_[v] = 0;
    for (std::size_t v = 0; v < g.n(); ++v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
        if (side_[static_cast<std::size_t>(w)] != side_[v]) ++cross_[v];
      }
    }
  }

  long excess_of(std::size_t v, long cross) const {
    return std::max(0L, cross - static_cast<long>(cap_[v]));
  }

  long total() const {
    long t = 0;
    for (std::size_t v = 0; v < g_.n(); ++v) t += excess_of(v, cross_[v]);
    return t;
  }

  struct Gain {
    long excess = 0;
    long cross_sum = 0;  // twice the change in cut size
  };

  // Effect of a and b (opposite sides) trading places.
  Gain swap_gain(Vertex a, Vertex b) {
    touched_.clear();
    ++epoch_;
    bump_neighbors(a, b);
    bump_neighbors(b, a);
    const bool ab = g_.has_edge(a, b);
    Gain gain;
    for (Vertex w : touched_) {
      const auto i = static_cast<std::size_t>(w);
      if (w != a && w != b) {
        gain.excess += excess_of(i, cross_[i] + delta_[i]) - excess_of(i, cross_[i]);
        gain.cross_sum += delta_[i];
      }
      delta_[i] = 0;
    }
    for (Vertex v : {a, b}) {
      const auto i = static_cast<std::size_t>(v);
      const long after = static_cast<long>(g_.degree(v)) - cross_[i] + (ab ? 1 : 0);
      gain.excess += excess_of(i, after) - excess_of(i, cross_[i]);
      gain.cross_sum += after - cross_[i];
    }
    return gain;
  }

  void apply_swap(Vertex a, Vertex b) {
    for (Vertex v : {a, b}) {
      for (Vertex w : g_.neighbors(v)) {
        const auto i = static_cast<std::size_t>(w);
        if (w == a || w == b) continue;
        cross_[i] += side_[i] == side_[static_cast<std::size_t>(v)] ? 1 : -1;
      }
    }
    std::swap(side_[static_cast<std::size_t>(a)], side_[static_cast<std::size_t>(b)]);
    for (Vertex v : {a, b}) {
      long c = 0;
      for (Vertex w : g_.neighbors(v)) {
        if (side_[static_cast<std::size_t>(w)] != side_[static_cast<std::size_t>(v)]) ++c;
      }
      cross_[static_cast<std::size_t>(v)] = c;
    }
  }

  std::uint8_t side(std::size_t v) const { return side_[v]; }
  long cross(std::size_t v) const { return cross_[v]; }

 private:
  void bump_neighbors(Vertex mover, Vertex partner) {
    const auto ms = side_[static_cast<std::size_t>(mover)];
    for (Vertex w : g_.neighbors(mover)) {
      if (w == partner) continue;
      const auto i = static_cast<std::size_t>(w);
      if (stamp_[i] != epoch_) {
        stamp_[i] = epoch_;
        touched_.push_back(w);
      }
      delta_[i] += side_[i] == ms ? 1 : -1;
    }
  }

  const Graph& g_;
  const std::vector<std::size_t>& cap_;
  std::vector<std::uint8_t> side_;
  std::vector<long> cross_;
  std::vector<long> delta_;
  std::vector<Vertex> touched_;
  std::vector<std::size_t> stamp_;
  std::size_t epoch_ = 0;
};

}  // namespace

std::pair<VertexSet, VertexSet> min_excess_bisection(const Graph& g, const BudgetVector& budget,
                                                     std::uint64_t seed, std::size_t max_iters) {
  require_budget(g, budget);
  const std::size_t n = g.n();
  if (max_iters == 0) max_iters = 200 * n;
  BisectionSearch search(g, budget);
  Rng rng(seed);
  long excess = search.total();
  // Overflow dominates; the cut size breaks ties and builds slack.
  const long weight = 4 * static_cast<long>(g.max_degree()) + 4;

  std::vector<std::uint8_t> best_side(n);
  for (std::size_t v = 0; v < n; ++v) best_side[v] = search.side(v);
  long best_excess = excess;
  std::size_t stale = 0;

  const std::size_t kSample = std::min<std::size_t>(n, 64);
  std::vector<Vertex> hot;
  std::vector<std::pair<Vertex, Vertex>> moves;
  // Searches that get close to zero overflow are given a longer patience.
  auto patience = [&] { return (best_excess <= static_cast<long>(n / 20) ? 50 : 10) * n; };
  for (std::size_t iter = 0; iter < max_iters && excess > 0 && stale < patience(); ++iter) {
    hot.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (search.cross(v) > static_cast<long>(budget.k[v])) hot.push_back(static_cast<Vertex>(v));
    }
    const Vertex a = hot[rng.below(hot.size())];
    const auto a_side = search.side(static_cast<std::size_t>(a));

    // Either a crosses over, or one of a's cross neighbors comes to a's side.
    long best = 0;
    BisectionSearch::Gain best_gain;
    moves.clear();
    auto consider = [&](Vertex x, Vertex y) {
      const BisectionSearch::Gain gn = search.swap_gain(x, y);
      const long score = weight * gn.excess + gn.cross_sum;
      if (moves.empty() || score < best) {
        best = score;
        best_gain = gn;
        moves.assign(1, {x, y});
      } else if (score == best) {
        moves.emplace_back(x, y);
      }
    };
    // Partners are drawn from a random sample of each side.
    for (std::size_t t = 0; t < kSample; ++t) {
      const auto v = static_cast<std::size_t>(rng.below(n));
      if (search.side(v) != a_side) consider(a, static_cast<Vertex>(v));
    }
    const auto nbrs = g.neighbors(a);
    const Vertex c = nbrs[rng.below(nbrs.size())];
    if (search.side(static_cast<std::size_t>(c)) != a_side) {
      for (std::size_t t = 0; t < kSample; ++t) {
        const auto v = static_cast<std::size_t>(rng.below(n));
        if (search.side(v) == a_side && static_cast<Vertex>(v) != a) consider(c, static_cast<Vertex>(v));
      }
    }
    if (moves.empty()) continue;
    if (best <= 0 || rng.uniform() < 0.05) {
      const auto [x, y] = moves[rng.below(moves.size())];
      search.apply_swap(x, y);
      excess += best_gain.excess;
    }
    if (excess < best_excess) {
      best_excess = excess;
      for (std::size_t v = 0; v < n; ++v) best_side[v] = search.side(v);
      stale = 0;
    } else {
      ++stale;
    }
  }

  VertexSet a(n);
  VertexSet b(n);
  for (std::size_t v = 0; v < n; ++v) (best_side[v] == 0 ? a : b).insert(static_cast<Vertex>(v));
  return {std::move(a), std::move(b)};
}

}  // namespace hamlab
