#include "sixflow/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sixflow {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<EdgeId>> incidence(const SignedGraph& g) {
  std::vector<std::vector<EdgeId>> inc(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    inc[edge.end1].push_back(e);
    if (!edge.is_loop()) inc[edge.end2].push_back(e);
  }
  return inc;
}

VertexId other_end(const Edge& e, VertexId v) { return e.end1 == v ? e.end2 : e.end1; }

// +1 / -1 labels that make every spanning-tree edge positive, plus a flag per
// component telling whether all remaining edges agree.
struct BalanceLabels {
  std::vector<int> label;
  std::vector<std::size_t> component;
  std::vector<bool> component_balanced;
};

BalanceLabels compute_balance(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  const auto inc = incidence(g);
  BalanceLabels out;
  out.label.assign(n, 0);
  out.component.assign(n, 0);
  std::size_t next = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (out.label[root] != 0) continue;
    const std::size_t comp = next++;
    out.component_balanced.push_back(true);
    out.label[root] = 1;
    out.component[root] = comp;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (EdgeId e : inc[v]) {
        const Edge& edge = g.edge(e);
        const int s = edge.is_negative() ? -1 : 1;
        const VertexId w = other_end(edge, v);
        if (out.label[w] == 0) {
          out.label[w] = out.label[v] * s;
          out.component[w] = comp;
          queue.push(w);
        } else if (out.label[v] * out.label[w] != s) {
          out.component_balanced[comp] = false;
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> component_labels(const SignedGraph& g) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) sets.unite(e.end1, e.end2);
  std::vector<std::size_t> root(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) root[v] = sets.find(v);
  std::vector<std::size_t> index(g.vertex_count(), g.vertex_count());
  std::size_t next = 0;
  std::vector<std::size_t> out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (index[root[v]] == g.vertex_count()) index[root[v]] = next++;
    out[v] = index[root[v]];
  }
  return out;
}

std::size_t component_count(const SignedGraph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::size_t balanced_component_count(const SignedGraph& g) {
  const auto b = compute_balance(g);
  return static_cast<std::size_t>(
      std::count(b.component_balanced.begin(), b.component_balanced.end(), true));
}

std::vector<bool> balancing_switches(const SignedGraph& g) {
  const auto b = compute_balance(g);
  std::vector<bool> out(g.vertex_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out[v] = b.component_balanced[b.component[v]] && b.label[v] < 0;
  }
  return out;
}

SignedGraph without_edge(const SignedGraph& g, EdgeId e) {
  SignedGraph out = g;
  out.erase_edge(e);
  return out;
}

bool is_flow_admissible(const SignedGraph& g) {
  const std::size_t base = balanced_component_count(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (balanced_component_count(without_edge(g, e)) != base) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Cyclic edge-connectivity

namespace {

// Number of components of g minus the masked edges that contain a cycle
// (edge count >= vertex count, loops included).
std::size_t cyclic_components(const SignedGraph& g, const std::vector<char>& removed) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!removed[e]) sets.unite(g.edge(e).end1, g.edge(e).end2);
  }
  std::vector<std::size_t> vertices(n, 0), edges(n, 0);
  for (VertexId v = 0; v < n; ++v) ++vertices[sets.find(v)];
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!removed[e]) ++edges[sets.find(g.edge(e).end1)];
  }
  std::size_t count = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (vertices[v] > 0 && edges[v] >= vertices[v]) ++count;
  }
  return count;
}

// Induced subgraph on `inside` contains a cycle.
bool induced_has_cycle(const SignedGraph& g, const std::vector<char>& inside) {
  DisjointSets sets(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!inside[e.end1] || !inside[e.end2]) continue;
    if (sets.find(e.end1) == sets.find(e.end2)) return true;
    sets.unite(e.end1, e.end2);
  }
  return false;
}

std::size_t boundary_size(const SignedGraph& g, const std::vector<char>& inside) {
  std::size_t d = 0;
  for (const Edge& e : g.edges()) d += inside[e.end1] != inside[e.end2];
  return d;
}

// Vertex set of a shortest cycle through e (BFS between its ends in g - e).
std::optional<std::vector<char>> shortest_cycle_through(const SignedGraph& g,
                                                        const std::vector<std::vector<EdgeId>>& inc,
                                                        EdgeId e) {
  const Edge& edge = g.edge(e);
  std::vector<char> inside(g.vertex_count(), 0);
  if (edge.is_loop()) {
    inside[edge.end1] = 1;
    return inside;
  }
  constexpr VertexId kUnseen = static_cast<VertexId>(-1);
  std::vector<VertexId> parent(g.vertex_count(), kUnseen);
  parent[edge.end1] = edge.end1;
  std::queue<VertexId> queue;
  queue.push(edge.end1);
  while (!queue.empty() && parent[edge.end2] == kUnseen) {
    const VertexId v = queue.front();
    queue.pop();
    for (EdgeId f : inc[v]) {
      if (f == e) continue;
      const VertexId w = other_end(g.edge(f), v);
      if (parent[w] == kUnseen) {
        parent[w] = v;
        queue.push(w);
      }
    }
  }
  if (parent[edge.end2] == kUnseen) return std::nullopt;
  for (VertexId v = edge.end2;; v = parent[v]) {
    inside[v] = 1;
    if (v == edge.end1) break;
  }
  return inside;
}

// Smallest |delta(X)| with cycles on both sides, by enumerating X.
std::optional<std::size_t> cyclic_cut_by_vertex_sets(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 24) {
    throw std::length_error("cyclic connectivity fallback limited to 24 vertices");
  }
  std::optional<std::size_t> best;
  std::vector<char> inside(n), outside(n);
  // Vertex n-1 is fixed outside X so each bipartition is seen once.
  for (std::uint64_t mask = 1; n > 0 && mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    for (VertexId v = 0; v < n; ++v) {
      inside[v] = static_cast<char>((mask >> v) & 1U);
      outside[v] = static_cast<char>(!inside[v]);
    }
    if (!induced_has_cycle(g, inside) || !induced_has_cycle(g, outside)) continue;
    const std::size_t d = boundary_size(g, inside);
    if (!best || d < *best) best = d;
  }
  return best;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < m - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<CyclicCut> minimum_cyclic_cut(const SignedGraph& g) {
  const auto inc = incidence(g);
  std::optional<std::size_t> bound;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto cycle = shortest_cycle_through(g, inc, e);
    if (!cycle) continue;
    std::vector<char> rest(cycle->size());
    for (std::size_t v = 0; v < rest.size(); ++v) rest[v] = static_cast<char>(!(*cycle)[v]);
    if (!induced_has_cycle(g, rest)) continue;
    const std::size_t d = boundary_size(g, *cycle);
    if (!bound || d < *bound) bound = d;
  }
  if (!bound) {
    bound = cyclic_cut_by_vertex_sets(g);
    if (!bound) return std::nullopt;
  }

  const std::size_t m = g.edge_count();
  std::vector<char> removed(m, 0);
  for (std::size_t k = 0; k <= *bound; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      for (std::size_t i : idx) removed[i] = 1;
      const bool separates = cyclic_components(g, removed) >= 2;
      for (std::size_t i : idx) removed[i] = 0;
      if (separates) {
        return CyclicCut{k, std::vector<EdgeId>(idx.begin(), idx.end())};
      }
    } while (k > 0 && next_combination(idx, m));
  }
  throw std::logic_error("cyclic cut search exceeded its own upper bound");
}

std::optional<std::size_t> cyclic_edge_connectivity(const SignedGraph& g) {
  if (const auto cut = minimum_cyclic_cut(g)) return cut->size;
  const std::size_t rank = g.edge_count() + component_count(g) - g.vertex_count();
  if (rank == 0) return std::nullopt;
  return rank;
}

// ---------------------------------------------------------------------------
// Maximum matching (Edmonds)

namespace {

class Blossom {
 public:
  explicit Blossom(std::vector<std::vector<VertexId>> adj)
      : adj_(std::move(adj)), n_(adj_.size()), match_(n_, kNone), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {}

  std::vector<VertexId> run() {
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      for (VertexId w : adj_[v]) {
        if (match_[w] == kNone) {
          match_[w] = v;
          match_[v] = w;
          break;
        }
      }
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      VertexId u = find_path(v);
      while (u != kNone) {
        const VertexId pu = parent_[u];
        const VertexId next = match_[pu];
        match_[u] = pu;
        match_[pu] = u;
        u = next;
      }
    }
    return match_;
  }

  static constexpr VertexId kNone = static_cast<VertexId>(-1);

 private:
  VertexId lca(VertexId a, VertexId b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(VertexId v, VertexId b, VertexId child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  VertexId find_path(VertexId root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (VertexId to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const VertexId cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexId i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::vector<std::vector<VertexId>> adj_;
  std::size_t n_;
  std::vector<VertexId> match_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace

MatchingResult maximum_matching(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  // Lowest edge id per unordered vertex pair.
  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> rep(n);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    const VertexId a = std::min(edge.end1, edge.end2);
    const VertexId b = std::max(edge.end1, edge.end2);
    const bool known = std::any_of(rep[a].begin(), rep[a].end(),
                                   [b](const auto& p) { return p.first == b; });
    if (known) continue;
    rep[a].emplace_back(b, e);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const auto match = Blossom(std::move(adj)).run();

  MatchingResult out;
  for (VertexId a = 0; a < n; ++a) {
    for (const auto& [b, e] : rep[a]) {
      if (match[a] == b) out.edges.push_back(e);
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.perfect = 2 * out.edges.size() == n;
  return out;
}

std::optional<MatchingResult> perfect_matching(const SignedGraph& g) {
  auto m = maximum_matching(g);
  if (!m.perfect) return std::nullopt;
  return m;
}

// ---------------------------------------------------------------------------
// Brute-force k-flow oracle

namespace {

class FlowSearch {
 public:
  FlowSearch(const SignedGraph& g, int k)
      : g_(g), k_(k), tau_(Orientation::canonical(g)), values_(g.edge_count(), 0),
        residual_(g.vertex_count(), 0), open_(g.vertex_count(), 0), capacity_(g.vertex_count(), 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop() && !edge.is_negative()) {
        values_[e] = 1;  // contributes nothing anywhere
        continue;
      }
      for (const auto& [v, c] : coefficients(e)) {
        ++open_[v];
        capacity_[v] += std::abs(c) * (k_ - 1);
      }
      pending_.push_back(e);
    }
    order_edges();
  }

  bool run() { return assign(0); }
  IntegerFlow result() const { return {tau_, values_}; }

 private:
  std::vector<std::pair<VertexId, FlowValue>> coefficients(EdgeId e) const {
    const Edge& edge = g_.edge(e);
    const FlowValue c1 = tau_[e][0] == Dir::Away ? 1 : -1;
    const FlowValue c2 = tau_[e][1] == Dir::Away ? 1 : -1;
    if (edge.is_loop()) return {{edge.end1, c1 + c2}};
    return {{edge.end1, c1}, {edge.end2, c2}};
  }

  // Most constrained edge first: the one touching a vertex with the fewest
  // unassigned ends. Values never influence this order.
  void order_edges() {
    std::vector<std::size_t> open = open_;
    std::vector<EdgeId> ordered;
    std::vector<char> taken(g_.edge_count(), 0);
    while (ordered.size() < pending_.size()) {
      EdgeId best = 0;
      std::size_t best_key = static_cast<std::size_t>(-1);
      for (EdgeId e : pending_) {
        if (taken[e]) continue;
        std::size_t key = static_cast<std::size_t>(-1);
        for (const auto& [v, c] : coefficients(e)) key = std::min(key, open[v]);
        if (key < best_key) {
          best_key = key;
          best = e;
        }
      }
      taken[best] = 1;
      ordered.push_back(best);
      for (const auto& [v, c] : coefficients(best)) --open[v];
    }
    pending_ = std::move(ordered);
  }

  bool assign(std::size_t depth) {
    if (depth == pending_.size()) return true;
    const EdgeId e = pending_[depth];
    const auto coeff = coefficients(e);
    for (const auto& [v, c] : coeff) {
      --open_[v];
      capacity_[v] -= std::abs(c) * (k_ - 1);
    }
    for (int mag = 1; mag < k_; ++mag) {
      for (FlowValue x : {FlowValue{mag}, FlowValue{-mag}}) {
        bool ok = true;
        for (const auto& [v, c] : coeff) residual_[v] += c * x;
        for (const auto& [v, c] : coeff) {
          if (std::abs(residual_[v]) > capacity_[v] || (open_[v] == 0 && residual_[v] != 0)) ok = false;
        }
        if (ok) {
          values_[e] = x;
          if (assign(depth + 1)) return true;
        }
        for (const auto& [v, c] : coeff) residual_[v] -= c * x;
      }
    }
    for (const auto& [v, c] : coeff) {
      ++open_[v];
      capacity_[v] += std::abs(c) * (k_ - 1);
    }
    values_[e] = 0;
    return false;
  }

  const SignedGraph& g_;
  int k_;
  Orientation tau_;
  EdgeValuation values_;
  std::vector<FlowValue> residual_;
  std::vector<std::size_t> open_;
  std::vector<FlowValue> capacity_;
  std::vector<EdgeId> pending_;
};

}  // namespace

std::optional<IntegerFlow> brute_force_k_flow(const SignedGraph& g, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (g.edge_count() > kBruteForceEdgeLimit) {
    throw std::length_error("brute-force flow search limited to " +
                            std::to_string(kBruteForceEdgeLimit) + " edges");
  }
  FlowSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return search.result();
}

}  // namespace sixflow
