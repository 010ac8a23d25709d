#include "sixflow/z6.hpp"

#include <algorithm>
#include <array>

#include "sixflow/analysis.hpp"
#include "sixflow/flow_algebra.hpp"

namespace sixflow {

namespace {

constexpr std::array<Z2Z3, 6> kZ6ToPair{{{0, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {1, 2}}};

using Bits = std::vector<std::uint64_t>;

void flip_bit(Bits& bits, std::size_t i) { bits[i / 64] ^= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1U; }

// Fundamental cycles of a spanning forest, one per non-tree edge (loops
// included), as edge bitsets.
std::vector<Bits> cycle_space_basis(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop()) continue;
    adj[edge.end1].emplace_back(edge.end2, e);
    adj[edge.end2].emplace_back(edge.end1, e);
  }
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, kNone), depth(n, kNone);
  std::vector<VertexId> parent(n, 0);
  std::vector<char> tree(m, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (depth[root] != kNone) continue;
    depth[root] = 0;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& [w, e] : adj[v]) {
        if (depth[w] != kNone) continue;
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        tree[e] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<Bits> basis;
  for (EdgeId e = 0; e < m; ++e) {
    if (tree[e]) continue;
    Bits cycle(words, 0);
    flip_bit(cycle, e);
    VertexId a = g.edge(e).end1;
    VertexId b = g.edge(e).end2;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      flip_bit(cycle, parent_edge[a]);
      a = parent[a];
    }
    basis.push_back(std::move(cycle));
  }
  return basis;
}

std::uint8_t mod3(std::int64_t x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }

// Kernel of the Z3 incidence matrix (canonical orientation) in reduced row
// echelon form, with a backtracking search for a kernel vector that is
// nonzero on a prescribed edge set.
class Z3Kernel {
 public:
  explicit Z3Kernel(const SignedGraph& g) : m_(g.edge_count()) {
    const std::size_t n = g.vertex_count();
    const Orientation tau = Orientation::canonical(g);
    std::vector<std::vector<std::uint8_t>> rows(n, std::vector<std::uint8_t>(m_, 0));
    for (EdgeId e = 0; e < m_; ++e) {
      const Edge& edge = g.edge(e);
      for (int i = 0; i < 2; ++i) {
        auto& cell = rows[edge.end(i)][e];
        cell = mod3(cell + (tau[e][i] == Dir::Away ? 1 : -1));
      }
    }
    std::size_t r = 0;
    std::vector<char> is_pivot(m_, 0);
    std::vector<EdgeId> pivot_columns;
    for (EdgeId c = 0; c < m_ && r < n; ++c) {
      std::size_t p = r;
      while (p < n && rows[p][c] == 0) ++p;
      if (p == n) continue;
      std::swap(rows[p], rows[r]);
      const std::uint8_t inv = rows[r][c];  // 1 and 2 are self-inverse mod 3
      for (auto& x : rows[r]) x = static_cast<std::uint8_t>((x * inv) % 3);
      for (std::size_t q = 0; q < n; ++q) {
        if (q == r || rows[q][c] == 0) continue;
        const std::uint8_t factor = rows[q][c];
        for (EdgeId j = 0; j < m_; ++j) rows[q][j] = mod3(rows[q][j] - factor * rows[r][j]);
      }
      pivot_columns.push_back(c);
      is_pivot[c] = 1;
      ++r;
    }
    for (std::size_t i = 0; i < pivot_columns.size(); ++i) pivots_.push_back({pivot_columns[i], rows[i]});
    for (EdgeId c = 0; c < m_; ++c) {
      if (!is_pivot[c]) free_.push_back(c);
    }
    // Each pivot value is fixed once the last free column it depends on is set.
    decided_after_.assign(free_.size() + 1, {});
    for (std::size_t p = 0; p < pivots_.size(); ++p) {
      std::size_t last = 0;
      for (std::size_t t = 0; t < free_.size(); ++t) {
        if (pivots_[p].row[free_[t]] != 0) last = t + 1;
      }
      decided_after_[last].push_back(p);
    }
  }

  std::size_t dimension() const noexcept { return free_.size(); }

  std::optional<std::vector<std::uint8_t>> solve(const std::vector<char>& nonzero) {
    nonzero_ = &nonzero;
    x_.assign(m_, 0);
    if (!pivots_ok(0)) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    return x_;
  }

 private:
  struct Pivot {
    EdgeId column;
    std::vector<std::uint8_t> row;
  };

  bool pivots_ok(std::size_t stage) {
    for (std::size_t p : decided_after_[stage]) {
      const Pivot& pv = pivots_[p];
      std::int64_t sum = 0;
      for (EdgeId j : free_) sum += pv.row[j] * x_[j];
      x_[pv.column] = mod3(-sum);
      if ((*nonzero_)[pv.column] && x_[pv.column] == 0) return false;
    }
    return true;
  }

  bool assign(std::size_t t) {
    if (t == free_.size()) return true;
    const EdgeId c = free_[t];
    for (std::uint8_t v = (*nonzero_)[c] ? 1 : 0; v < 3; ++v) {
      x_[c] = v;
      if (pivots_ok(t + 1) && assign(t + 1)) return true;
    }
    x_[c] = 0;
    return false;
  }

  std::size_t m_;
  std::vector<Pivot> pivots_;
  std::vector<EdgeId> free_;
  std::vector<std::vector<std::size_t>> decided_after_;
  const std::vector<char>* nonzero_ = nullptr;
  std::vector<std::uint8_t> x_;
};

}  // namespace

std::optional<Z2Z3Flow> find_z2z3_flow(const SignedGraph& g) {
  const std::size_t m = g.edge_count();
  const auto basis = cycle_space_basis(g);
  if (basis.size() > kCycleSpaceDimensionLimit) {
    throw SearchLimitError("Z2 cycle-space dimension " + std::to_string(basis.size()) + " exceeds " +
                           std::to_string(kCycleSpaceDimensionLimit));
  }
  Bits negative((m + 63) / 64, 0);
  for (EdgeId e : g.negative_edges()) flip_bit(negative, e);
  auto negative_parity = [&](const Bits& bits) {
    unsigned parity = 0;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      parity ^= static_cast<unsigned>(__builtin_popcountll(bits[w] & negative[w]) & 1);
    }
    return parity;
  };
  std::vector<unsigned> basis_parity;
  for (const Bits& b : basis) basis_parity.push_back(negative_parity(b));

  Z3Kernel kernel(g);
  Bits support((m + 63) / 64, 0);
  unsigned parity = 0;
  std::vector<char> nonzero(m, 0);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  // Gray-code order: candidate i differs from candidate i-1 in one basis vector.
  for (std::uint64_t i = 0; i < total; ++i) {
    if (i > 0) {
      const auto k = static_cast<std::size_t>(__builtin_ctzll(i));
      for (std::size_t w = 0; w < support.size(); ++w) support[w] ^= basis[k][w];
      parity ^= basis_parity[k];
    }
    if (parity != 0) continue;
    for (EdgeId e = 0; e < m; ++e) nonzero[e] = static_cast<char>(!test_bit(support, e));
    if (auto z3 = kernel.solve(nonzero)) {
      Z2Z3Flow out{Orientation::canonical(g), Z2Z3Valuation(m)};
      for (EdgeId e = 0; e < m; ++e) {
        out.values[e] = {static_cast<std::uint8_t>(test_bit(support, e)), (*z3)[e]};
      }
      return out;
    }
  }
  return std::nullopt;
}

std::uint8_t z2z3_to_z6(std::uint8_t a, std::uint8_t b) {
  if (a > 1 || b > 2) throw std::out_of_range("not an element of Z2 x Z3");
  for (std::uint8_t x = 0; x < 6; ++x) {
    if (kZ6ToPair[x] == Z2Z3{a, b}) return x;
  }
  throw std::logic_error("isomorphism table is incomplete");
}

Z2Z3 z6_to_z2z3(std::uint8_t x) { return kZ6ToPair.at(x); }

Z6Valuation to_z6(const Z2Z3Valuation& values) {
  Z6Valuation out;
  out.reserve(values.size());
  for (const Z2Z3& v : values) out.push_back(z2z3_to_z6(v.a, v.b));
  return out;
}

std::vector<std::int64_t> boundary_mod(const SignedGraph& g, const Orientation& tau,
                                       const std::vector<std::int64_t>& values, std::int64_t modulus) {
  auto b = boundary(g, tau, values);
  for (auto& x : b) x = ((x % modulus) + modulus) % modulus;
  return b;
}

NormalizedValuation normalize_cubic(const SignedGraph& g, const Orientation& tau, const Z6Valuation& phi6) {
  if (!g.is_cubic()) throw NormalizationError("graph is not cubic");
  if (g.has_loop()) throw NormalizationError("graph has a loop");
  if (!is_sign_consistent(g, tau)) throw NormalizationError("orientation is not sign-consistent");
  if (phi6.size() != g.edge_count()) throw NormalizationError("valuation does not match the edge count");
  std::size_t odd_negative = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (phi6[e] == 0 || phi6[e] > 5) throw NormalizationError("Z6 valuation is not nowhere-zero");
    if (g.edge(e).is_negative() && phi6[e] % 2 == 1) ++odd_negative;
  }
  if (odd_negative % 2 != 0) {
    throw NormalizationError("odd values meet the negative edges an odd number of times");
  }
  EdgeValuation values(phi6.begin(), phi6.end());
  for (auto x : boundary_mod(g, tau, values, 6)) {
    if (x != 0) throw NormalizationError("valuation is not a Z6 flow");
  }

  NormalizedValuation out{g, tau, std::move(values), {}, 0};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (out.values[e] >= 4) {
      out.orientation[e] = {flipped(out.orientation[e][0]), flipped(out.orientation[e][1])};
      out.values[e] = 6 - out.values[e];
    }
  }
  for (FlowValue b : boundary(out.graph, out.orientation, out.values)) {
    if (b != -6 && b != 0 && b != 6) {
      throw NormalizationError("integer boundary outside {-6, 0, 6}");
    }
  }
  // Per-vertex decisions are independent: switching at v changes only the
  // ends at v.
  std::vector<VertexId> to_switch;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_degree(out.graph, out.orientation, v) >= 2) to_switch.push_back(v);
  }
  for (VertexId v : to_switch) {
    auto s = switch_vertex(out.graph, out.orientation, v);
    out.graph = std::move(s.graph);
    out.orientation = std::move(s.orientation);
  }
  out.switched = std::move(to_switch);

  const SourceParity parity = source_parity(out.graph, out.orientation, out.values);
  if (!parity.holds) throw NormalizationError("source count parity check failed");
  out.sources = parity.sources;
  return out;
}

SourceParity source_parity(const SignedGraph& g, const Orientation& tau, const EdgeValuation& phi) {
  if (phi.size() != g.edge_count()) throw NormalizationError("valuation does not match the edge count");
  for (FlowValue x : phi) {
    if (x < 1 || x > 3) throw NormalizationError("value outside {1,2,3}");
  }
  const auto b = boundary(g, tau, phi);
  SourceParity out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Role role = vertex_role(g, tau, v);
    if (role == Role::Source && b[v] == 6) {
      ++out.sources;
    } else if (!(role == Role::NearSource && b[v] == 0)) {
      throw NormalizationError("vertex " + std::to_string(v) + " is a " + to_string(role) +
                               " with boundary " + std::to_string(b[v]));
    }
  }
  std::array<std::int64_t, 4> x{};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).is_negative()) continue;
    x[static_cast<std::size_t>(phi[e])] += tau[e][0] == Dir::Away ? 1 : -1;
  }
  out.x1 = x[1];
  out.x2 = x[2];
  out.x3 = x[3];
  const auto w = static_cast<std::int64_t>(out.sources);
  out.holds = 6 * w == 2 * (out.x1 + out.x3) + 4 * out.x2 + 4 * out.x3 && w % 2 == 0;
  return out;
}

}  // namespace sixflow
