#pragma once

// Signed graphs with bidirected orientations.
//
// A SignedGraph is a multigraph (loops and parallel edges allowed) whose
// edges carry a sign. Edges are addressed by their stable index; the order of
// the two endpoints is part of an edge's identity so that the direction of an
// edge at each of its ends is unambiguous, even for loops.
//
// An Orientation stores one direction mark per edge end. The sets of
// outgoing and incoming ends at a vertex are derived from these marks and
// never stored separately.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sixflow {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using FlowValue = std::int64_t;

enum class Sign : std::uint8_t { Positive, Negative };
enum class Dir : std::uint8_t { Away, Toward };

constexpr Sign flipped(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Dir flipped(Dir d) noexcept {
  return d == Dir::Away ? Dir::Toward : Dir::Away;
}
constexpr Sign product(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

struct Edge {
  VertexId end1 = 0;
  VertexId end2 = 0;
  Sign sign = Sign::Positive;

  bool is_loop() const noexcept { return end1 == end2; }
  bool is_negative() const noexcept { return sign == Sign::Negative; }
  VertexId end(int i) const noexcept { return i == 0 ? end1 : end2; }
  VertexId& end(int i) noexcept { return i == 0 ? end1 : end2; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One member of the multiset of edge ends at a vertex. A loop contributes
/// two members (end 0 and end 1).
struct EdgeEnd {
  EdgeId edge = 0;
  int end = 0;

  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  /// Throws GraphError if an endpoint is out of range.
  SignedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Edge& edge(EdgeId e) const;
  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Number of edge ends at v; a loop counts twice.
  std::size_t degree(VertexId v) const;
  /// The multiset of edge ends at v, ordered by (edge, end).
  std::vector<EdgeEnd> ends_at(VertexId v) const;
  std::vector<EdgeId> negative_edges() const;
  bool has_loop() const noexcept;
  bool is_cubic() const noexcept;

  VertexId add_vertex() { return vertex_count_++; }
  EdgeId add_edge(VertexId a, VertexId b, Sign sign);

  // Index-shifting edits. Each has an exact inverse: insert_edge undoes
  // erase_edge at the same index, insert_vertex undoes erase_vertex.
  void insert_edge(EdgeId at, const Edge& edge);
  Edge erase_edge(EdgeId e);
  void insert_vertex(VertexId at);
  /// Requires v to have no incident edge ends.
  void erase_vertex(VertexId v);

  void set_endpoint(EdgeId e, int end, VertexId v);
  void set_sign(EdgeId e, Sign sign);

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

class Orientation {
 public:
  using DirPair = std::array<Dir, 2>;

  Orientation() = default;
  explicit Orientation(std::vector<DirPair> dirs) : dirs_(std::move(dirs)) {}

  /// Positive edges point from end1 to end2; negative edges point away from
  /// both ends.
  static Orientation canonical(const SignedGraph& g);

  std::size_t edge_count() const noexcept { return dirs_.size(); }
  const DirPair& operator[](EdgeId e) const { return dirs_.at(e); }
  DirPair& operator[](EdgeId e) { return dirs_.at(e); }
  Dir at(EdgeEnd end) const { return dirs_.at(end.edge)[end.end]; }
  std::span<const DirPair> dirs() const noexcept { return dirs_; }

  void insert(EdgeId at, DirPair d) { dirs_.insert(dirs_.begin() + static_cast<std::ptrdiff_t>(at), d); }
  DirPair erase(EdgeId e);
  void push_back(DirPair d) { dirs_.push_back(d); }

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<DirPair> dirs_;
};

using EdgeValuation = std::vector<FlowValue>;
using VertexValuation = std::vector<FlowValue>;

/// Shape match plus the per-edge sign rule: positive edges have one Away and
/// one Toward end, negative edges two equal ends.
bool is_sign_consistent(const SignedGraph& g, const Orientation& tau);
/// Throws GraphError describing the first violation.
void require_sign_consistent(const SignedGraph& g, const Orientation& tau);

std::vector<EdgeEnd> out_ends(const SignedGraph& g, const Orientation& tau, VertexId v);
std::vector<EdgeEnd> in_ends(const SignedGraph& g, const Orientation& tau, VertexId v);
std::size_t in_degree(const SignedGraph& g, const Orientation& tau, VertexId v);

std::string to_string(Sign s);
std::string to_string(Dir d);

}  // namespace sixflow
