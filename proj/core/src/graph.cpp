#include "sixflow/graph.hpp"

#include <algorithm>

namespace sixflow {

SignedGraph::SignedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].end1 >= vertex_count_ || edges_[i].end2 >= vertex_count_) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint outside [0, " +
                       std::to_string(vertex_count_) + ")");
    }
  }
}

void SignedGraph::check_vertex(VertexId v) const {
  if (v >= vertex_count_) {
    throw GraphError("unknown vertex " + std::to_string(v));
  }
}

const Edge& SignedGraph::edge(EdgeId e) const {
  if (e >= edges_.size()) {
    throw GraphError("unknown edge " + std::to_string(e));
  }
  return edges_[e];
}

std::size_t SignedGraph::degree(VertexId v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (const Edge& e : edges_) {
    d += static_cast<std::size_t>(e.end1 == v) + static_cast<std::size_t>(e.end2 == v);
  }
  return d;
}

std::vector<EdgeEnd> SignedGraph::ends_at(VertexId v) const {
  check_vertex(v);
  std::vector<EdgeEnd> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i].end1 == v) out.push_back({i, 0});
    if (edges_[i].end2 == v) out.push_back({i, 1});
  }
  return out;
}

std::vector<EdgeId> SignedGraph::negative_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId i = 0; i < edges_.size(); ++i) {
    if (edges_[i].is_negative()) out.push_back(i);
  }
  return out;
}

bool SignedGraph::has_loop() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool SignedGraph::is_cubic() const noexcept {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.end1];
    ++deg[e.end2];
  }
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 3; });
}

EdgeId SignedGraph::add_edge(VertexId a, VertexId b, Sign sign) {
  check_vertex(a);
  check_vertex(b);
  edges_.push_back({a, b, sign});
  return edges_.size() - 1;
}

void SignedGraph::insert_edge(EdgeId at, const Edge& edge) {
  if (at > edges_.size()) throw GraphError("edge insertion index out of range");
  check_vertex(edge.end1);
  check_vertex(edge.end2);
  edges_.insert(edges_.begin() + static_cast<std::ptrdiff_t>(at), edge);
}

Edge SignedGraph::erase_edge(EdgeId e) {
  Edge removed = edge(e);
  edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(e));
  return removed;
}

void SignedGraph::insert_vertex(VertexId at) {
  if (at > vertex_count_) throw GraphError("vertex insertion index out of range");
  for (Edge& e : edges_) {
    if (e.end1 >= at) ++e.end1;
    if (e.end2 >= at) ++e.end2;
  }
  ++vertex_count_;
}

void SignedGraph::erase_vertex(VertexId v) {
  check_vertex(v);
  for (const Edge& e : edges_) {
    if (e.end1 == v || e.end2 == v) {
      throw GraphError("cannot erase vertex " + std::to_string(v) + ": it still has edges");
    }
  }
  for (Edge& e : edges_) {
    if (e.end1 > v) --e.end1;
    if (e.end2 > v) --e.end2;
  }
  --vertex_count_;
}

void SignedGraph::set_endpoint(EdgeId e, int end, VertexId v) {
  check_vertex(v);
  if (e >= edges_.size()) throw GraphError("unknown edge " + std::to_string(e));
  edges_[e].end(end) = v;
}

void SignedGraph::set_sign(EdgeId e, Sign sign) {
  if (e >= edges_.size()) throw GraphError("unknown edge " + std::to_string(e));
  edges_[e].sign = sign;
}

Orientation Orientation::canonical(const SignedGraph& g) {
  std::vector<DirPair> dirs;
  dirs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    dirs.push_back(e.is_negative() ? DirPair{Dir::Away, Dir::Away} : DirPair{Dir::Away, Dir::Toward});
  }
  return Orientation(std::move(dirs));
}

Orientation::DirPair Orientation::erase(EdgeId e) {
  DirPair d = dirs_.at(e);
  dirs_.erase(dirs_.begin() + static_cast<std::ptrdiff_t>(e));
  return d;
}

namespace {

const char* sign_violation(const SignedGraph& g, const Orientation& tau, EdgeId& bad) {
  if (tau.edge_count() != g.edge_count()) return "orientation does not match the edge count";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool same = tau[e][0] == tau[e][1];
    if (same != g.edge(e).is_negative()) {
      bad = e;
      return g.edge(e).is_negative() ? "negative edge with mixed directions"
                                     : "positive edge with equal directions";
    }
  }
  return nullptr;
}

}  // namespace

bool is_sign_consistent(const SignedGraph& g, const Orientation& tau) {
  EdgeId bad = 0;
  return sign_violation(g, tau, bad) == nullptr;
}

void require_sign_consistent(const SignedGraph& g, const Orientation& tau) {
  EdgeId bad = 0;
  if (const char* why = sign_violation(g, tau, bad)) {
    if (tau.edge_count() != g.edge_count()) throw GraphError(why);
    throw GraphError(std::string(why) + " at edge " + std::to_string(bad));
  }
}

std::vector<EdgeEnd> out_ends(const SignedGraph& g, const Orientation& tau, VertexId v) {
  std::vector<EdgeEnd> out;
  for (EdgeEnd end : g.ends_at(v)) {
    if (tau.at(end) == Dir::Away) out.push_back(end);
  }
  return out;
}

std::vector<EdgeEnd> in_ends(const SignedGraph& g, const Orientation& tau, VertexId v) {
  std::vector<EdgeEnd> out;
  for (EdgeEnd end : g.ends_at(v)) {
    if (tau.at(end) == Dir::Toward) out.push_back(end);
  }
  return out;
}

std::size_t in_degree(const SignedGraph& g, const Orientation& tau, VertexId v) {
  return in_ends(g, tau, v).size();
}

std::string to_string(Sign s) { return s == Sign::Positive ? "+" : "-"; }
std::string to_string(Dir d) { return d == Dir::Away ? "a" : "t"; }

}  // namespace sixflow
