#include "sixflow/reduce.hpp"

#include <algorithm>
#include <sstream>

#include "sixflow/flow_algebra.hpp"

namespace sixflow {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int far_end_index(const Edge& e, VertexId v) { return e.end1 == v ? 1 : 0; }

std::optional<VertexId> lowest_vertex_of_degree(const SignedGraph& g, std::size_t lo, std::size_t hi) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t d = g.degree(v);
    if (d >= lo && d <= hi) return v;
  }
  return std::nullopt;
}

SuppressStep apply_suppression(SignedGraph& g, VertexId v) {
  const auto ends = g.ends_at(v);
  if (ends.size() != 2) throw ReductionError("suppression needs a degree-2 vertex");
  if (ends[0].edge == ends[1].edge) {
    throw ReductionError("degree-2 vertex " + std::to_string(v) + " carries a loop");
  }
  SuppressStep step;
  step.vertex = v;
  step.first_id = ends[0].edge;
  step.second_id = ends[1].edge;
  step.first = g.edge(step.first_id);
  step.second = g.edge(step.second_id);

  VertexId u1 = step.first.end(far_end_index(step.first, v));
  VertexId u2 = step.second.end(far_end_index(step.second, v));
  g.erase_edge(step.second_id);
  g.erase_edge(step.first_id);
  g.erase_vertex(v);
  if (u1 > v) --u1;
  if (u2 > v) --u2;
  step.merged_id = g.add_edge(u1, u2, product(step.first.sign, step.second.sign));
  return step;
}

void undo_suppression(SignedGraph& g, const SuppressStep& step) {
  if (step.merged_id + 1 != g.edge_count()) throw ReductionError("recipe does not match graph (suppress)");
  g.erase_edge(step.merged_id);
  g.insert_vertex(step.vertex);
  g.insert_edge(step.first_id, step.first);
  g.insert_edge(step.second_id, step.second);
}

UncontractStep apply_uncontraction(SignedGraph& g, VertexId v, EdgeEnd a, EdgeEnd b) {
  if (g.degree(v) < 4) {
    throw ReductionError("uncontraction needs degree >= 4 at vertex " + std::to_string(v));
  }
  if (a == b) throw ReductionError("uncontraction needs two distinct members of delta(v)");
  for (EdgeEnd end : {a, b}) {
    if (g.edge(end.edge).end(end.end) != v) {
      throw ReductionError("edge " + std::to_string(end.edge) + " is not incident to vertex " +
                           std::to_string(v));
    }
  }
  UncontractStep step;
  step.vertex = v;
  step.moved = {std::min(a, b), std::max(a, b)};
  step.new_vertex = g.add_vertex();
  for (EdgeEnd end : step.moved) g.set_endpoint(end.edge, end.end, step.new_vertex);
  step.new_edge = g.add_edge(v, step.new_vertex, Sign::Positive);
  step.kept = true;
  return step;
}

void undo_uncontraction(SignedGraph& g, const UncontractStep& step) {
  if (step.kept) {
    if (step.new_edge + 1 != g.edge_count()) throw ReductionError("recipe does not match graph (uncontract)");
    g.erase_edge(step.new_edge);
  }
  if (step.new_vertex + 1 != g.vertex_count()) throw ReductionError("recipe does not match graph (uncontract)");
  for (EdgeEnd end : step.moved) {
    if (g.edge(end.edge).end(end.end) != step.new_vertex) {
      throw ReductionError("recipe does not match graph (uncontract)");
    }
    g.set_endpoint(end.edge, end.end, step.vertex);
  }
  g.erase_vertex(step.new_vertex);
}

void apply_switch_signs(SignedGraph& g, VertexId v) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (!edge.is_loop() && (edge.end1 == v || edge.end2 == v)) g.set_sign(e, flipped(edge.sign));
  }
}

void apply_step(SignedGraph& g, const ReductionStep& step) {
  std::visit(Overloaded{
                 [&](const SuppressStep& s) {
                   if (apply_suppression(g, s.vertex) != s) {
                     throw ReductionError("recipe does not match graph (suppress)");
                   }
                 },
                 [&](const UncontractStep& s) {
                   apply_uncontraction(g, s.vertex, s.moved[0], s.moved[1]);
                   if (!s.kept) g.erase_edge(s.new_edge);
                 },
                 [&](const SwitchStep& s) {
                   if (s.vertex >= g.vertex_count()) throw ReductionError("recipe does not match graph (switch)");
                   apply_switch_signs(g, s.vertex);
                 },
             },
             step);
}

// A component in which every vertex has degree 2 would collapse to a lone
// loop under suppression.
bool has_cycle_component(const SignedGraph& g) {
  const auto labels = component_labels(g);
  const std::size_t count = component_count(g);
  std::vector<char> all_two(count, 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) all_two[labels[v]] = 0;
  }
  return std::find(all_two.begin(), all_two.end(), 1) != all_two.end();
}

// The two lowest members of delta(v), never both ends of one positive loop.
std::vector<std::pair<EdgeEnd, EdgeEnd>> candidate_pairs(const SignedGraph& g, VertexId v) {
  const auto ends = g.ends_at(v);
  std::vector<std::pair<EdgeEnd, EdgeEnd>> pairs;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      const Edge& e = g.edge(ends[i].edge);
      if (ends[i].edge == ends[j].edge && e.is_loop() && !e.is_negative()) continue;
      pairs.emplace_back(ends[i], ends[j]);
    }
  }
  return pairs;
}

void check_lifted(const SignedGraph& g, const Orientation& tau, const EdgeValuation& f) {
  if (!is_sign_consistent(g, tau)) throw ReductionError("lifted orientation is not sign-consistent");
  if (std::find(f.begin(), f.end(), FlowValue{0}) != f.end()) {
    throw ReductionError("lifted valuation has a zero");
  }
  if (!is_zero(boundary(g, tau, f))) throw ReductionError("lifted valuation is not a flow");
}

}  // namespace

Reduction suppress_degree_two(const SignedGraph& g) {
  Reduction out{g, {}};
  while (auto v = lowest_vertex_of_degree(out.graph, 2, 2)) {
    out.recipe.steps.emplace_back(apply_suppression(out.graph, *v));
  }
  return out;
}

SignedGraph uncontract_vertex(const SignedGraph& g, VertexId v, EdgeId e1, EdgeId e2) {
  if (v >= g.vertex_count()) throw ReductionError("unknown vertex " + std::to_string(v));
  auto end_at = [&](EdgeId e, int skip) -> EdgeEnd {
    const Edge& edge = g.edge(e);
    for (int i = 0; i < 2; ++i) {
      if (i != skip && edge.end(i) == v) return {e, i};
    }
    throw ReductionError("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
  };
  const EdgeEnd a = end_at(e1, -1);
  const EdgeEnd b = e1 == e2 ? end_at(e2, a.end) : end_at(e2, -1);
  SignedGraph out = g;
  apply_uncontraction(out, v, a, b);
  return out;
}

Reduction reduce_to_cubic(const SignedGraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 2) {
      throw ReductionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (component_count(g) > 1) throw ReductionError("graph is not connected");
  if (!is_flow_admissible(g)) throw ReductionError("graph is not flow-admissible");

  Reduction out{g, {}};
  for (;;) {
    while (auto v = lowest_vertex_of_degree(out.graph, 2, 2)) {
      out.recipe.steps.emplace_back(apply_suppression(out.graph, *v));
    }
    const auto high = lowest_vertex_of_degree(out.graph, 4, static_cast<std::size_t>(-1));
    if (!high) break;

    bool applied = false;
    for (const auto& [a, b] : candidate_pairs(out.graph, *high)) {
      SignedGraph expanded = out.graph;
      UncontractStep step = apply_uncontraction(expanded, *high, a, b);
      SignedGraph trimmed = expanded;
      trimmed.erase_edge(step.new_edge);
      if (is_flow_admissible(trimmed) && !has_cycle_component(trimmed)) {
        step.kept = false;
        out.graph = std::move(trimmed);
      } else if (is_flow_admissible(expanded)) {
        out.graph = std::move(expanded);
      } else {
        continue;
      }
      out.recipe.steps.emplace_back(step);
      applied = true;
      break;
    }
    if (!applied) {
      throw ReductionError("no uncontraction at vertex " + std::to_string(*high) + " is flow-admissible");
    }
  }
  if (!out.graph.is_cubic()) throw ReductionError("reduction did not reach a cubic graph");
  return out;
}

SignedGraph replay_forward(const LiftRecipe& recipe, const SignedGraph& original) {
  SignedGraph g = original;
  for (const ReductionStep& step : recipe.steps) apply_step(g, step);
  return g;
}

SignedGraph replay_inverse(const LiftRecipe& recipe, const SignedGraph& reduced) {
  SignedGraph g = reduced;
  for (auto it = recipe.steps.rbegin(); it != recipe.steps.rend(); ++it) {
    std::visit(Overloaded{
                   [&](const SuppressStep& s) { undo_suppression(g, s); },
                   [&](const UncontractStep& s) { undo_uncontraction(g, s); },
                   [&](const SwitchStep& s) { apply_switch_signs(g, s.vertex); },
               },
               *it);
  }
  return g;
}

IntegerFlow lift_flow(const LiftRecipe& recipe, const SignedGraph& original, const Orientation& tau,
                      const EdgeValuation& f) {
  std::vector<SignedGraph> before;
  before.reserve(recipe.steps.size() + 1);
  before.push_back(original);
  for (const ReductionStep& step : recipe.steps) {
    SignedGraph next = before.back();
    apply_step(next, step);
    before.push_back(std::move(next));
  }
  const SignedGraph& reduced = before.back();
  if (tau.edge_count() != reduced.edge_count() || f.size() != reduced.edge_count()) {
    throw ReductionError("flow does not match the reduced graph");
  }

  Orientation orientation = tau;
  EdgeValuation values = f;
  for (std::size_t i = recipe.steps.size(); i-- > 0;) {
    const SignedGraph& pre = before[i];
    std::visit(Overloaded{
                   [&](const SuppressStep& s) {
                     const Orientation::DirPair d = orientation.erase(s.merged_id);
                     const FlowValue x = values[s.merged_id];
                     values.pop_back();
                     auto restore = [&](EdgeId id, const Edge& e, Dir far_dir) {
                       const int far = far_end_index(e, s.vertex);
                       Orientation::DirPair dirs{};
                       dirs[far] = far_dir;
                       dirs[1 - far] = e.is_negative() ? far_dir : flipped(far_dir);
                       orientation.insert(id, dirs);
                       values.insert(values.begin() + static_cast<std::ptrdiff_t>(id), x);
                     };
                     restore(s.first_id, s.first, d[0]);
                     restore(s.second_id, s.second, d[1]);
                   },
                   [&](const UncontractStep& s) {
                     if (s.kept) {
                       orientation.erase(s.new_edge);
                       values.pop_back();
                     }
                   },
                   [&](const SwitchStep& s) {
                     for (EdgeEnd end : pre.ends_at(s.vertex)) {
                       orientation[end.edge][end.end] = flipped(orientation.at(end));
                     }
                   },
               },
               recipe.steps[i]);
  }
  check_lifted(original, orientation, values);
  return {std::move(orientation), std::move(values)};
}

UncontractedFlow extend_flow_across_uncontraction(const SignedGraph& g, const Orientation& tau,
                                                  const EdgeValuation& f, VertexId v, EdgeId e1,
                                                  EdgeId e2) {
  UncontractedFlow out{uncontract_vertex(g, v, e1, e2), {tau, f}, true};
  const VertexId split = out.graph.vertex_count() - 1;
  FlowValue a = 0;
  for (EdgeEnd end : out.graph.ends_at(split)) {
    if (end.edge == out.graph.edge_count() - 1) continue;
    a += tau.at(end) == Dir::Away ? f[end.edge] : -f[end.edge];
  }
  if (a == 0) {
    out.graph.erase_edge(out.graph.edge_count() - 1);
    out.kept = false;
    return out;
  }
  // New edge runs v -> split when the split side has surplus a > 0.
  out.flow.orientation.push_back(a > 0 ? Orientation::DirPair{Dir::Away, Dir::Toward}
                                       : Orientation::DirPair{Dir::Toward, Dir::Away});
  out.flow.values.push_back(a > 0 ? a : -a);
  return out;
}

std::string serialize_recipe(const LiftRecipe& recipe) {
  std::ostringstream os;
  os << "recipe 1\n" << recipe.steps.size() << '\n';
  auto edge = [&](EdgeId id, const Edge& e) {
    os << ' ' << id << ' ' << e.end1 << ' ' << e.end2 << ' ' << to_string(e.sign);
  };
  for (const ReductionStep& step : recipe.steps) {
    std::visit(Overloaded{
                   [&](const SuppressStep& s) {
                     os << "suppress " << s.vertex;
                     edge(s.first_id, s.first);
                     edge(s.second_id, s.second);
                     os << ' ' << s.merged_id;
                   },
                   [&](const UncontractStep& s) {
                     os << "uncontract " << s.vertex << ' ' << s.new_vertex;
                     for (EdgeEnd end : s.moved) os << ' ' << end.edge << ' ' << end.end;
                     os << ' ' << s.new_edge << ' ' << (s.kept ? 1 : 0);
                   },
                   [&](const SwitchStep& s) { os << "switch " << s.vertex; },
               },
               step);
    os << '\n';
  }
  return os.str();
}

LiftRecipe parse_recipe(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> std::runtime_error {
    return std::runtime_error("recipe line " + std::to_string(line_no) + ": " + why);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    return false;
  };
  auto read_sign = [&](std::istringstream& ls) {
    std::string tok;
    ls >> tok;
    if (tok == "+") return Sign::Positive;
    if (tok == "-") return Sign::Negative;
    throw fail("bad sign token '" + tok + "'");
  };

  if (!next_line() || line != "recipe 1") throw fail("expected header 'recipe 1'");
  if (!next_line()) throw fail("missing step count");
  std::size_t count = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> count)) throw fail("bad step count");
  }
  LiftRecipe recipe;
  for (std::size_t i = 0; i < count; ++i) {
    if (!next_line()) throw fail("expected " + std::to_string(count) + " steps");
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "suppress") {
      SuppressStep s;
      ls >> s.vertex >> s.first_id >> s.first.end1 >> s.first.end2;
      s.first.sign = read_sign(ls);
      ls >> s.second_id >> s.second.end1 >> s.second.end2;
      s.second.sign = read_sign(ls);
      ls >> s.merged_id;
      if (!ls) throw fail("malformed suppress step");
      recipe.steps.emplace_back(s);
    } else if (kind == "uncontract") {
      UncontractStep s;
      int kept = 0;
      ls >> s.vertex >> s.new_vertex >> s.moved[0].edge >> s.moved[0].end >> s.moved[1].edge >>
          s.moved[1].end >> s.new_edge >> kept;
      if (!ls || kept < 0 || kept > 1) throw fail("malformed uncontract step");
      s.kept = kept == 1;
      recipe.steps.emplace_back(s);
    } else if (kind == "switch") {
      SwitchStep s;
      if (!(ls >> s.vertex)) throw fail("malformed switch step");
      recipe.steps.emplace_back(s);
    } else {
      throw fail("unknown step '" + kind + "'");
    }
  }
  return recipe;
}

}  // namespace sixflow
