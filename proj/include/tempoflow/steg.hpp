#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tempoflow/maxflow.hpp"
#include "tempoflow/temporal_flow.hpp"
#include "tempoflow/temporal_graph.hpp"

namespace tempoflow {

enum class ArcKind { Vertical, Crossing };

struct StegNode {
  VertexId vertex;
  TimePoint time;
};

struct StegArc {
  int from = -1;
  int to = -1;
  Cap capacity;
  ArcKind kind = ArcKind::Vertical;
  std::optional<TimeEdge> origin;  // the time edge a Crossing arc stands for
};

// Static DAG of timed vertex copies. Vertical arcs chain the copies of one
// vertex (storage, capacity B(v)); each time edge (u,v,l) contributes one
// Crossing arc from (u, 2l) to (v, 2l+1) with the edge capacity. Nodes are
// listed in (time, vertex) order, which is a topological order.
struct StegGraph {
  std::vector<StegNode> nodes;
  std::vector<StegArc> arcs;  // verticals first, then crossings by (edge, label)
  int source_node = -1;
  int sink_node = -1;
  TemporalGraph graph;  // the deadline-restricted network this was built from

  StaticNetwork as_static_network() const {
    StaticNetwork net;
    net.node_count = static_cast<int>(nodes.size());
    net.source = source_node;
    net.sink = sink_node;
    net.arcs.reserve(arcs.size());
    for (const auto& a : arcs) net.arcs.push_back({a.from, a.to, a.capacity});
    return net;
  }

  int crossing_arc(const TimeEdge& te) const {
    auto it = crossing_index.find(te);
    if (it == crossing_index.end()) throw DomainError("no crossing arc for (" + te.edge + "," +
                                                      std::to_string(te.label) + ")");
    return it->second;
  }

  std::map<TimeEdge, int> crossing_index;
};

inline StegGraph build_steg(const TemporalGraph& g, Label deadline) {
  TemporalGraph r = restrict_to_deadline(g, deadline);

  std::map<VertexId, std::set<TimePoint>> copies;
  for (const VertexId& v : r.vertices()) copies[v].insert(TimePoint::start());
  for (const Edge& e : r.edges()) {
    for (Label l : e.labels) {
      copies[e.tail].insert(TimePoint::departure(l));
      copies[e.head].insert(TimePoint::arrival(l));
    }
  }

  StegGraph steg{.nodes = {}, .arcs = {}, .source_node = -1, .sink_node = -1, .graph = r};
  std::map<std::pair<TimePoint, VertexId>, int> index;
  for (const auto& [v, times] : copies) {
    for (TimePoint t : times) index[{t, v}] = 0;
  }
  for (auto& [key, id] : index) {
    id = static_cast<int>(steg.nodes.size());
    steg.nodes.push_back({key.second, key.first});
  }

  for (const auto& [v, times] : copies) {
    Cap storage = r.buffer(v);
    std::optional<TimePoint> prev;
    for (TimePoint t : times) {
      if (prev) {
        steg.arcs.push_back(
            {index.at({*prev, v}), index.at({t, v}), storage, ArcKind::Vertical, std::nullopt});
      }
      prev = t;
    }
  }
  for (const Edge& e : r.edges()) {
    for (Label l : e.labels) {
      StegArc a;
      a.from = index.at({TimePoint::departure(l), e.tail});
      a.to = index.at({TimePoint::arrival(l), e.head});
      a.capacity = Cap(e.capacity);
      a.kind = ArcKind::Crossing;
      a.origin = TimeEdge{e.id, l};
      steg.crossing_index[*a.origin] = static_cast<int>(steg.arcs.size());
      steg.arcs.push_back(std::move(a));
    }
  }

  steg.source_node = index.at({TimePoint::start(), r.source()});
  steg.sink_node = index.at({*copies.at(r.sink()).rbegin(), r.sink()});

  std::size_t v_count = r.vertices().size();
  std::size_t el = r.time_edge_count();
  if (steg.nodes.size() > v_count + 2 * el || steg.arcs.size() > v_count + 3 * el)
    throw DomainError("STEG size bound violated");  // construction invariant
  return steg;
}

// Reads a feasible static flow off the STEG: crossing arcs become time-edge
// amounts, trajectories are rederived. Rejects capacity or conservation
// violations, naming the offender.
inline TemporalFlow static_flow_to_temporal(const StegGraph& steg,
                                            const std::vector<std::int64_t>& static_flow) {
  if (static_flow.size() != steg.arcs.size())
    throw DomainError("static flow does not match arc count");
  std::vector<std::int64_t> balance(steg.nodes.size(), 0);
  for (std::size_t i = 0; i < steg.arcs.size(); ++i) {
    const StegArc& a = steg.arcs[i];
    std::int64_t f = static_flow[i];
    if (f < 0 || (a.capacity.is_finite() && f > a.capacity.value()))
      throw DomainError("infeasible static flow on arc " + std::to_string(i));
    balance[a.from] -= f;
    balance[a.to] += f;
  }
  for (std::size_t n = 0; n < steg.nodes.size(); ++n) {
    if (static_cast<int>(n) == steg.source_node || static_cast<int>(n) == steg.sink_node) continue;
    if (balance[n] != 0)
      throw DomainError("static flow not conserved at node " + steg.nodes[n].vertex + "@" +
                        std::to_string(steg.nodes[n].time.half_units()));
  }
  std::map<TimeEdge, Rational> assignments;
  for (const auto& [te, idx] : steg.crossing_index) {
    if (static_flow[idx] != 0) assignments[te] = Rational(static_flow[idx]);
  }
  return buffer_trajectories(steg.graph, assignments);
}

// Maps a crossing-arc cut back to the time edges it stands for, checking the
// defining property: without them no source-to-sink journey remains.
inline TemporalCut static_cut_to_temporal(const StegGraph& steg, const std::vector<int>& cut_arcs) {
  std::set<TimeEdge> members;
  for (int idx : cut_arcs) {
    if (idx < 0 || idx >= static_cast<int>(steg.arcs.size()))
      throw DomainError("cut arc index out of range");
    const StegArc& a = steg.arcs[idx];
    if (a.kind == ArcKind::Vertical)
      throw DomainError(
          "cut contains a vertical arc: bounded-buffer cuts have no time-edge counterpart");
    members.insert(*a.origin);
  }
  TemporalCut cut;
  std::int64_t cap = 0;
  for (const TimeEdge& te : members) {
    cut.time_edges.push_back(te);
    cap += steg.graph.edge(te.edge).capacity;
  }
  cut.capacity = cap;

  // Removal check: drop the member time edges and require unreachability.
  std::vector<Edge> rest;
  for (const Edge& e : steg.graph.edges()) {
    Edge copy = e;
    copy.labels.erase(std::remove_if(copy.labels.begin(), copy.labels.end(),
                                     [&](Label l) { return members.count({e.id, l}) != 0; }),
                      copy.labels.end());
    if (!copy.labels.empty()) rest.push_back(std::move(copy));
  }
  std::set<VertexId> verts{steg.graph.source(), steg.graph.sink()};
  for (const Edge& e : rest) {
    verts.insert(e.tail);
    verts.insert(e.head);
  }
  std::map<VertexId, Cap> buffers;
  for (const auto& [v, b] : steg.graph.declared_buffers()) {
    if (verts.count(v)) buffers.emplace(v, b);
  }
  TemporalGraph pruned(std::move(rest), std::move(buffers), steg.graph.source(),
                       steg.graph.sink());
  if (temporal_distance(pruned, pruned.source(), pruned.sink()))
    throw DomainError("arc set is not an s-t cut: a journey survives removal");
  return cut;
}

// Debug dump: one line per node and arc, deterministic order.
inline std::string dump_steg(const StegGraph& steg) {
  std::ostringstream out;
  for (const auto& n : steg.nodes)
    out << "node " << n.vertex << " " << n.time.half_units() << "\n";
  for (const auto& a : steg.arcs) {
    const auto& f = steg.nodes[a.from];
    const auto& t = steg.nodes[a.to];
    out << "arc " << (a.kind == ArcKind::Vertical ? "vertical" : "crossing") << " " << f.vertex
        << "@" << f.time.half_units() << " " << t.vertex << "@" << t.time.half_units() << " "
        << a.capacity.str() << "\n";
  }
  return out.str();
}

}  // namespace tempoflow
