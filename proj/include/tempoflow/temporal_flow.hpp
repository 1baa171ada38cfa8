#pragma once

#include <map>
#include <string>
#include <vector>

#include "tempoflow/rational.hpp"
#include "tempoflow/temporal_graph.hpp"

namespace tempoflow {

// Buffer content of a vertex around one relevant day: morning (before
// departures), noon (after departures), evening (after arrivals).
struct BufferPoint {
  Label label = 0;
  Rational morning;   // b^-
  Rational noon;      // b^mu
  Rational evening;   // b^+
};

// Per-time-edge amounts plus the buffer trajectories they induce. The
// assignments are the source of truth; trajectories are derived. Absent
// time edges carry zero.
struct TemporalFlow {
  std::map<TimeEdge, Rational> assignments;
  std::map<VertexId, std::vector<BufferPoint>> trajectories;  // every v != source

  Rational amount(const TimeEdge& te) const {
    auto it = assignments.find(te);
    return it == assignments.end() ? Rational(0) : it->second;
  }
};

struct TemporalCut {
  std::vector<TimeEdge> time_edges;
  std::int64_t capacity = 0;  // sum of c(e) over members
};

struct JourneyFlow {
  Journey journey;
  Rational amount;
};

// One violated feasibility condition; `item` numbers follow the flow
// definition (1: edge capacity, 2: buffer bounds, 3: day-zero flow,
// 5: flow outside the label set).
struct Violation {
  int item = 0;
  std::string where;
  std::string message;
};

// Single forward pass: for each v != source, in increasing relevant-label
// order, morning(l) = evening(previous), noon(l) = morning(l) - flow out on
// day l, evening(l) = noon(l) + flow in on day l. Day 0 starts at zero.
// Assignment entries outside E_L are ignored here; verify_flow reports them.
inline TemporalFlow buffer_trajectories(const TemporalGraph& g,
                                        const std::map<TimeEdge, Rational>& assignments) {
  TemporalFlow tf;
  tf.assignments = assignments;
  for (const VertexId& v : g.vertices()) {
    if (v == g.source()) continue;
    std::vector<BufferPoint> traj;
    Rational carried = 0;
    for (Label l : relevant_labels(g, v)) {
      BufferPoint p;
      p.label = l;
      p.morning = carried;
      Rational out = 0;
      for (const Edge* e : g.out_edges(v)) {
        if (l >= 1 && std::binary_search(e->labels.begin(), e->labels.end(), l))
          out += tf.amount({e->id, l});
      }
      p.noon = p.morning - out;
      Rational in = 0;
      for (const Edge* e : g.in_edges(v)) {
        if (l >= 1 && std::binary_search(e->labels.begin(), e->labels.end(), l))
          in += tf.amount({e->id, l});
      }
      p.evening = p.noon + in;
      carried = p.evening;
      traj.push_back(std::move(p));
    }
    tf.trajectories[v] = std::move(traj);
  }
  return tf;
}

// Checks every feasibility condition. Trajectories are recomputed from the
// assignments; caller-supplied trajectories are ignored. The structural
// conditions (initialization and the three trajectory equations) hold by
// construction, so violations can only cite items 1, 2, 3 and 5.
inline std::vector<Violation> verify_flow(const TemporalGraph& g, const TemporalFlow& tf) {
  std::vector<Violation> out;
  auto spot = [](const TimeEdge& te) { return "(" + te.edge + "," + std::to_string(te.label) + ")"; };
  for (const auto& [te, amt] : tf.assignments) {
    if (amt == 0) continue;
    if (!g.has_edge(te.edge)) {
      out.push_back({5, spot(te), "flow on unknown edge " + te.edge});
      continue;
    }
    if (te.label == 0) {
      out.push_back({3, spot(te), "flow on day 0 must be zero"});
      continue;
    }
    if (!g.has_time_edge(te)) {
      out.push_back({5, spot(te), "flow on a day the edge is not available"});
      continue;
    }
    const Edge& e = g.edge(te.edge);
    if (amt < 0) {
      out.push_back({1, spot(te), "negative flow " + format_rational(amt)});
    } else if (amt > Rational(e.capacity)) {
      out.push_back({1, spot(te), "flow " + format_rational(amt) + " exceeds capacity " +
                                      std::to_string(e.capacity)});
    }
  }
  TemporalFlow derived = buffer_trajectories(g, tf.assignments);
  for (const auto& [v, traj] : derived.trajectories) {
    Cap b = g.buffer(v);
    for (const BufferPoint& p : traj) {
      auto check = [&](const Rational& x, const char* name) {
        std::string at = v + ", label " + std::to_string(p.label);
        if (x < 0) {
          out.push_back({2, at, std::string(name) + " buffer " + format_rational(x) + " is negative"});
        } else if (b.is_finite() && x > Rational(b.value())) {
          out.push_back({2, at, std::string(name) + " buffer " + format_rational(x) +
                                    " exceeds capacity " + std::to_string(b.value())});
        }
      };
      check(p.morning, "morning");
      check(p.noon, "noon");
      check(p.evening, "evening");
    }
  }
  return out;
}

// v(f): what has reached the sink by the end of the lifetime,
// i.e. the sink's evening buffer at its last relevant label.
inline Rational flow_value(const TemporalGraph& g, const TemporalFlow& tf) {
  TemporalFlow derived = buffer_trajectories(g, tf.assignments);
  const auto& traj = derived.trajectories.at(g.sink());
  return traj.empty() ? Rational(0) : traj.back().evening;
}

}  // namespace tempoflow
