#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/errors.hpp"

namespace tempoflow {

using Label = std::int64_t;  // availability day, >= 1
using VertexId = std::string;
using EdgeId = std::string;

// Time on the doubled integer scale: a departure on day l sits at 2l and the
// matching arrival (l plus the sub-day transit) at 2l+1. Parity tells the two
// apart and ordering matches real time, with no floating point involved.
class TimePoint {
 public:
  constexpr TimePoint() = default;

  static constexpr TimePoint departure(Label l) { return TimePoint(2 * l); }
  static constexpr TimePoint arrival(Label l) { return TimePoint(2 * l + 1); }
  static constexpr TimePoint start() { return TimePoint(0); }

  constexpr std::int64_t half_units() const { return half_units_; }
  constexpr bool is_arrival() const { return half_units_ % 2 == 1; }
  constexpr Label day() const { return half_units_ / 2; }

  friend constexpr auto operator<=>(const TimePoint&, const TimePoint&) = default;

 private:
  constexpr explicit TimePoint(std::int64_t h) : half_units_(h) {}
  std::int64_t half_units_ = 0;
};

// One availability instance of an edge.
struct TimeEdge {
  EdgeId edge;
  Label label = 0;

  friend auto operator<=>(const TimeEdge&, const TimeEdge&) = default;
};

struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;
  std::int64_t capacity = 0;   // > 0
  std::vector<Label> labels;   // sorted, unique, all >= 1, nonempty
};

// Directed path whose time edges carry strictly increasing labels.
struct Journey {
  std::vector<TimeEdge> time_edges;

  Label arrival_time() const { return time_edges.back().label; }
};

constexpr std::int64_t kMaxCapacity = std::int64_t(1) << 40;

// Immutable temporal flow network: directed multigraph, per-edge label sets,
// integer edge capacities, per-node buffer limits, distinguished source and
// sink. Iteration order is deterministic: vertices by id, edges by edge id.
class TemporalGraph {
 public:
  TemporalGraph(std::vector<Edge> edges, std::map<VertexId, Cap> buffers,
                VertexId source, VertexId sink)
      : edges_(std::move(edges)),
        buffers_(std::move(buffers)),
        source_(std::move(source)),
        sink_(std::move(sink)) {
    validate_and_index();
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexId& source() const { return source_; }
  const VertexId& sink() const { return sink_; }

  bool has_vertex(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  const Edge& edge(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw DomainError("unknown edge id: " + id);
    return edges_[it->second];
  }

  bool has_edge(const EdgeId& id) const { return edge_index_.count(id) != 0; }

  bool has_time_edge(const TimeEdge& te) const {
    auto it = edge_index_.find(te.edge);
    if (it == edge_index_.end()) return false;
    const auto& ls = edges_[it->second].labels;
    return std::binary_search(ls.begin(), ls.end(), te.label);
  }

  // Buffer limit B(v); Unbounded unless declared otherwise.
  Cap buffer(const VertexId& v) const {
    auto it = buffers_.find(v);
    return it == buffers_.end() ? Cap::unbounded() : it->second;
  }

  const std::map<VertexId, Cap>& declared_buffers() const { return buffers_; }

  bool all_buffers_unbounded() const {
    for (const auto& [v, b] : buffers_) {
      if (!b.is_unbounded()) return false;
    }
    return true;
  }

  // l_max: the largest label anywhere, 0 when there are no edges.
  Label max_label() const { return max_label_; }

  std::size_t time_edge_count() const { return time_edge_count_; }  // |E_L|

  std::vector<TimeEdge> time_edges() const {
    std::vector<TimeEdge> out;
    out.reserve(time_edge_count_);
    for (const auto& e : edges_) {
      for (Label l : e.labels) out.push_back({e.id, l});
    }
    return out;
  }

  const std::vector<const Edge*>& out_edges(const VertexId& v) const {
    static const std::vector<const Edge*> empty;
    auto it = out_.find(v);
    return it == out_.end() ? empty : it->second;
  }

  const std::vector<const Edge*>& in_edges(const VertexId& v) const {
    static const std::vector<const Edge*> empty;
    auto it = in_.find(v);
    return it == in_.end() ? empty : it->second;
  }

  void require_vertex(const VertexId& v) const {
    if (!has_vertex(v)) throw DomainError("unknown vertex: " + v);
  }

 private:
  void validate_and_index() {
    if (source_ == sink_) throw DomainError("source and sink must differ");
    std::set<VertexId> verts{source_, sink_};
    std::set<EdgeId> ids;
    for (auto& e : edges_) {
      if (!ids.insert(e.id).second) throw DomainError("duplicate edge id: " + e.id);
      if (e.tail == e.head) throw DomainError("self-loop on edge " + e.id);
      if (e.head == source_) throw DomainError("edge " + e.id + " enters the source");
      if (e.tail == sink_) throw DomainError("edge " + e.id + " leaves the sink");
      if (e.capacity <= 0) throw DomainError("edge " + e.id + ": capacity must be >= 1");
      if (e.capacity > kMaxCapacity) throw DomainError("edge " + e.id + ": capacity too large");
      if (e.labels.empty()) throw DomainError("edge " + e.id + ": label set must be nonempty");
      std::sort(e.labels.begin(), e.labels.end());
      e.labels.erase(std::unique(e.labels.begin(), e.labels.end()), e.labels.end());
      if (e.labels.front() < 1) throw DomainError("edge " + e.id + ": label must be >= 1");
      verts.insert(e.tail);
      verts.insert(e.head);
    }
    for (const auto& [v, b] : buffers_) {
      if (!verts.count(v)) throw DomainError("unknown vertex: " + v);
      if (b.is_finite() && b.value() <= 0)
        throw DomainError("buffer of " + v + " must be >= 1 or inf");
      if ((v == source_ || v == sink_) && !b.is_unbounded())
        throw DomainError("buffer of " + v + " must be unbounded (source/sink)");
    }
    vertices_.assign(verts.begin(), verts.end());
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    max_label_ = 0;
    time_edge_count_ = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      edge_index_[e.id] = i;
      out_[e.tail].push_back(&edges_[i]);
      in_[e.head].push_back(&edges_[i]);
      time_edge_count_ += e.labels.size();
      max_label_ = std::max(max_label_, e.labels.back());
    }
  }

  std::vector<Edge> edges_;
  std::map<VertexId, Cap> buffers_;
  VertexId source_;
  VertexId sink_;
  std::vector<VertexId> vertices_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<VertexId, std::vector<const Edge*>> out_;
  std::map<VertexId, std::vector<const Edge*>> in_;
  Label max_label_ = 0;
  std::size_t time_edge_count_ = 0;
};

// --- network file format ----------------------------------------------------
//
//   # comment
//   source <id>
//   sink <id>
//   buffer <id> <positive-int|inf>          (default inf)
//   edge <edge-id> <tail> <head> <capacity> <label>[,<label>...]

inline TemporalGraph parse_network(const std::string& text) {
  std::optional<VertexId> source, sink;
  std::vector<Edge> edges;
  std::map<VertexId, Cap> buffers;
  std::set<EdgeId> seen_edges;
  std::set<VertexId> endpoints;

  auto parse_positive = [](const std::string& tok, int line,
                           const char* what) -> std::int64_t {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(line, std::string(what) + " is not an integer: " + tok);
    }
    if (pos != tok.size())
      throw ParseError(line, std::string(what) + " is not an integer: " + tok);
    return v;
  };

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "source") {
      if (tok.size() != 2) throw ParseError(line, "expected: source <id>");
      if (source) throw ParseError(line, "duplicate source record");
      source = tok[1];
    } else if (tok[0] == "sink") {
      if (tok.size() != 2) throw ParseError(line, "expected: sink <id>");
      if (sink) throw ParseError(line, "duplicate sink record");
      sink = tok[1];
    } else if (tok[0] == "buffer") {
      if (tok.size() != 3) throw ParseError(line, "expected: buffer <id> <positive-int|inf>");
      if (buffers.count(tok[1])) throw ParseError(line, "duplicate buffer record for " + tok[1]);
      if (tok[2] == "inf") {
        buffers.emplace(tok[1], Cap::unbounded());
      } else {
        std::int64_t b = parse_positive(tok[2], line, "buffer size");
        if (b <= 0) throw ParseError(line, "buffer size must be >= 1 or inf");
        buffers.emplace(tok[1], Cap(b));
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 6)
        throw ParseError(line, "expected: edge <id> <tail> <head> <capacity> <labels>");
      Edge e;
      e.id = tok[1];
      e.tail = tok[2];
      e.head = tok[3];
      if (!seen_edges.insert(e.id).second)
        throw ParseError(line, "duplicate edge id: " + e.id);
      e.capacity = parse_positive(tok[4], line, "capacity");
      if (e.capacity <= 0) throw ParseError(line, "capacity must be >= 1");
      std::istringstream lbl(tok[5]);
      std::string piece;
      while (std::getline(lbl, piece, ',')) {
        if (piece.empty()) throw ParseError(line, "empty label");
        Label l = parse_positive(piece, line, "label");
        if (l < 1) throw ParseError(line, "label must be >= 1");
        e.labels.push_back(l);
      }
      if (e.labels.empty()) throw ParseError(line, "label set must be nonempty");
      endpoints.insert(e.tail);
      endpoints.insert(e.head);
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line, "unknown record: " + tok[0]);
    }
  }
  if (!source) throw ParseError("missing source record");
  if (!sink) throw ParseError("missing sink record");
  return TemporalGraph(std::move(edges), std::move(buffers), *source, *sink);
}

// Same format, records deterministically sorted; parse_network of the result
// reproduces the graph.
inline std::string serialize(const TemporalGraph& g) {
  std::ostringstream out;
  out << "source " << g.source() << "\n";
  out << "sink " << g.sink() << "\n";
  for (const auto& [v, b] : g.declared_buffers()) {
    if (b.is_finite()) out << "buffer " << v << " " << b.value() << "\n";
  }
  for (const auto& e : g.edges()) {
    out << "edge " << e.id << " " << e.tail << " " << e.head << " " << e.capacity << " ";
    for (std::size_t i = 0; i < e.labels.size(); ++i) {
      if (i) out << ",";
      out << e.labels[i];
    }
    out << "\n";
  }
  return out.str();
}

// Drops every label > d; edges whose label set empties out disappear.
inline TemporalGraph restrict_to_deadline(const TemporalGraph& g, Label d) {
  if (d < 1) throw DomainError("deadline must be >= 1");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges()) {
    Edge copy = e;
    copy.labels.erase(
        std::remove_if(copy.labels.begin(), copy.labels.end(), [d](Label l) { return l > d; }),
        copy.labels.end());
    if (!copy.labels.empty()) kept.push_back(std::move(copy));
  }
  std::map<VertexId, Cap> buffers;
  std::set<VertexId> verts{g.source(), g.sink()};
  for (const Edge& e : kept) {
    verts.insert(e.tail);
    verts.insert(e.head);
  }
  for (const auto& [v, b] : g.declared_buffers()) {
    if (verts.count(v)) buffers.emplace(v, b);
  }
  return TemporalGraph(std::move(kept), std::move(buffers), g.source(), g.sink());
}

namespace detail {

// Label-ordered scan shared by temporal_distance and foremost_journey.
// Processes time edges in increasing label order, per-label staging so the
// strict-increase rule cannot chain within one day. Returns the minimum
// arrival time per vertex plus the time edge that achieved it.
struct ArrivalScan {
  std::map<VertexId, Label> arrival;
  std::map<VertexId, TimeEdge> parent;

  static ArrivalScan run(const TemporalGraph& g, const VertexId& from,
                         const std::optional<VertexId>& stop_at = std::nullopt) {
    ArrivalScan scan;
    std::vector<std::pair<Label, const Edge*>> tes;
    tes.reserve(g.time_edge_count());
    for (const Edge& e : g.edges()) {
      for (Label l : e.labels) tes.push_back({l, &e});
    }
    std::sort(tes.begin(), tes.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second->id < b.second->id;
    });

    auto ready_before = [&](const VertexId& x, Label l) {
      if (x == from) return true;  // present at time 0
      auto it = scan.arrival.find(x);
      return it != scan.arrival.end() && it->second < l;
    };

    std::size_t i = 0;
    while (i < tes.size()) {
      Label l = tes[i].first;
      std::vector<std::pair<VertexId, TimeEdge>> staged;
      for (; i < tes.size() && tes[i].first == l; ++i) {
        const Edge* e = tes[i].second;
        if (!ready_before(e->tail, l)) continue;
        auto it = scan.arrival.find(e->head);
        if (it != scan.arrival.end() && it->second <= l) continue;
        bool already = false;
        for (const auto& [v, te] : staged) {
          if (v == e->head) {
            already = true;  // same label; first edge id wins
            break;
          }
        }
        if (!already) staged.push_back({e->head, TimeEdge{e->id, l}});
      }
      for (auto& [v, te] : staged) {
        scan.arrival[v] = l;
        scan.parent[v] = te;
      }
      if (stop_at && scan.arrival.count(*stop_at)) break;
    }
    return scan;
  }
};

}  // namespace detail

// Minimum arrival time over all u -> v journeys; nullopt when unreachable.
inline std::optional<Label> temporal_distance(const TemporalGraph& g, const VertexId& u,
                                              const VertexId& v) {
  g.require_vertex(u);
  g.require_vertex(v);
  auto scan = detail::ArrivalScan::run(g, u, v);
  auto it = scan.arrival.find(v);
  if (it == scan.arrival.end()) return std::nullopt;
  return it->second;
}

// Witness journey whose arrival time equals temporal_distance(g, u, v).
inline std::optional<Journey> foremost_journey(const TemporalGraph& g, const VertexId& u,
                                               const VertexId& v) {
  g.require_vertex(u);
  g.require_vertex(v);
  auto scan = detail::ArrivalScan::run(g, u, v);
  if (!scan.arrival.count(v)) return std::nullopt;
  Journey j;
  VertexId cur = v;
  while (cur != u) {
    const TimeEdge& te = scan.parent.at(cur);
    j.time_edges.push_back(te);
    cur = g.edge(te.edge).tail;
  }
  std::reverse(j.time_edges.begin(), j.time_edges.end());
  return j;
}

// L_R(u): labels on edges incident to u, plus the artificial label 0.
inline std::vector<Label> relevant_labels(const TemporalGraph& g, const VertexId& u) {
  g.require_vertex(u);
  std::set<Label> ls{0};
  for (const Edge* e : g.out_edges(u)) ls.insert(e->labels.begin(), e->labels.end());
  for (const Edge* e : g.in_edges(u)) ls.insert(e->labels.begin(), e->labels.end());
  return {ls.begin(), ls.end()};
}

}  // namespace tempoflow
