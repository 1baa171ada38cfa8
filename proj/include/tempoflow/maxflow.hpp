#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tempoflow/capacity.hpp"
#include "tempoflow/errors.hpp"

namespace tempoflow {

struct StaticArc {
  int from = -1;
  int to = -1;
  Cap capacity;  // finite positive or Unbounded
};

// Static directed flow network, the shape the STEG reduces to.
struct StaticNetwork {
  int node_count = 0;
  int source = -1;
  int sink = -1;
  std::vector<StaticArc> arcs;
};

struct MaxFlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to net.arcs
};

namespace detail {

inline void check_network(const StaticNetwork& net) {
  if (net.source < 0 || net.source >= net.node_count || net.sink < 0 ||
      net.sink >= net.node_count || net.source == net.sink)
    throw DomainError("invalid source/sink");
  std::int64_t total = 0;
  for (const auto& a : net.arcs) {
    if (a.from < 0 || a.from >= net.node_count || a.to < 0 || a.to >= net.node_count)
      throw DomainError("arc endpoint out of range");
    if (a.capacity.is_finite()) {
      if (a.capacity.value() <= 0) throw DomainError("arc capacity must be positive");
      total += a.capacity.value();
      if (total > (std::int64_t(1) << 60)) throw DomainError("capacity sum overflow");
    }
  }
  // A finite s-t cut exists iff the sink is not reachable through
  // Unbounded arcs alone.
  std::vector<char> seen(net.node_count, 0);
  std::vector<int> stack{net.source};
  seen[net.source] = 1;
  std::vector<std::vector<int>> unbounded_out(net.node_count);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    if (net.arcs[i].capacity.is_unbounded()) unbounded_out[net.arcs[i].from].push_back(net.arcs[i].to);
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : unbounded_out[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (seen[net.sink]) throw DomainError("unbounded flow: no finite s-t cut exists");
}

// Residual representation: paired forward/backward arcs, flow on std::int64_t.
struct Dinic {
  struct Arc {
    int to;
    Cap cap;
    std::int64_t flow = 0;
  };
  std::vector<Arc> arcs;               // even = forward, odd = reverse
  std::vector<std::vector<int>> adj;   // arc indices per node
  std::vector<int> level, iter;
  int source, sink;

  explicit Dinic(const StaticNetwork& net)
      : adj(net.node_count),
        level(net.node_count),
        iter(net.node_count),
        source(net.source),
        sink(net.sink) {
    arcs.reserve(net.arcs.size() * 2);
    for (const auto& a : net.arcs) {
      adj[a.from].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({a.to, a.capacity});
      adj[a.to].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({a.from, Cap(0)});
    }
  }

  Cap residual(int i) const {
    const Arc& a = arcs[i];
    if (a.cap.is_unbounded()) return Cap::unbounded();
    return Cap(a.cap.value() - a.flow);
  }

  bool bfs() {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> queue{source};
    level[source] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int id : adj[u]) {
        if (level[arcs[id].to] == -1 && residual(id) > Cap(0)) {
          level[arcs[id].to] = level[u] + 1;
          queue.push_back(arcs[id].to);
        }
      }
    }
    return level[sink] != -1;
  }

  std::int64_t dfs(int u, Cap limit) {
    if (u == sink) {
      if (limit.is_unbounded())
        throw DomainError("unbounded flow: augmenting path with no finite arc");
      return limit.value();
    }
    for (int& i = iter[u]; i < static_cast<int>(adj[u].size()); ++i) {
      int id = adj[u][i];
      const Arc& a = arcs[id];
      if (level[a.to] != level[u] + 1) continue;
      Cap r = residual(id);
      if (!(r > Cap(0))) continue;
      std::int64_t pushed = dfs(a.to, min(limit, r));
      if (pushed > 0) {
        arcs[id].flow += pushed;
        arcs[id ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::int64_t run() {
    std::int64_t total = 0;
    while (bfs()) {
      std::fill(iter.begin(), iter.end(), 0);
      while (std::int64_t pushed = dfs(source, Cap::unbounded())) total += pushed;
    }
    return total;
  }
};

}  // namespace detail

// Exact maximum flow. Integral on integer capacities, deterministic for a
// fixed arc order. Requires some finite s-t cut (checked up front).
inline MaxFlowResult max_flow(const StaticNetwork& net) {
  detail::check_network(net);
  detail::Dinic d(net);
  MaxFlowResult res;
  res.value = d.run();
  res.arc_flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) res.arc_flow[i] = d.arcs[2 * i].flow;
  return res;
}

// Arcs from the residual-reachable side to its complement, given a maximum
// flow. Total capacity equals the flow value; never contains Unbounded arcs.
inline std::vector<int> min_cut(const StaticNetwork& net,
                                const std::vector<std::int64_t>& arc_flow) {
  detail::check_network(net);
  if (arc_flow.size() != net.arcs.size())
    throw DomainError("flow vector does not match arc count");
  std::vector<char> reach(net.node_count, 0);
  std::vector<std::vector<std::pair<int, std::int64_t>>> out(net.node_count);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    std::int64_t f = arc_flow[i];
    if (f < 0 || (a.capacity.is_finite() && f > a.capacity.value()))
      throw DomainError("infeasible flow on arc " + std::to_string(i));
    std::int64_t fwd_res =
        a.capacity.is_unbounded() ? std::numeric_limits<std::int64_t>::max() : a.capacity.value() - f;
    if (fwd_res > 0) out[a.from].push_back({a.to, fwd_res});
    if (f > 0) out[a.to].push_back({a.from, f});  // reverse residual
  }
  std::vector<int> stack{net.source};
  reach[net.source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto& [w, r] : out[u]) {
      if (!reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }
  if (reach[net.sink]) throw DomainError("flow is not maximum: residual s-t path exists");
  std::vector<int> cut;
  std::int64_t cap_sum = 0;
  std::int64_t value = 0;
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    if (reach[a.from] && !reach[a.to]) {
      if (a.capacity.is_unbounded())
        throw DomainError("min cut touched an unbounded arc");  // finite-cut precheck excludes this
      cut.push_back(static_cast<int>(i));
      cap_sum += a.capacity.value();
    }
    if (a.from == net.source) value += arc_flow[i];
    if (a.to == net.source) value -= arc_flow[i];
  }
  if (cap_sum != value) throw DomainError("cut capacity does not match flow value");
  return cut;
}

}  // namespace tempoflow
