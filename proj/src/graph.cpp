#include "socialforge/graph.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "socialforge/rng.hpp"

namespace socialforge {

SocialGraph::SocialGraph(NodeId node_count)
    : node_count_(node_count), out_(node_count), in_(node_count) {}

void SocialGraph::check_node(NodeId v) const {
  if (v >= node_count_) {
    throw_validation("node id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(node_count_) + ")");
  }
}

SocialGraph SocialGraph::from_edges(NodeId node_count,
                                    std::vector<std::pair<NodeId, NodeId>> follows) {
  SocialGraph g(node_count);
  std::sort(follows.begin(), follows.end());
  for (std::size_t i = 0; i < follows.size(); ++i) {
    const auto [u, v] = follows[i];
    g.check_node(u);
    g.check_node(v);
    if (u == v) throw_validation("self-loop follow edge on node " + std::to_string(u));
    if (i > 0 && follows[i] == follows[i - 1]) {
      throw_validation("duplicate follow edge " + std::to_string(u) + "->" + std::to_string(v));
    }
    g.out_[u].push_back(v);
    g.in_[v].push_back(u);
  }
  for (auto& neighbors : g.in_) std::sort(neighbors.begin(), neighbors.end());
  g.edge_count_ = follows.size();
  return g;
}

bool SocialGraph::add_follow_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) throw_validation("self-loop follow edge on node " + std::to_string(u));
  if (has_follow_edge(u, v)) return false;
  out_[u].push_back(v);
  in_[v].push_back(u);
  ++edge_count_;
  return true;
}

bool SocialGraph::has_follow_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  // scan the shorter endpoint list
  if (out_[u].size() <= in_[v].size()) {
    return std::find(out_[u].begin(), out_[u].end(), v) != out_[u].end();
  }
  return std::find(in_[v].begin(), in_[v].end(), u) != in_[v].end();
}

std::span<const NodeId> SocialGraph::out_neighbors(NodeId v) const {
  check_node(v);
  return out_[v];
}

std::span<const NodeId> SocialGraph::in_neighbors(NodeId v) const {
  check_node(v);
  return in_[v];
}

std::uint32_t SocialGraph::out_degree(NodeId v) const {
  check_node(v);
  return static_cast<std::uint32_t>(out_[v].size());
}

std::uint32_t SocialGraph::in_degree(NodeId v) const {
  check_node(v);
  return static_cast<std::uint32_t>(in_[v].size());
}

void SocialGraph::attach_interaction(NodeId u, NodeId v, EdgeKind kind) {
  if (kind == EdgeKind::Follow) {
    throw_validation("interaction kind must not be Follow");
  }
  if (!has_follow_edge(u, v)) {
    throw_validation("dangling interaction: no follow edge " + std::to_string(u) + "->" +
                     std::to_string(v));
  }
  interactions_.push_back({u, v, kind, interactions_.size()});
}

std::vector<std::pair<NodeId, NodeId>> SocialGraph::sorted_follow_edges() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_count_);
  for (NodeId u = 0; u < node_count_; ++u) {
    for (NodeId v : out_[u]) edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<std::int32_t> bfs_distances(const SocialGraph& g, NodeId source) {
  g.check_node(source);
  std::vector<std::int32_t> dist(g.node_count(), kUnreached);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    const std::int32_t next = dist[u] + 1;
    for (NodeId v : g.out_neighbors(u)) {
      if (dist[v] == kUnreached) {
        dist[v] = next;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool has_path(const SocialGraph& g, NodeId u, NodeId v) {
  g.check_node(u);
  g.check_node(v);
  if (u == v) return true;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> queue;
  seen[u] = true;
  queue.push_back(u);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId w : g.out_neighbors(queue[head])) {
      if (w == v) return true;
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return false;
}

namespace {

/// Number of nodes reachable from source, excluding source itself.
/// Uses an epoch-stamped visited array so callers can reuse the scratch.
std::uint64_t bfs_reach_count(const SocialGraph& g, NodeId source,
                              std::vector<std::uint32_t>& stamp, std::uint32_t epoch,
                              std::vector<NodeId>& queue) {
  queue.clear();
  stamp[source] = epoch;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (NodeId v : g.out_neighbors(queue[head])) {
      if (stamp[v] != epoch) {
        stamp[v] = epoch;
        queue.push_back(v);
      }
    }
  }
  return queue.size() - 1;
}

std::uint64_t reach_count_over_sources(const SocialGraph& g, std::span<const NodeId> sources,
                                       int threads) {
  if (threads <= 1 || sources.size() < 2) {
    std::vector<std::uint32_t> stamp(g.node_count(), 0);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    std::uint64_t total = 0;
    std::uint32_t epoch = 0;
    for (NodeId s : sources) total += bfs_reach_count(g, s, stamp, ++epoch, queue);
    return total;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> total{0};
  const int worker_count = std::min<int>(threads, static_cast<int>(sources.size()));
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  for (int t = 0; t < worker_count; ++t) {
    workers.emplace_back([&] {
      std::vector<std::uint32_t> stamp(g.node_count(), 0);
      std::vector<NodeId> queue;
      queue.reserve(g.node_count());
      std::uint32_t epoch = 0;
      std::uint64_t local = 0;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= sources.size()) break;
        local += bfs_reach_count(g, sources[i], stamp, ++epoch, queue);
      }
      total.fetch_add(local);
    });
  }
  for (auto& w : workers) w.join();
  return total.load();
}

}  // namespace

ReachabilityStats reachability_fraction(const SocialGraph& g, const ReachabilityOptions& options) {
  const NodeId n = g.node_count();
  if (n < 2) throw_validation("reachability undefined for graphs with fewer than 2 nodes");

  ReachabilityStats stats;
  stats.total_ordered_pairs = static_cast<std::uint64_t>(n) * (n - 1);

  if (n <= options.exact_threshold || options.sample_sources >= n) {
    std::vector<NodeId> sources(n);
    for (NodeId v = 0; v < n; ++v) sources[v] = v;
    stats.reachable_ordered_pairs = reach_count_over_sources(g, sources, options.threads);
    stats.fraction =
        static_cast<double>(stats.reachable_ordered_pairs) / static_cast<double>(stats.total_ordered_pairs);
    stats.exact = true;
    return stats;
  }

  // Estimate from sampled sources (without replacement, seed-controlled).
  Rng rng = substream(options.sample_seed, "reachability-sample");
  std::vector<NodeId> pool(n);
  for (NodeId v = 0; v < n; ++v) pool[v] = v;
  std::vector<NodeId> sources;
  sources.reserve(options.sample_sources);
  for (std::uint32_t i = 0; i < options.sample_sources; ++i) {
    const std::uint64_t j = i + rng.next_below(n - i);
    std::swap(pool[i], pool[j]);
    sources.push_back(pool[i]);
  }
  const std::uint64_t reached = reach_count_over_sources(g, sources, options.threads);
  stats.fraction = static_cast<double>(reached) /
                   (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
  stats.reachable_ordered_pairs =
      static_cast<std::uint64_t>(stats.fraction * static_cast<double>(stats.total_ordered_pairs) + 0.5);
  stats.exact = false;
  return stats;
}

}  // namespace socialforge
