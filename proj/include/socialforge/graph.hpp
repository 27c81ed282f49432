#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "socialforge/types.hpp"

namespace socialforge {

/// One interaction annotation attached to an existing follow edge.
struct Interaction {
  NodeId source;
  NodeId target;
  EdgeKind kind;
  std::uint64_t sequence_index;
};

struct ReachabilityStats {
  std::uint64_t reachable_ordered_pairs = 0;
  std::uint64_t total_ordered_pairs = 0;
  double fraction = 0.0;
  bool exact = true;
};

/// Directed follow graph with an append-only interaction log.
///
/// Invariants: no self-loops, at most one follow edge per ordered pair,
/// in/out adjacency mutually consistent, and every interaction sits on an
/// existing follow edge.
class SocialGraph {
 public:
  explicit SocialGraph(NodeId node_count);

  /// Bulk construction; validates uniqueness and self-loop freedom in
  /// O(m log m). Adjacency lists end up sorted ascending.
  static SocialGraph from_edges(NodeId node_count,
                                std::vector<std::pair<NodeId, NodeId>> follows);

  NodeId node_count() const { return node_count_; }
  std::uint64_t follow_edge_count() const { return edge_count_; }

  /// Returns false (and changes nothing) if the edge already exists.
  bool add_follow_edge(NodeId u, NodeId v);
  bool has_follow_edge(NodeId u, NodeId v) const;

  std::span<const NodeId> out_neighbors(NodeId v) const;
  std::span<const NodeId> in_neighbors(NodeId v) const;
  std::uint32_t out_degree(NodeId v) const;
  std::uint32_t in_degree(NodeId v) const;

  /// Appends an annotation; requires the follow edge u->v and kind != Follow.
  void attach_interaction(NodeId u, NodeId v, EdgeKind kind);
  const std::vector<Interaction>& interactions() const { return interactions_; }

  /// All follow edges sorted by (source, target).
  std::vector<std::pair<NodeId, NodeId>> sorted_follow_edges() const;

  void check_node(NodeId v) const;

 private:
  NodeId node_count_;
  std::uint64_t edge_count_ = 0;
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::vector<Interaction> interactions_;
};

/// Hop distances along follow edges; kUnreached for nodes with no path.
inline constexpr std::int32_t kUnreached = -1;
std::vector<std::int32_t> bfs_distances(const SocialGraph& g, NodeId source);

bool has_path(const SocialGraph& g, NodeId u, NodeId v);

struct ReachabilityOptions {
  /// Exact all-source BFS up to this many nodes; larger graphs are estimated
  /// from sampled sources.
  NodeId exact_threshold = 20000;
  std::uint32_t sample_sources = 256;
  std::uint64_t sample_seed = 0;
  int threads = 1;
};

/// Fraction of ordered pairs (u, v), u != v, with a directed path u ~> v.
ReachabilityStats reachability_fraction(const SocialGraph& g,
                                        const ReachabilityOptions& options = {});

}  // namespace socialforge
