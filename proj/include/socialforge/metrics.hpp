#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "socialforge/graph.hpp"

namespace socialforge {

/// p[h-1] = fraction of ordered pairs (u, v), u != v, with directed
/// distance <= h, for h = 1..H. Non-decreasing in h.
struct NeighborhoodFunction {
  std::vector<double> p;

  double at_hop(int h) const;  // 1-based
};

struct ClusteringBucket {
  double mean = 0.0;
  std::uint32_t node_count = 0;
};

/// Mean local clustering coefficient per undirected degree (degree >= 2 only).
struct ClusteringByDegree {
  std::map<std::uint32_t, ClusteringBucket> buckets;
};

struct DegreeHistogram {
  std::map<std::uint32_t, std::uint64_t> counts;
  /// ccdf[d] = fraction of nodes with degree >= d, d = 0..max_degree.
  std::vector<double> ccdf;
};

enum class Direction { In, Out };

struct MetricsReport {
  NeighborhoodFunction neighborhood;
  std::optional<double> avg_hop;  // null when no reachable pair exists
  ClusteringByDegree clustering;
  std::uint32_t degeneracy = 0;
  DegreeHistogram in_degree_hist;
  DegreeHistogram out_degree_hist;
  std::optional<double> tail_ratio;  // in-direction; null when all in-degrees are 0
  std::optional<double> reachability;
};

NeighborhoodFunction neighborhood_function(const SocialGraph& g, int max_h, int threads = 1);

/// Mean shortest-path length over reachable ordered pairs only.
double average_hop_distance(const SocialGraph& g);

/// Undirected simple projection: {u,v} iff u->v or v->u. Sorted adjacency.
std::vector<std::vector<NodeId>> undirected_projection(const SocialGraph& g);

ClusteringByDegree clustering_by_degree(const SocialGraph& g);

/// Max non-empty k-core of the undirected projection, by min-degree peeling.
std::uint32_t degeneracy(const SocialGraph& g);

DegreeHistogram degree_histogram(const SocialGraph& g, Direction direction);

/// max degree / max(1, median degree); median is the lower median.
double tail_ratio(const SocialGraph& g, Direction direction);

/// Full report; degenerate sub-metrics map to nulls instead of throwing.
MetricsReport compute_metrics(const SocialGraph& g, int max_h = 20, int threads = 1);

}  // namespace socialforge
