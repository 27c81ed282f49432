#include "socialforge/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace socialforge {

double NeighborhoodFunction::at_hop(int h) const {
  if (h < 1 || static_cast<std::size_t>(h) > p.size()) {
    throw_validation("hop " + std::to_string(h) + " outside computed range");
  }
  return p[static_cast<std::size_t>(h) - 1];
}

namespace {

struct DistanceSummary {
  /// count_at[d] = number of ordered pairs at exact distance d (d >= 1).
  std::vector<std::uint64_t> count_at;
  std::uint64_t reachable_pairs = 0;
  std::uint64_t distance_sum = 0;
};

/// One BFS sweep per source, accumulating the exact distance histogram.
DistanceSummary all_pairs_distances(const SocialGraph& g, int threads) {
  const NodeId n = g.node_count();
  const auto run_sources = [&](NodeId begin, NodeId end, DistanceSummary& out) {
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<std::int32_t> dist(n, 0);
    std::vector<NodeId> queue;
    queue.reserve(n);
    std::uint32_t epoch = 0;
    out.count_at.assign(n, 0);
    for (NodeId s = begin; s < end; ++s) {
      ++epoch;
      queue.clear();
      stamp[s] = epoch;
      dist[s] = 0;
      queue.push_back(s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const NodeId u = queue[head];
        const std::int32_t next = dist[u] + 1;
        for (NodeId v : g.out_neighbors(u)) {
          if (stamp[v] != epoch) {
            stamp[v] = epoch;
            dist[v] = next;
            queue.push_back(v);
            out.count_at[static_cast<std::size_t>(next)] += 1;
            out.reachable_pairs += 1;
            out.distance_sum += static_cast<std::uint64_t>(next);
          }
        }
      }
    }
  };

  if (threads <= 1 || n < 64) {
    DistanceSummary summary;
    run_sources(0, n, summary);
    return summary;
  }

  const int worker_count = std::min<int>(threads, static_cast<int>(n));
  std::vector<DistanceSummary> partial(worker_count);
  std::vector<std::thread> workers;
  workers.reserve(worker_count);
  const NodeId chunk = (n + worker_count - 1) / worker_count;
  for (int t = 0; t < worker_count; ++t) {
    const NodeId begin = static_cast<NodeId>(t) * chunk;
    const NodeId end = std::min<NodeId>(n, begin + chunk);
    workers.emplace_back([&, begin, end, t] { run_sources(begin, end, partial[t]); });
  }
  for (auto& w : workers) w.join();

  DistanceSummary summary;
  summary.count_at.assign(n, 0);
  for (const auto& part : partial) {
    for (std::size_t d = 0; d < part.count_at.size(); ++d) summary.count_at[d] += part.count_at[d];
    summary.reachable_pairs += part.reachable_pairs;
    summary.distance_sum += part.distance_sum;
  }
  return summary;
}

}  // namespace

NeighborhoodFunction neighborhood_function(const SocialGraph& g, int max_h, int threads) {
  if (max_h < 1) throw_validation("max_h must be >= 1");
  const NodeId n = g.node_count();
  if (n < 2) throw_validation("neighborhood function undefined for graphs with fewer than 2 nodes");

  const DistanceSummary summary = all_pairs_distances(g, threads);
  const double total = static_cast<double>(n) * static_cast<double>(n - 1);
  NeighborhoodFunction nf;
  nf.p.resize(static_cast<std::size_t>(max_h), 0.0);
  std::uint64_t cumulative = 0;
  for (int h = 1; h <= max_h; ++h) {
    if (static_cast<std::size_t>(h) < summary.count_at.size()) {
      cumulative += summary.count_at[static_cast<std::size_t>(h)];
    }
    nf.p[static_cast<std::size_t>(h) - 1] = static_cast<double>(cumulative) / total;
  }
  return nf;
}

double average_hop_distance(const SocialGraph& g) {
  if (g.node_count() < 2) throw_validation("average hop distance needs at least 2 nodes");
  const DistanceSummary summary = all_pairs_distances(g, 1);
  if (summary.reachable_pairs == 0) throw_validation("no reachable ordered pair");
  return static_cast<double>(summary.distance_sum) / static_cast<double>(summary.reachable_pairs);
}

std::vector<std::vector<NodeId>> undirected_projection(const SocialGraph& g) {
  const NodeId n = g.node_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto out = g.out_neighbors(v);
    const auto in = g.in_neighbors(v);
    auto& nbrs = adj[v];
    nbrs.assign(out.begin(), out.end());
    nbrs.insert(nbrs.end(), in.begin(), in.end());
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return adj;
}

ClusteringByDegree clustering_by_degree(const SocialGraph& g) {
  const auto adj = undirected_projection(g);
  const NodeId n = g.node_count();

  struct Accum {
    double sum = 0.0;
    std::uint32_t count = 0;
  };
  std::map<std::uint32_t, Accum> accum;

  for (NodeId v = 0; v < n; ++v) {
    const auto& nv = adj[v];
    const std::uint32_t k = static_cast<std::uint32_t>(nv.size());
    if (k < 2) continue;
    std::uint64_t closed = 0;  // ordered neighbor pairs (u, w) with edge u-w
    for (NodeId u : nv) {
      const auto& nu = adj[u];
      // sorted-list intersection size |N(v) & N(u)|
      auto it_v = nv.begin();
      auto it_u = nu.begin();
      while (it_v != nv.end() && it_u != nu.end()) {
        if (*it_v < *it_u) {
          ++it_v;
        } else if (*it_u < *it_v) {
          ++it_u;
        } else {
          ++closed;
          ++it_v;
          ++it_u;
        }
      }
    }
    const std::uint64_t triangles = closed / 2;
    const double coefficient = 2.0 * static_cast<double>(triangles) /
                               (static_cast<double>(k) * (static_cast<double>(k) - 1.0));
    auto& bucket = accum[k];
    bucket.sum += coefficient;
    bucket.count += 1;
  }

  ClusteringByDegree result;
  for (const auto& [degree, acc] : accum) {
    result.buckets[degree] = {acc.sum / static_cast<double>(acc.count), acc.count};
  }
  return result;
}

std::uint32_t degeneracy(const SocialGraph& g) {
  const auto adj = undirected_projection(g);
  const NodeId n = g.node_count();
  if (n == 0) return 0;

  std::vector<std::uint32_t> degree(n);
  std::uint32_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = static_cast<std::uint32_t>(adj[v].size());
    max_degree = std::max(max_degree, degree[v]);
  }

  // bucketed min-degree peeling with stale entries; current steps down by at
  // most 1 per removal, so the scan is amortized O(n + m + max_degree)
  std::vector<std::vector<NodeId>> buckets(max_degree + 1);
  for (NodeId v = 0; v < n; ++v) buckets[degree[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::uint32_t result = 0;
  std::uint32_t current = 0;
  for (NodeId peeled = 0; peeled < n; ++peeled) {
    NodeId v = 0;
    for (;;) {
      while (current <= max_degree && buckets[current].empty()) ++current;
      auto& bucket = buckets[current];
      v = bucket.back();
      bucket.pop_back();
      if (!removed[v] && degree[v] == current) break;
    }
    removed[v] = true;
    result = std::max(result, current);
    for (NodeId u : adj[v]) {
      if (!removed[u]) {
        --degree[u];
        buckets[degree[u]].push_back(u);
      }
    }
    if (current > 0) --current;
  }
  return result;
}

namespace {

std::vector<std::uint32_t> degrees_of(const SocialGraph& g, Direction direction) {
  std::vector<std::uint32_t> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    degrees[v] = direction == Direction::In ? g.in_degree(v) : g.out_degree(v);
  }
  return degrees;
}

}  // namespace

DegreeHistogram degree_histogram(const SocialGraph& g, Direction direction) {
  const auto degrees = degrees_of(g, direction);
  DegreeHistogram hist;
  std::uint32_t max_degree = 0;
  for (std::uint32_t d : degrees) {
    hist.counts[d] += 1;
    max_degree = std::max(max_degree, d);
  }
  const double n = static_cast<double>(degrees.size());
  hist.ccdf.resize(max_degree + 1, 0.0);
  if (!degrees.empty()) {
    std::uint64_t at_least = degrees.size();
    for (std::uint32_t d = 0; d <= max_degree; ++d) {
      hist.ccdf[d] = static_cast<double>(at_least) / n;
      auto it = hist.counts.find(d);
      if (it != hist.counts.end()) at_least -= it->second;
    }
  }
  return hist;
}

double tail_ratio(const SocialGraph& g, Direction direction) {
  auto degrees = degrees_of(g, direction);
  if (degrees.empty()) throw_validation("tail ratio undefined for empty graphs");
  std::sort(degrees.begin(), degrees.end());
  const std::uint32_t max_degree = degrees.back();
  if (max_degree == 0) throw_validation("tail ratio undefined when all degrees are 0");
  const std::uint32_t median = degrees[(degrees.size() - 1) / 2];
  return static_cast<double>(max_degree) / static_cast<double>(std::max<std::uint32_t>(1, median));
}

MetricsReport compute_metrics(const SocialGraph& g, int max_h, int threads) {
  MetricsReport report;
  const NodeId n = g.node_count();
  if (n >= 2) {
    report.neighborhood = neighborhood_function(g, max_h, threads);
    const auto stats = reachability_fraction(g, {.threads = threads});
    report.reachability = stats.fraction;
    try {
      report.avg_hop = average_hop_distance(g);
    } catch (const Error&) {
      report.avg_hop = std::nullopt;
    }
  } else {
    report.neighborhood.p.assign(static_cast<std::size_t>(std::max(max_h, 1)), 0.0);
  }
  report.clustering = clustering_by_degree(g);
  report.degeneracy = degeneracy(g);
  report.in_degree_hist = degree_histogram(g, Direction::In);
  report.out_degree_hist = degree_histogram(g, Direction::Out);
  try {
    report.tail_ratio = tail_ratio(g, Direction::In);
  } catch (const Error&) {
    report.tail_ratio = std::nullopt;
  }
  return report;
}

}  // namespace socialforge
