#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "socialforge/types.hpp"

namespace socialforge {

/// Per-node profile embeddings (unit L2 norm) with community and population
/// labels. Immutable after construction except for community relabeling.
class ProfileTable {
 public:
  ProfileTable(std::uint32_t dim, std::uint32_t size);

  std::uint32_t dim() const { return dim_; }
  std::uint32_t size() const { return size_; }

  std::span<const double> embedding(NodeId v) const;
  std::span<double> mutable_embedding(NodeId v);

  /// -1 means "no community".
  std::int32_t community(NodeId v) const;
  void set_community(NodeId v, std::int32_t label);
  void set_communities(std::span<const std::int32_t> labels);
  void clear_communities();
  /// Number of distinct non-negative community labels.
  std::uint32_t community_count() const;

  Population population(NodeId v) const;
  void set_population(NodeId v, Population p);

 private:
  void check_node(NodeId v) const;

  std::uint32_t dim_;
  std::uint32_t size_;
  std::vector<double> data_;
  std::vector<std::int32_t> community_;
  std::vector<Population> population_;
};

/// Standard cosine similarity; equals the dot product for unit vectors.
double cosine(std::span<const double> a, std::span<const double> b);

/// Unit-normalizes v in place. Vectors already within 1e-12 of unit norm are
/// left untouched so that normalization is idempotent bit-for-bit.
void normalize(std::span<double> v);

/// Community-structured synthetic embeddings: n_communities unit centroids
/// uniform on the sphere, round-robin assignment, per-node gaussian jitter of
/// scale intra_spread, then renormalization. Pure function of its arguments.
ProfileTable synth_profiles(std::uint32_t n, std::uint32_t n_communities, std::uint32_t dim,
                            double intra_spread, std::uint64_t seed,
                            Population label = Population::Bot);

ProfileTable load_profiles(const std::filesystem::path& path);
void save_profiles(const ProfileTable& table, const std::filesystem::path& path);

}  // namespace socialforge
