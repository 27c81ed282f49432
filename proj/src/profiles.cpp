#include "socialforge/profiles.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "socialforge/rng.hpp"

namespace socialforge {

ProfileTable::ProfileTable(std::uint32_t dim, std::uint32_t size)
    : dim_(dim),
      size_(size),
      data_(static_cast<std::size_t>(dim) * size, 0.0),
      community_(size, -1),
      population_(size, Population::Bot) {
  if (dim < 1) throw_validation("embedding dimension must be >= 1");
}

void ProfileTable::check_node(NodeId v) const {
  if (v >= size_) throw_validation("profile id " + std::to_string(v) + " out of range");
}

std::span<const double> ProfileTable::embedding(NodeId v) const {
  check_node(v);
  return {data_.data() + static_cast<std::size_t>(v) * dim_, dim_};
}

std::span<double> ProfileTable::mutable_embedding(NodeId v) {
  check_node(v);
  return {data_.data() + static_cast<std::size_t>(v) * dim_, dim_};
}

std::int32_t ProfileTable::community(NodeId v) const {
  check_node(v);
  return community_[v];
}

void ProfileTable::set_community(NodeId v, std::int32_t label) {
  check_node(v);
  community_[v] = label;
}

void ProfileTable::set_communities(std::span<const std::int32_t> labels) {
  if (labels.size() != size_) throw_validation("community label count does not match table size");
  community_.assign(labels.begin(), labels.end());
}

void ProfileTable::clear_communities() { community_.assign(size_, -1); }

std::uint32_t ProfileTable::community_count() const {
  std::set<std::int32_t> distinct;
  for (std::int32_t c : community_) {
    if (c >= 0) distinct.insert(c);
  }
  return static_cast<std::uint32_t>(distinct.size());
}

Population ProfileTable::population(NodeId v) const {
  check_node(v);
  return population_[v];
}

void ProfileTable::set_population(NodeId v, Population p) {
  check_node(v);
  population_[v] = p;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw_validation("cosine: dimension mismatch");
  if (a.empty()) throw_validation("cosine: empty vectors");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw_validation("cosine: zero-norm vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

void normalize(std::span<double> v) {
  double sq = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw_validation("embedding entry is not finite");
    sq += x * x;
  }
  if (sq == 0.0) throw_validation("cannot normalize a zero vector");
  if (std::abs(sq - 1.0) <= 1e-12) return;
  const double inv = 1.0 / std::sqrt(sq);
  for (double& x : v) x *= inv;
}

ProfileTable synth_profiles(std::uint32_t n, std::uint32_t n_communities, std::uint32_t dim,
                            double intra_spread, std::uint64_t seed, Population label) {
  if (n_communities < 1) throw_validation("need at least one community");
  if (n < n_communities) throw_validation("need n >= n_communities");
  if (dim < 2) throw_validation("embedding dimension must be >= 2");
  if (!(intra_spread > 0.0)) throw_validation("intra_spread must be > 0");

  std::vector<double> centroids(static_cast<std::size_t>(n_communities) * dim);
  Rng centroid_rng = substream(seed, "profiles-centroids");
  for (std::uint32_t c = 0; c < n_communities; ++c) {
    std::span<double> centroid(centroids.data() + static_cast<std::size_t>(c) * dim, dim);
    for (double& x : centroid) x = centroid_rng.next_gaussian();
    normalize(centroid);
  }

  ProfileTable table(dim, n);
  for (NodeId v = 0; v < n; ++v) {
    const std::uint32_t c = v % n_communities;
    std::span<const double> centroid(centroids.data() + static_cast<std::size_t>(c) * dim, dim);
    Rng node_rng = substream(seed, "profiles-node", v);
    auto emb = table.mutable_embedding(v);
    for (std::uint32_t i = 0; i < dim; ++i) {
      emb[i] = centroid[i] + intra_spread * node_rng.next_gaussian();
    }
    normalize(emb);
    table.set_community(v, static_cast<std::int32_t>(c));
    table.set_population(v, label);
  }
  return table;
}

ProfileTable load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw_runtime("cannot open profile file: " + path.string());

  struct Record {
    std::int64_t id;
    Population label;
    std::int32_t community;
    std::vector<double> embedding;
  };
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw_validation(path.string() + ":" + std::to_string(line_no) + ": bad JSON: " + e.what());
    }
    if (!j.contains("id") || !j.contains("label") || !j.contains("embedding")) {
      throw_validation(path.string() + ":" + std::to_string(line_no) +
                       ": record needs id, label, embedding");
    }
    Record r;
    r.id = j.at("id").get<std::int64_t>();
    r.label = population_from_string(j.at("label").get<std::string>());
    r.community = j.contains("community") && !j.at("community").is_null()
                      ? j.at("community").get<std::int32_t>()
                      : -1;
    r.embedding = j.at("embedding").get<std::vector<double>>();
    records.push_back(std::move(r));
  }
  if (records.empty()) throw_validation("profile file is empty: " + path.string());

  const std::size_t dim = records.front().embedding.size();
  if (dim < 1) throw_validation("profile embeddings must be non-empty");
  for (const auto& r : records) {
    if (r.embedding.size() != dim) {
      throw_validation("inconsistent embedding dimensions in " + path.string());
    }
    if (r.id < 0 || static_cast<std::size_t>(r.id) >= records.size()) {
      throw_validation("profile ids must be dense in [0, n)");
    }
  }

  ProfileTable table(static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(records.size()));
  std::vector<bool> seen(records.size(), false);
  for (const auto& r : records) {
    const NodeId v = static_cast<NodeId>(r.id);
    if (seen[v]) throw_validation("duplicate profile id " + std::to_string(r.id));
    seen[v] = true;
    auto emb = table.mutable_embedding(v);
    std::copy(r.embedding.begin(), r.embedding.end(), emb.begin());
    normalize(emb);
    table.set_community(v, r.community);
    table.set_population(v, r.label);
  }
  return table;
}

void save_profiles(const ProfileTable& table, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw_runtime("cannot write profile file: " + path.string());
  for (NodeId v = 0; v < table.size(); ++v) {
    nlohmann::ordered_json j;
    j["id"] = v;
    j["label"] = to_string(table.population(v));
    if (table.community(v) >= 0) {
      j["community"] = table.community(v);
    } else {
      j["community"] = nullptr;
    }
    j["embedding"] = table.embedding(v);
    out << j.dump() << '\n';
  }
  if (!out) throw_runtime("write failed: " + path.string());
}

}  // namespace socialforge
