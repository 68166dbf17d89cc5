#pragma once

// Component statistics, rooted neighbourhoods and counts of vertices with a
// local property.

#include <cstdint>
#include <span>
#include <vector>

#include "cmlab/configuration.hpp"
#include "cmlab/local.hpp"

namespace cmlab {

/// Connected components of a multigraph, largest first. Equal sizes are
/// ordered by their smallest vertex, so component 0 is the largest
/// component containing the smallest vertex among those tied.
class ComponentCensus {
 public:
  ComponentCensus(std::vector<std::uint64_t> sizes, std::vector<std::uint32_t> component_id);

  std::size_t vertex_count() const { return component_id_.size(); }
  std::size_t component_count() const { return sizes_.size(); }
  const std::vector<std::uint64_t>& sizes() const { return sizes_; }
  std::uint32_t component_of(Vertex v) const { return component_id_[v]; }
  std::uint64_t size_of(Vertex v) const { return sizes_[component_id_[v]]; }

  std::uint64_t largest() const { return sizes_.empty() ? 0 : sizes_[0]; }
  std::uint64_t second_largest() const { return sizes_.size() > 1 ? sizes_[1] : 0; }
  /// N_k: vertices lying in components of exactly k vertices.
  std::uint64_t vertices_in_size(std::uint64_t k) const;
  /// N_{>=k}.
  std::uint64_t vertices_in_size_at_least(std::uint64_t k) const;
  bool in_giant(Vertex v) const { return component_id_[v] == 0; }

 private:
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> component_id_;
};

ComponentCensus components(const MultiGraph& g);

/// Compressed adjacency for repeated breadth-first searches. Each non-loop
/// edge appears in both endpoint lists, each loop once in its vertex's list.
class Adjacency {
 public:
  explicit Adjacency(const MultiGraph& g);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  int degree(Vertex v) const { return degree_[v]; }

  struct Entry {
    Vertex other;
    std::uint32_t edge;
  };
  std::span<const Entry> incident(Vertex v) const {
    return {entries_.data() + offsets_[v], entries_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<Entry> entries_;
  std::vector<int> degree_;
};

/// Builds many balls over one graph; scratch marks are reused between calls.
class NeighborhoodBuilder {
 public:
  explicit NeighborhoodBuilder(const Adjacency& adj);
  RootedNeighborhood build(Vertex root, int depth);

 private:
  void visit(RootedNeighborhood& ball, Vertex v, int dist);

  const Adjacency& adj_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> local_;
  std::uint32_t current_ = 0;
};

/// Gamma_{<=t}(v) with distances, host degrees and the tree flag.
RootedNeighborhood neighborhood(const Adjacency& adj, Vertex root, int depth);
RootedNeighborhood neighborhood(const MultiGraph& g, Vertex root, int depth);

/// N_P(G): vertices v with (G, v) in P. Component-size kinds are answered
/// from one census pass.
std::uint64_t count_property(const MultiGraph& g, const LocalProperty& property);
/// N_P(C_1): the same count restricted to component 0 of the census.
std::uint64_t count_property_in_giant(const MultiGraph& g, const LocalProperty& property);

}  // namespace cmlab
