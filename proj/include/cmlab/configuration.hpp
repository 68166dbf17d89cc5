#pragma once

// Degree sequences and the configuration model: uniform pairings of stubs,
// the multigraph they induce, switchings, and rejection sampling of the
// simple graph with a given degree sequence.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cmlab/distribution.hpp"
#include "cmlab/random.hpp"

namespace cmlab {

using Vertex = std::uint32_t;
using Stub = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite sequence of non-negative degrees with even sum; vertices are
/// 0-based.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);

  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// m(d): half the degree sum.
  std::uint64_t edge_count() const { return stub_count() / 2; }
  std::uint64_t stub_count() const { return stub_count_; }
  int max_degree() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
  std::uint64_t stub_count_ = 0;
};

/// n_i(d) for every degree i that occurs.
std::map<int, std::uint64_t> degree_counts(const DegreeSequence& ds);

/// max( sum_{i>=1} |i n_i/n - i r_i|, 1/n ).
double conf_distance(const DegreeSequence& ds, const Distribution& d);

/// sum_{i>=C} i n_i / n.
double tail_mass(const DegreeSequence& ds, int min_degree);

/// n i.i.d. draws from D; an odd total is fixed by adding 1 to the last entry.
DegreeSequence sample_degree_sequence(const Distribution& d, std::size_t n, Rng& rng);

/// Perfect matching of the stubs 0..2m-1. Vertex v owns the consecutive
/// block of d_v stubs, in vertex order. Pairs keep their orientation,
/// which fixes the outcome of a switching.
class Pairing {
 public:
  Pairing(const DegreeSequence& ds, std::vector<std::pair<Stub, Stub>> pairs);

  std::size_t stub_count() const { return owner_.size(); }
  const std::vector<std::pair<Stub, Stub>>& pairs() const { return pairs_; }
  Vertex owner(Stub s) const { return owner_[s]; }
  std::size_t vertex_count() const { return vertex_count_; }

  /// Same matching, ignoring pair orientation and order.
  bool same_matching(const Pairing& other) const;

 private:
  friend Pairing apply_switching(const Pairing&, std::size_t, std::size_t);
  friend Pairing apply_switching(const Pairing&, std::size_t, std::size_t, Rng&);

  std::vector<std::pair<Stub, Stub>> pairs_;
  std::vector<Vertex> owner_;
  std::size_t vertex_count_ = 0;
};

/// Uniform over all (2m-1)!! matchings: shuffle the stubs and pair
/// consecutive entries.
Pairing sample_pairing(const DegreeSequence& ds, Rng& rng);

/// Multigraph on n vertices given by an edge multiset. Loops are {v, v} and
/// add 2 to the degree of v.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<int> degrees() const;
  DegreeSequence degree_sequence() const { return DegreeSequence(degrees()); }

  void add_edge(Vertex u, Vertex v);
  /// Removes the edge at position `index` (order of the rest is not kept).
  void remove_edge(std::size_t index);

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// phi_d: each pair {a, b} becomes an edge between the owners of a and b.
MultiGraph to_multigraph(const Pairing& pairing);

/// Replace pairs (a,b) and (c,d) by (a,c) and (b,d). Throws SamePair when
/// the indices coincide.
Pairing apply_switching(const Pairing& pairing, std::size_t first, std::size_t second);
/// As above after giving each of the two pairs a uniformly random
/// orientation, so both recombinations can occur.
Pairing apply_switching(const Pairing& pairing, std::size_t first, std::size_t second, Rng& rng);

/// No loops and no repeated vertex pairs.
bool is_simple(const MultiGraph& g);

struct SimpleSample {
  std::optional<MultiGraph> graph;  // empty when the attempts ran out
  int attempts = 0;

  bool exhausted() const { return !graph.has_value(); }
};

/// Draws configuration multigraphs until one is simple; the result then has
/// the law of the uniform simple graph with degree sequence ds.
SimpleSample sample_simple(const DegreeSequence& ds, Rng& rng, int max_attempts);

/// Uniform configuration multigraph Gamma_d.
MultiGraph sample_multigraph(const DegreeSequence& ds, Rng& rng);

}  // namespace cmlab
