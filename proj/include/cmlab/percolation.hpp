#pragma once

#include <cstdint>
#include <vector>

#include "cmlab/configuration.hpp"
#include "cmlab/distribution.hpp"
#include "cmlab/random.hpp"

namespace cmlab {

/// A multigraph whose edges are each coloured red or blue.
struct ColoredGraph {
  MultiGraph base;
  std::vector<std::uint8_t> red;  // per edge of base, 1 = red

  std::size_t red_count() const;
};

/// Colours every edge (each loop and each parallel copy separately) red
/// with probability p. Throws BadProbability.
ColoredGraph color_edges(const MultiGraph& g, double p, Rng& rng);

struct SplitGraphs {
  MultiGraph red;
  MultiGraph blue;
  DegreeSequence red_degrees;
  DegreeSequence blue_degrees;
};

/// Red and blue subgraphs on the full vertex set; their degrees add up to
/// the degrees of the base graph vertex by vertex.
SplitGraphs split(const ColoredGraph& cg);

/// G[p]: keep each edge independently with probability p.
MultiGraph percolate(const MultiGraph& g, double p, Rng& rng);

/// conf_distance(red_degrees, thin(D, p)).
double thinned_sequence_distance(const DegreeSequence& red_degrees, const Distribution& d, double p);

}  // namespace cmlab
