#include "cmlab/percolation.hpp"

#include <algorithm>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

std::size_t ColoredGraph::red_count() const {
  return static_cast<std::size_t>(std::count(red.begin(), red.end(), std::uint8_t{1}));
}

ColoredGraph color_edges(const MultiGraph& g, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::BadProbability, "retention probability " + std::to_string(p) + " outside [0,1]");
  }
  ColoredGraph cg{g, std::vector<std::uint8_t>(g.edge_count())};
  for (auto& c : cg.red) c = bernoulli(rng, p) ? 1 : 0;
  return cg;
}

SplitGraphs split(const ColoredGraph& cg) {
  std::vector<Edge> red, blue;
  const auto& edges = cg.base.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) (cg.red[e] ? red : blue).push_back(edges[e]);
  MultiGraph red_graph(cg.base.vertex_count(), std::move(red));
  MultiGraph blue_graph(cg.base.vertex_count(), std::move(blue));
  auto red_degrees = red_graph.degree_sequence();
  auto blue_degrees = blue_graph.degree_sequence();
  return {std::move(red_graph), std::move(blue_graph), std::move(red_degrees), std::move(blue_degrees)};
}

MultiGraph percolate(const MultiGraph& g, double p, Rng& rng) { return split(color_edges(g, p, rng)).red; }

double thinned_sequence_distance(const DegreeSequence& red_degrees, const Distribution& d, double p) {
  return conf_distance(red_degrees, thin(d, p));
}

}  // namespace cmlab
