#include "cmlab/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::uint64_t size(std::uint32_t root) const { return size_[root]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint64_t> size_;
};

template <typename Accept>
std::uint64_t count_matching(const MultiGraph& g, const LocalProperty& property, Accept accept) {
  const auto census = components(g);
  const ComponentCensus* hint = property.uses_component_size() ? &census : nullptr;
  const auto radius = hint ? property.ball_radius_with_census() : property.radius();
  if (!radius) throw Error(ErrorCode::UnboundedRadius, property.to_string() + " has no finite radius");

  const auto n = g.vertex_count();
  std::uint64_t count = 0;
  if (property.kind() == LocalProperty::Kind::ComponentSizeExactly) {
    const auto k = static_cast<std::uint64_t>(property.first());
    for (Vertex v = 0; v < n; ++v) count += (accept(census, v) && census.size_of(v) == k) ? 1 : 0;
    return count;
  }
  if (property.kind() == LocalProperty::Kind::ComponentSizeAtLeast) {
    const auto k = static_cast<std::uint64_t>(property.first());
    for (Vertex v = 0; v < n; ++v) count += (accept(census, v) && census.size_of(v) >= k) ? 1 : 0;
    return count;
  }
  const Adjacency adj(g);
  if (property.kind() == LocalProperty::Kind::RootDegree) {
    for (Vertex v = 0; v < n; ++v) count += (accept(census, v) && adj.degree(v) == property.first()) ? 1 : 0;
    return count;
  }
  NeighborhoodBuilder builder(adj);
  for (Vertex v = 0; v < n; ++v) {
    if (!accept(census, v)) continue;
    if (evaluate_property(builder.build(v, *radius), property, hint)) ++count;
  }
  return count;
}

}  // namespace

ComponentCensus::ComponentCensus(std::vector<std::uint64_t> sizes, std::vector<std::uint32_t> component_id)
    : sizes_(std::move(sizes)), component_id_(std::move(component_id)) {}

std::uint64_t ComponentCensus::vertices_in_size(std::uint64_t k) const {
  std::uint64_t total = 0;
  for (const auto s : sizes_) total += s == k ? s : 0;
  return total;
}

std::uint64_t ComponentCensus::vertices_in_size_at_least(std::uint64_t k) const {
  std::uint64_t total = 0;
  for (const auto s : sizes_) total += s >= k ? s : 0;
  return total;
}

ComponentCensus components(const MultiGraph& g) {
  const auto n = g.vertex_count();
  DisjointSets sets(n);
  for (const auto& [u, v] : g.edges()) sets.unite(u, v);

  // Components are discovered in order of their smallest vertex.
  std::vector<std::uint32_t> root_slot(n, UINT32_MAX);
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> provisional(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto r = sets.find(v);
    if (root_slot[r] == UINT32_MAX) {
      root_slot[r] = static_cast<std::uint32_t>(sizes.size());
      sizes.push_back(sets.size(r));
    }
    provisional[v] = root_slot[r];
  }
  std::vector<std::uint32_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::uint32_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  std::vector<std::uint32_t> rank(sizes.size());
  std::vector<std::uint64_t> sorted(sizes.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    sorted[i] = sizes[order[i]];
  }
  for (auto& c : provisional) c = rank[c];
  return ComponentCensus(std::move(sorted), std::move(provisional));
}

Adjacency::Adjacency(const MultiGraph& g) : offsets_(g.vertex_count() + 1, 0), degree_(g.degrees()) {
  for (const auto& [u, v] : g.edges()) {
    ++offsets_[u + 1];
    if (u != v) ++offsets_[v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  entries_.resize(offsets_.back());
  auto fill = offsets_;
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges()[e];
    entries_[fill[u]++] = {v, e};
    if (u != v) entries_[fill[v]++] = {u, e};
  }
}

NeighborhoodBuilder::NeighborhoodBuilder(const Adjacency& adj)
    : adj_(adj), stamp_(adj.vertex_count(), 0), local_(adj.vertex_count()) {}

RootedNeighborhood NeighborhoodBuilder::build(Vertex root, int depth) {
  if (root >= adj_.vertex_count()) throw Error(ErrorCode::InvalidDegreeSequence, "root out of range");
  if (depth < 0) throw Error(ErrorCode::InsufficientRadius, "negative depth");
  if (++current_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    current_ = 1;
  }
  RootedNeighborhood ball;
  ball.root = root;
  ball.depth = depth;
  visit(ball, root, 0);
  for (std::size_t head = 0; head < ball.vertices.size(); ++head) {
    if (ball.distance[head] == depth) continue;
    const Vertex u = ball.vertices[head];
    for (const auto& entry : adj_.incident(u)) {
      if (entry.other != u && stamp_[entry.other] != current_) visit(ball, entry.other, ball.distance[head] + 1);
    }
  }
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const Vertex u = ball.vertices[i];
    for (const auto& entry : adj_.incident(u)) {
      const Vertex w = entry.other;
      if (stamp_[w] != current_) continue;
      if (w == u || u < w) ball.edges.emplace_back(static_cast<std::uint32_t>(i), local_[w]);
    }
  }
  finalize_tree_flag(ball);
  return ball;
}

void NeighborhoodBuilder::visit(RootedNeighborhood& ball, Vertex v, int dist) {
  stamp_[v] = current_;
  local_[v] = static_cast<std::uint32_t>(ball.vertices.size());
  ball.vertices.push_back(v);
  ball.distance.push_back(dist);
  ball.degree.push_back(adj_.degree(v));
}

RootedNeighborhood neighborhood(const Adjacency& adj, Vertex root, int depth) {
  return NeighborhoodBuilder(adj).build(root, depth);
}

RootedNeighborhood neighborhood(const MultiGraph& g, Vertex root, int depth) {
  return neighborhood(Adjacency(g), root, depth);
}

std::uint64_t count_property(const MultiGraph& g, const LocalProperty& property) {
  return count_matching(g, property, [](const ComponentCensus&, Vertex) { return true; });
}

std::uint64_t count_property_in_giant(const MultiGraph& g, const LocalProperty& property) {
  return count_matching(g, property, [](const ComponentCensus& c, Vertex v) { return c.in_giant(v); });
}

}  // namespace cmlab
