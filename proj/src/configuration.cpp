#include "cmlab/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmlab/error.hpp"

namespace cmlab {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error(ErrorCode::InvalidDegreeSequence, "degree sequence is empty");
  for (const int d : degrees_) {
    if (d < 0) throw Error(ErrorCode::InvalidDegreeSequence, "negative degree " + std::to_string(d));
    stub_count_ += static_cast<std::uint64_t>(d);
  }
  if (stub_count_ % 2 != 0) {
    throw Error(ErrorCode::InvalidDegreeSequence, "degree sum " + std::to_string(stub_count_) + " is odd");
  }
}

int DegreeSequence::max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

std::map<int, std::uint64_t> degree_counts(const DegreeSequence& ds) {
  std::map<int, std::uint64_t> counts;
  for (const int d : ds.degrees()) ++counts[d];
  return counts;
}

double conf_distance(const DegreeSequence& ds, const Distribution& d) {
  const auto n = static_cast<double>(ds.size());
  const auto counts = degree_counts(ds);
  double dist = 0.0;
  for (const auto& [degree, count] : counts) {
    if (degree == 0) continue;
    dist += std::abs(degree * static_cast<double>(count) / n - degree * d.pmf(degree));
  }
  for (const auto& [value, prob] : d.masses()) {
    if (value == 0 || counts.contains(static_cast<int>(value))) continue;
    dist += static_cast<double>(value) * prob;
  }
  return std::max(dist, 1.0 / n);
}

double tail_mass(const DegreeSequence& ds, int min_degree) {
  double total = 0.0;
  for (const int d : ds.degrees()) {
    if (d >= min_degree) total += d;
  }
  return total / static_cast<double>(ds.size());
}

DegreeSequence sample_degree_sequence(const Distribution& d, std::size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::InvalidDegreeSequence, "degree sequence length must be positive");
  const Sampler draw(d);
  std::vector<int> degrees(n);
  std::uint64_t sum = 0;
  for (auto& deg : degrees) {
    deg = static_cast<int>(draw(rng));
    sum += static_cast<std::uint64_t>(deg);
  }
  if (sum % 2 != 0) ++degrees.back();
  return DegreeSequence(std::move(degrees));
}

namespace {

std::vector<Vertex> stub_owners(const DegreeSequence& ds) {
  std::vector<Vertex> owner;
  owner.reserve(ds.stub_count());
  for (std::size_t v = 0; v < ds.size(); ++v) owner.insert(owner.end(), static_cast<std::size_t>(ds[v]), static_cast<Vertex>(v));
  return owner;
}

}  // namespace

Pairing::Pairing(const DegreeSequence& ds, std::vector<std::pair<Stub, Stub>> pairs)
    : pairs_(std::move(pairs)), owner_(stub_owners(ds)), vertex_count_(ds.size()) {
  if (pairs_.size() * 2 != owner_.size()) {
    throw Error(ErrorCode::InvalidDegreeSequence, "pairing size does not match the stub count");
  }
  std::vector<char> seen(owner_.size(), 0);
  for (const auto& [a, b] : pairs_) {
    for (const Stub s : {a, b}) {
      if (s >= owner_.size() || seen[s]) {
        throw Error(ErrorCode::InvalidDegreeSequence, "pairs are not a perfect matching of the stubs");
      }
      seen[s] = 1;
    }
  }
}

bool Pairing::same_matching(const Pairing& other) const {
  if (other.stub_count() != stub_count()) return false;
  std::vector<Stub> mate(stub_count()), other_mate(stub_count());
  for (const auto& [a, b] : pairs_) mate[a] = b, mate[b] = a;
  for (const auto& [a, b] : other.pairs_) other_mate[a] = b, other_mate[b] = a;
  return mate == other_mate;
}

Pairing sample_pairing(const DegreeSequence& ds, Rng& rng) {
  std::vector<Stub> stubs(ds.stub_count());
  std::iota(stubs.begin(), stubs.end(), Stub{0});
  shuffle(std::span<Stub>(stubs), rng);
  std::vector<std::pair<Stub, Stub>> pairs(stubs.size() / 2);
  for (std::size_t k = 0; k < pairs.size(); ++k) pairs[k] = {stubs[2 * k], stubs[2 * k + 1]};
  return Pairing(ds, std::move(pairs));
}

MultiGraph::MultiGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) throw Error(ErrorCode::InvalidDegreeSequence, "edge endpoint out of range");
  }
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

void MultiGraph::add_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) throw Error(ErrorCode::InvalidDegreeSequence, "edge endpoint out of range");
  edges_.emplace_back(u, v);
}

void MultiGraph::remove_edge(std::size_t index) {
  edges_[index] = edges_.back();
  edges_.pop_back();
}

MultiGraph to_multigraph(const Pairing& pairing) {
  std::vector<Edge> edges;
  edges.reserve(pairing.pairs().size());
  for (const auto& [a, b] : pairing.pairs()) {
    const Vertex u = pairing.owner(a);
    const Vertex v = pairing.owner(b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return MultiGraph(pairing.vertex_count(), std::move(edges));
}

MultiGraph sample_multigraph(const DegreeSequence& ds, Rng& rng) {
  return to_multigraph(sample_pairing(ds, rng));
}

Pairing apply_switching(const Pairing& pairing, std::size_t first, std::size_t second) {
  if (first == second) throw Error(ErrorCode::SamePair, "switching needs two distinct pairs");
  if (first >= pairing.pairs_.size() || second >= pairing.pairs_.size()) {
    throw Error(ErrorCode::SamePair, "switching pair index out of range");
  }
  Pairing out = pairing;
  const auto [a, b] = pairing.pairs_[first];
  const auto [c, d] = pairing.pairs_[second];
  out.pairs_[first] = {a, c};
  out.pairs_[second] = {b, d};
  return out;
}

Pairing apply_switching(const Pairing& pairing, std::size_t first, std::size_t second, Rng& rng) {
  if (first == second) throw Error(ErrorCode::SamePair, "switching needs two distinct pairs");
  if (first >= pairing.pairs_.size() || second >= pairing.pairs_.size()) {
    throw Error(ErrorCode::SamePair, "switching pair index out of range");
  }
  Pairing oriented = pairing;
  for (const std::size_t k : {first, second}) {
    if (bernoulli(rng, 0.5)) std::swap(oriented.pairs_[k].first, oriented.pairs_[k].second);
  }
  return apply_switching(oriented, first, second);
}

bool is_simple(const MultiGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) {
    if (u == v) return false;
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

SimpleSample sample_simple(const DegreeSequence& ds, Rng& rng, int max_attempts) {
  SimpleSample result;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto g = sample_multigraph(ds, rng);
    result.attempts = attempt;
    if (is_simple(g)) {
      result.graph = std::move(g);
      return result;
    }
  }
  return result;
}

}  // namespace cmlab
