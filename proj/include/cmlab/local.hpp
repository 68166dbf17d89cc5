#pragma once

// Rooted neighbourhoods and t-local properties of rooted graphs.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cmlab {

class ComponentCensus;

/// The subgraph induced by the vertices within distance `depth` of a root,
/// as a rooted graph. Index 0 is the root. `degree` holds each vertex's
/// degree in the host graph (loops count twice), which may exceed what the
/// induced edges show at the boundary.
struct RootedNeighborhood {
  std::uint32_t root = 0;
  int depth = 0;
  std::vector<std::uint32_t> vertices;  // host ids
  std::vector<int> distance;
  std::vector<int> degree;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // local indices, multiset
  bool is_tree = true;

  std::size_t size() const { return vertices.size(); }
  /// Number of vertices at distance at most `radius`.
  std::size_t count_within(int radius) const;
};

/// Sets is_tree from the edge count and connectivity.
void finalize_tree_flag(RootedNeighborhood& ball);

/// A property of rooted graphs that depends only on the ball of some finite
/// radius around the root (or, for ComponentInfinite, on no finite ball).
class LocalProperty {
 public:
  enum class Kind {
    ComponentSizeExactly,
    ComponentSizeAtLeast,
    RootDegree,
    MaxDegreeBall,
    Conjunction,
    ComponentInfinite,
  };

  static LocalProperty component_size_exactly(int k);
  static LocalProperty component_size_at_least(int k);
  static LocalProperty root_degree(int d);
  /// Every vertex within distance t of the root has degree at most max_degree.
  static LocalProperty max_degree_ball(int max_degree, int t);
  static LocalProperty conjunction(std::vector<LocalProperty> parts);
  static LocalProperty component_infinite();

  /// Parses "component-size:K", "component-at-least:K", "root-degree:D",
  /// "max-degree-ball:DELTA:T", "component-infinite", and conjunctions
  /// joined with '+'. Throws Error(SpecParse).
  static LocalProperty parse(std::string_view text);

  Kind kind() const { return kind_; }
  int first() const { return a_; }
  int second() const { return b_; }
  const std::vector<LocalProperty>& parts() const { return parts_; }

  /// Smallest t for which the property is t-local; nullopt if unbounded.
  std::optional<int> radius() const;
  /// Radius needed from a ball once component-size kinds are answered by a
  /// census instead; nullopt if unbounded.
  std::optional<int> ball_radius_with_census() const;
  /// True if some part is a component-size kind.
  bool uses_component_size() const;

  std::string to_string() const;

 private:
  LocalProperty(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}

  Kind kind_;
  int a_ = 0;
  int b_ = 0;
  std::vector<LocalProperty> parts_;
};

/// (G, root) in P. Component-size kinds use `census` for the root's
/// component when given, otherwise the ball. Throws InsufficientRadius when
/// the ball is too shallow and UnboundedRadius for ComponentInfinite.
bool evaluate_property(const RootedNeighborhood& ball, const LocalProperty& property,
                       const ComponentCensus* census = nullptr);

}  // namespace cmlab
