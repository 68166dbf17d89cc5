#include "cmlab/local.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "cmlab/census.hpp"
#include "cmlab/error.hpp"

namespace cmlab {

std::size_t RootedNeighborhood::count_within(int radius) const {
  return static_cast<std::size_t>(
      std::count_if(distance.begin(), distance.end(), [radius](int d) { return d <= radius; }));
}

void finalize_tree_flag(RootedNeighborhood& ball) {
  // BFS balls are connected, so a tree is exactly |E| = |V| - 1.
  ball.is_tree = ball.edges.size() + 1 == ball.vertices.size();
}

LocalProperty LocalProperty::component_size_exactly(int k) {
  if (k < 1) throw Error(ErrorCode::SpecParse, "component size must be at least 1");
  return {Kind::ComponentSizeExactly, k, 0};
}

LocalProperty LocalProperty::component_size_at_least(int k) {
  if (k < 1) throw Error(ErrorCode::SpecParse, "component size must be at least 1");
  return {Kind::ComponentSizeAtLeast, k, 0};
}

LocalProperty LocalProperty::root_degree(int d) {
  if (d < 0) throw Error(ErrorCode::SpecParse, "degree must be non-negative");
  return {Kind::RootDegree, d, 0};
}

LocalProperty LocalProperty::max_degree_ball(int max_degree, int t) {
  if (max_degree < 0 || t < 0) throw Error(ErrorCode::SpecParse, "max-degree ball needs non-negative parameters");
  return {Kind::MaxDegreeBall, max_degree, t};
}

LocalProperty LocalProperty::conjunction(std::vector<LocalProperty> parts) {
  if (parts.empty()) throw Error(ErrorCode::SpecParse, "empty conjunction");
  LocalProperty p{Kind::Conjunction, 0, 0};
  p.parts_ = std::move(parts);
  return p;
}

LocalProperty LocalProperty::component_infinite() { return {Kind::ComponentInfinite, 0, 0}; }

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::SpecParse, "bad integer in property '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

LocalProperty LocalProperty::parse(std::string_view text) {
  const auto terms = split(text, '+');
  if (terms.size() > 1) {
    std::vector<LocalProperty> parts;
    for (const auto term : terms) parts.push_back(parse(term));
    return conjunction(std::move(parts));
  }
  const auto fields = split(text, ':');
  const auto name = fields[0];
  const auto arity = fields.size() - 1;
  if (name == "component-size" && arity == 1) return component_size_exactly(parse_int(fields[1], text));
  if (name == "component-at-least" && arity == 1) return component_size_at_least(parse_int(fields[1], text));
  if (name == "root-degree" && arity == 1) return root_degree(parse_int(fields[1], text));
  if (name == "max-degree-ball" && arity == 2) {
    return max_degree_ball(parse_int(fields[1], text), parse_int(fields[2], text));
  }
  if (name == "component-infinite" && arity == 0) return component_infinite();
  throw Error(ErrorCode::SpecParse, "unknown property '" + std::string(text) + "'");
}

std::optional<int> LocalProperty::radius() const {
  switch (kind_) {
    case Kind::ComponentSizeExactly: return a_;
    case Kind::ComponentSizeAtLeast: return a_ - 1;
    case Kind::RootDegree: return 1;
    case Kind::MaxDegreeBall: return b_ + 1;
    case Kind::ComponentInfinite: return std::nullopt;
    case Kind::Conjunction: {
      int r = 0;
      for (const auto& part : parts_) {
        const auto pr = part.radius();
        if (!pr) return std::nullopt;
        r = std::max(r, *pr);
      }
      return r;
    }
  }
  return std::nullopt;
}

std::optional<int> LocalProperty::ball_radius_with_census() const {
  switch (kind_) {
    case Kind::ComponentSizeExactly:
    case Kind::ComponentSizeAtLeast: return 0;
    case Kind::Conjunction: {
      int r = 0;
      for (const auto& part : parts_) {
        const auto pr = part.ball_radius_with_census();
        if (!pr) return std::nullopt;
        r = std::max(r, *pr);
      }
      return r;
    }
    default: return radius();
  }
}

bool LocalProperty::uses_component_size() const {
  switch (kind_) {
    case Kind::ComponentSizeExactly:
    case Kind::ComponentSizeAtLeast: return true;
    case Kind::Conjunction:
      return std::any_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.uses_component_size(); });
    default: return false;
  }
}

std::string LocalProperty::to_string() const {
  switch (kind_) {
    case Kind::ComponentSizeExactly: return "component-size:" + std::to_string(a_);
    case Kind::ComponentSizeAtLeast: return "component-at-least:" + std::to_string(a_);
    case Kind::RootDegree: return "root-degree:" + std::to_string(a_);
    case Kind::MaxDegreeBall: return "max-degree-ball:" + std::to_string(a_) + ":" + std::to_string(b_);
    case Kind::ComponentInfinite: return "component-infinite";
    case Kind::Conjunction: {
      std::string s;
      for (const auto& part : parts_) s += (s.empty() ? "" : "+") + part.to_string();
      return s;
    }
  }
  return {};
}

namespace {

bool evaluate_checked(const RootedNeighborhood& ball, const LocalProperty& p, const ComponentCensus* census) {
  using Kind = LocalProperty::Kind;
  switch (p.kind()) {
    case Kind::ComponentSizeExactly: {
      const auto k = static_cast<std::uint64_t>(p.first());
      if (census) return census->size_of(ball.root) == k;
      return ball.count_within(p.first()) == k;
    }
    case Kind::ComponentSizeAtLeast: {
      const auto k = static_cast<std::uint64_t>(p.first());
      if (census) return census->size_of(ball.root) >= k;
      return ball.count_within(p.first() - 1) >= k;
    }
    case Kind::RootDegree: return ball.degree[0] == p.first();
    case Kind::MaxDegreeBall:
      for (std::size_t i = 0; i < ball.size(); ++i) {
        if (ball.distance[i] <= p.second() && ball.degree[i] > p.first()) return false;
      }
      return true;
    case Kind::Conjunction:
      return std::all_of(p.parts().begin(), p.parts().end(),
                         [&](const auto& part) { return evaluate_checked(ball, part, census); });
    case Kind::ComponentInfinite: break;
  }
  throw Error(ErrorCode::UnboundedRadius, "property has no finite radius");
}

}  // namespace

bool evaluate_property(const RootedNeighborhood& ball, const LocalProperty& property,
                       const ComponentCensus* census) {
  const auto needed = census ? property.ball_radius_with_census() : property.radius();
  if (!needed) throw Error(ErrorCode::UnboundedRadius, property.to_string() + " has no finite radius");
  if (ball.depth < *needed) {
    throw Error(ErrorCode::InsufficientRadius, property.to_string() + " needs radius " + std::to_string(*needed) +
                                                   ", ball has depth " + std::to_string(ball.depth));
  }
  return evaluate_checked(ball, property, census);
}

}  // namespace cmlab
