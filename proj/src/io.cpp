#include "cmlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cmlab/error.hpp"

namespace cmlab {

Distribution distribution_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("masses") || !doc["masses"].is_array()) {
    throw Error(ErrorCode::SpecParse, "distribution spec needs a \"masses\" array");
  }
  std::vector<Distribution::Mass> masses;
  for (const auto& entry : doc["masses"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() || !entry[1].is_number()) {
      throw Error(ErrorCode::SpecParse, "each mass must be [integer value, probability], got " + entry.dump());
    }
    masses.emplace_back(entry[0].get<std::int64_t>(), entry[1].get<double>());
  }
  return Distribution(std::move(masses));
}

Distribution read_distribution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SpecParse, "cannot open " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SpecParse, path.string() + ": " + e.what());
  }
  return distribution_from_json(doc);
}

Json to_json(const Distribution& d) {
  Json masses = Json::array();
  for (const auto& [value, prob] : d.masses()) masses.push_back({value, prob});
  return Json{{"masses", masses}};
}

DegreeSequence read_degree_sequence(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<int> degrees;
  if (first != std::string::npos && text[first] == '[') {
    try {
      degrees = Json::parse(text).get<std::vector<int>>();
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::SpecParse, std::string("degree sequence: ") + e.what());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      const auto start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      std::istringstream field(line);
      int d = 0;
      std::string rest;
      if (!(field >> d) || (field >> rest)) throw Error(ErrorCode::SpecParse, "bad degree line '" + line + "'");
      degrees.push_back(d);
    }
  }
  return DegreeSequence(std::move(degrees));
}

void write_degree_sequence(std::ostream& out, const DegreeSequence& ds, bool as_json) {
  if (as_json) {
    out << Json(ds.degrees()).dump() << '\n';
    return;
  }
  for (const int d : ds.degrees()) out << d << '\n';
}

MultiGraph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  bool declared = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::istringstream fields(line.substr(start));
    if (line[start] == '#') {
      std::string hash, key;
      std::size_t value = 0;
      if (fields >> hash >> key >> value && key == "vertices") {
        n = value;
        declared = true;
      }
      continue;
    }
    long long u = -1, v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw Error(ErrorCode::SpecParse, "bad edge line '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!declared) n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return MultiGraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  out << "# vertices " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Json census_to_json(const ComponentCensus& census) {
  std::map<std::uint64_t, std::uint64_t> by_size;
  for (const auto s : census.sizes()) by_size[s] += s;
  Json counts = Json::object();
  for (const auto& [k, total] : by_size) counts[std::to_string(k)] = total;
  return Json{{"sizes", census.sizes()},
              {"N_k", counts},
              {"L1", census.largest()},
              {"L2", census.second_largest()}};
}

}  // namespace cmlab
