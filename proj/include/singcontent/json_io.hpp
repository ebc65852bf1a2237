#pragma once

// File formats:
//   polygon  {"vertices": [[x, y], ...]}   integers (or decimal strings for
//            values beyond 64 bits), any cyclic order
//   rational "p/q" in lowest terms, "p" when q == 1
//   type     "1/r(a,b)"
// plus JSON and Graphviz output for mutation graphs.

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "singcontent/mutation.hpp"

namespace singcontent {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
      throw std::invalid_argument("not an integer: \"" + s + "\"");
    return Integer(s);
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline json point_to_json(const LatticePoint& p) {
  return json::array({integer_to_json(p.x), integer_to_json(p.y)});
}

inline json vertices_to_json(const std::vector<LatticePoint>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(point_to_json(v));
  return arr;
}

inline json polygon_to_json(const FanoPolygon& p) {
  return json{{"vertices", vertices_to_json(p.vertices())}};
}

/// Reads the "vertices" member; other members are ignored so that command
/// output carrying a polygon can be fed back in.
inline std::vector<LatticePoint> vertices_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices"))
    throw std::invalid_argument("polygon JSON must be an object with a \"vertices\" array");
  const json& arr = j.at("vertices");
  if (!arr.is_array()) throw std::invalid_argument("\"vertices\" must be an array");
  std::vector<LatticePoint> out;
  for (const auto& v : arr) {
    if (!v.is_array() || v.size() != 2)
      throw std::invalid_argument("each vertex must be a pair [x, y], got " + v.dump());
    out.push_back({integer_from_json(v[0]), integer_from_json(v[1])});
  }
  return out;
}

inline FanoPolygon polygon_from_json(const json& j) {
  return FanoPolygon::validate(vertices_from_json(j));
}

inline json residue_to_json(const Residue& r) {
  return r ? json(to_string(*r)) : json(nullptr);
}

inline json content_to_json(const PolygonSingularityContent& sc) {
  json basket = json::array();
  for (const auto& s : sc.basket) basket.push_back(to_string(s));
  return json{{"n", integer_to_json(sc.n)}, {"basket", basket}};
}

inline json factor_to_json(const Factor& f) {
  return json{{"h", json::array({integer_to_json(f.h.x), integer_to_json(f.h.y)})},
              {"f", point_to_json(f.f)}};
}

inline json weights_to_json(const std::optional<WpsWeights>& w) {
  if (!w) return nullptr;
  return json{{"weights", json::array({integer_to_json(w->weights[0]),
                                       integer_to_json(w->weights[1]),
                                       integer_to_json(w->weights[2])})},
              {"index", integer_to_json(w->index)}};
}

inline json graph_to_json(const MutationGraph& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& node = g.nodes[i];
    nodes.push_back({{"id", i},
                     {"depth", node.depth},
                     {"vertices", vertices_to_json(node.polygon.vertices())},
                     {"normal_form", vertices_to_json(node.form.vertices)},
                     {"content", content_to_json(singularity_content(node.polygon))},
                     {"degree", to_string(degree(node.polygon))},
                     {"weights", weights_to_json(wps_weights(node.polygon))}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    json item = factor_to_json(e.factor);
    item["source"] = e.from;
    item["target"] = e.to;
    item["mutated_node"] = e.discovered_from;
    edges.push_back(std::move(item));
  }
  return json{{"schema", kSchemaVersion},
              {"content", content_to_json(g.content)},
              {"degree", to_string(g.degree)},
              {"max_depth", g.max_depth},
              {"truncated", g.truncated},
              {"nodes", nodes},
              {"edges", edges}};
}

inline std::string graph_to_dot(const MutationGraph& g) {
  std::ostringstream os;
  os << "graph mutations {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"";
    if (auto w = wps_weights(g.nodes[i].polygon)) {
      os << "P(" << w->weights[0] << "," << w->weights[1] << "," << w->weights[2] << ")";
      if (w->index != 1) os << "/" << w->index;
    } else {
      os << g.nodes[i].polygon.size() << "-gon #" << i;
    }
    os << "\\ndepth " << g.nodes[i].depth << "\"];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -- n" << e.to << " [label=\"h=(" << e.factor.h.x << ","
       << e.factor.h.y << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace singcontent
