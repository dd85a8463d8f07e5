#include "kast/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kast {

using nlohmann::json;

std::string graph_to_json(const EmbeddedGraph& g, int indent) {
  json doc;
  doc["format_version"] = 1;
  doc["surface"] = surface_name(g.surface);
  json vs = json::array();
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const Vertex& x = g.vertices[v];
    json o = {{"id", v}, {"kind", kind_name(x.kind)}, {"color", color_name(x.color)}};
    if (!x.label.empty()) o["label"] = x.label;
    if (x.has_position) o["position"] = {x.x, x.y};
    vs.push_back(o);
  }
  doc["vertices"] = vs;
  json es = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& x = g.edges[e];
    es.push_back({{"id", e}, {"u", x.u}, {"v", x.v}, {"weight", x.weight.str()},
                  {"sign", x.sign}, {"orientation", x.orientation}});
  }
  doc["edges"] = es;
  json fs = json::array();
  for (const auto& f : g.faces) {
    json ids = json::array(), fwd = json::array();
    for (Dart d : f.darts) {
      ids.push_back(dart_edge(d));
      fwd.push_back(dart_forward(d));
    }
    fs.push_back({{"edges", ids}, {"forward", fwd}});
  }
  doc["faces"] = fs;
  if (g.infinite_faces.size() == 1) doc["infinite_face"] = g.infinite_faces[0];
  else if (g.infinite_faces.empty()) doc["infinite_face"] = nullptr;
  else doc["infinite_face"] = g.infinite_faces;
  return doc.dump(indent);
}

EmbeddedGraph graph_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  try {
    if (doc.value("format_version", 1) != 1) throw std::invalid_argument("unsupported graph format_version");
    EmbeddedGraph g;
    g.surface = parse_surface(doc.value("surface", "sphere"));
    const auto& vs = doc.at("vertices");
    g.vertices.resize(vs.size());
    for (const auto& o : vs) {
      size_t id = o.at("id").get<size_t>();
      if (id >= vs.size()) throw std::invalid_argument("vertex id out of range");
      Vertex& x = g.vertices[id];
      x.kind = parse_kind(o.value("kind", "monogamous"));
      x.color = parse_color(o.value("color", "none"));
      x.label = o.value("label", "");
      if (o.contains("position")) {
        x.has_position = true;
        x.x = o["position"].at(0).get<double>();
        x.y = o["position"].at(1).get<double>();
      }
    }
    const auto& es = doc.at("edges");
    g.edges.resize(es.size());
    for (const auto& o : es) {
      size_t id = o.at("id").get<size_t>();
      if (id >= es.size()) throw std::invalid_argument("edge id out of range");
      Edge& x = g.edges[id];
      x.u = o.at("u").get<size_t>();
      x.v = o.at("v").get<size_t>();
      if (x.u >= g.vertices.size() || x.v >= g.vertices.size())
        throw std::invalid_argument("edge endpoint out of range");
      x.weight = o.contains("weight") ? LaurentPoly::parse(o["weight"].get<std::string>()) : LaurentPoly(1);
      x.sign = o.value("sign", 0);
      x.orientation = o.value("orientation", 0);
    }
    for (const auto& o : doc.value("faces", json::array())) {
      const auto& ids = o.at("edges");
      const auto& fwd = o.at("forward");
      if (ids.size() != fwd.size()) throw std::invalid_argument("face edges and forward flags differ in length");
      Face f;
      for (size_t i = 0; i < ids.size(); ++i) {
        size_t e = ids[i].get<size_t>();
        if (e >= g.edges.size()) throw std::invalid_argument("face names a missing edge");
        f.darts.push_back(make_dart(e, fwd[i].get<bool>()));
      }
      g.faces.push_back(std::move(f));
    }
    if (doc.contains("infinite_face") && !doc["infinite_face"].is_null()) {
      const auto& inf = doc["infinite_face"];
      if (inf.is_array()) {
        for (const auto& f : inf) g.infinite_faces.push_back(f.get<size_t>());
      } else {
        g.infinite_faces.push_back(inf.get<size_t>());
      }
    }
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return graph_from_json(ss.str());
}

}  // namespace kast
