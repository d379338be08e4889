#include "nhq/quiver.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nhq/error.hpp"

namespace nhq {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; };
  if (!alpha(name[0])) return false;
  for (char c : name) {
    if (!alpha(c) && !(c >= '0' && c <= '9')) return false;
  }
  return true;
}

bool valid_vertex_name(const std::string& name) {
  if (name.empty()) return false;
  return valid_identifier(name) || valid_identifier("_" + name);
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices_[i] == vertices_[j]) throw ParseError("duplicate vertex '" + vertices_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].source >= vertices_.size() || arrows_[i].target >= vertices_.size()) {
      throw ParseError("arrow '" + arrows_[i].name + "' has an unknown endpoint");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (arrows_[i].name == arrows_[j].name) throw ParseError("duplicate arrow '" + arrows_[i].name + "'");
    }
  }
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw ParseError("unknown vertex '" + name + "'");
  return *v;
}

std::vector<Letter> Quiver::letters() const {
  std::vector<Letter> out;
  for (std::uint32_t a = 0; a < arrows_.size(); ++a) {
    out.push_back({a, false});
    out.push_back({a, true});
  }
  return out;
}

bool Quiver::composable(const Word& w) const {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (source(w[k]) != target(w[k + 1])) return false;
  }
  return true;
}

bool Quiver::cyclically_composable(const Word& w) const {
  return !w.empty() && composable(w) && source(w.back()) == target(w.front());
}

Path Path::from_word(const Quiver& q, Word w) {
  if (w.empty()) throw CompositionError("empty word has no vertex");
  if (!q.composable(w)) throw CompositionError("letters are not composable");
  std::size_t t = q.target(w.front());
  return {std::move(w), t};
}

std::size_t path_source(const Quiver& q, const Path& p) {
  return p.is_trivial() ? p.vertex : q.source(p.letters.back());
}

std::size_t path_target(const Quiver& q, const Path& p) {
  return p.is_trivial() ? p.vertex : q.target(p.letters.front());
}

bool is_closed(const Quiver& q, const Path& p) { return path_source(q, p) == path_target(q, p); }

std::optional<Path> concat(const Quiver& q, const Path& p, const Path& r) {
  if (path_source(q, p) != path_target(q, r)) return std::nullopt;
  if (p.is_trivial()) return r;
  if (r.is_trivial()) return p;
  Path out = p;
  out.letters.insert(out.letters.end(), r.letters.begin(), r.letters.end());
  return out;
}

PathAlgebraElement path_element(const QuiverPtr& q, const Path& p, const HBarPolynomial& c) {
  return PathAlgebraElement(q, p, c);
}

PathAlgebraElement letter_element(const QuiverPtr& q, Letter l) {
  return PathAlgebraElement(q, Path{{l}, q->target(l)});
}

PathAlgebraElement unit_element(const QuiverPtr& q) {
  PathAlgebraElement out(q);
  for (std::size_t v = 0; v < q->num_vertices(); ++v) out.add(Path::trivial(v), 1);
  return out;
}

PathAlgebraElement path_mul(const PathAlgebraElement& x, const PathAlgebraElement& y) {
  x.require_same_context(y);
  PathAlgebraElement out(x.context() ? x.context() : y.context());
  if (!out.context()) return out;
  const Quiver& q = *out.context();
  for (const auto& [p, c] : x.terms()) {
    for (const auto& [r, d] : y.terms()) {
      if (auto pr = concat(q, p, r)) out.add(*pr, c * d);
    }
  }
  return out;
}

namespace {

std::string require_string(const nlohmann::json& j, const std::string& location) {
  if (!j.is_string()) throw ParseError("expected a string", location);
  return j.get<std::string>();
}

}  // namespace

QuiverPtr parse_quiver(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("quiver description must be an object", "document");
  for (const auto& [key, _] : doc.items()) {
    if (key != "vertices" && key != "arrows") throw ParseError("unexpected field '" + key + "'", key);
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("missing list 'vertices'", "vertices");
  }
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    std::string loc = "vertices[" + std::to_string(i) + "]";
    std::string name = require_string(doc["vertices"][i], loc);
    if (!valid_vertex_name(name)) throw ParseError("invalid vertex name '" + name + "'", loc);
    for (const auto& seen : vertices) {
      if (seen == name) throw ParseError("duplicate vertex '" + name + "'", loc);
    }
    vertices.push_back(name);
  }
  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    if (!doc["arrows"].is_array()) throw ParseError("'arrows' must be a list", "arrows");
    for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
      std::string loc = "arrows[" + std::to_string(i) + "]";
      const auto& rec = doc["arrows"][i];
      if (!rec.is_object()) throw ParseError("arrow must be an object", loc);
      for (const auto& [key, _] : rec.items()) {
        if (key != "name" && key != "from" && key != "to") {
          throw ParseError("unexpected field '" + key + "'", loc + "." + key);
        }
      }
      for (const char* key : {"name", "from", "to"}) {
        if (!rec.contains(key)) throw ParseError(std::string("missing field '") + key + "'", loc);
      }
      Arrow a;
      a.name = require_string(rec["name"], loc + ".name");
      if (!valid_identifier(a.name)) throw ParseError("invalid arrow name '" + a.name + "'", loc + ".name");
      if (a.name == "h") throw ParseError("'h' is reserved for hbar", loc + ".name");
      for (const auto& seen : arrows) {
        if (seen.name == a.name) throw ParseError("duplicate arrow '" + a.name + "'", loc + ".name");
      }
      auto endpoint = [&](const char* key) {
        std::string v = require_string(rec[key], loc + "." + key);
        for (std::size_t k = 0; k < vertices.size(); ++k) {
          if (vertices[k] == v) return k;
        }
        throw ParseError("unknown vertex '" + v + "'", loc + "." + key);
      };
      a.source = endpoint("from");
      a.target = endpoint("to");
      arrows.push_back(std::move(a));
    }
  }
  return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
}

QuiverPtr load_quiver(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open quiver file", filename);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), filename);
  }
}

std::string serialize_quiver(const Quiver& q) {
  nlohmann::ordered_json doc;
  doc["vertices"] = q.vertices();
  doc["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : q.arrows()) {
    nlohmann::ordered_json rec;
    rec["name"] = a.name;
    rec["from"] = q.vertex_name(a.source);
    rec["to"] = q.vertex_name(a.target);
    doc["arrows"].push_back(rec);
  }
  return doc.dump();
}

}  // namespace nhq
