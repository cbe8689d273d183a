// Copyright 2026 The af2 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON and DOT serialization. Output is canonical: vertices and edges are
// sorted by their printed names, object keys are sorted, and every document
// carries a schema tag, so export-import-export is byte-identical.

#ifndef AF2_IO_HPP_
#define AF2_IO_HPP_

#include <algorithm>
#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "af2/block.hpp"
#include "af2/farey.hpp"
#include "af2/model.hpp"

namespace af2 {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kBlockSchema = "af2.block";
inline constexpr const char* kFareySchema = "af2.farey";
inline constexpr const char* kStructureSchema = "af2.structure";
inline constexpr const char* kReportSchema = "af2.report";

enum class Format { kJson, kDot };

inline std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

namespace internal {

inline Json SchemaTag(const char* name) { return Json{{"name", name}, {"version", kSchemaVersion}}; }

inline void ExpectSchema(const Json& j, const char* name) {
  if (!j.contains("schema") || j["schema"].value("name", "") != name ||
      j["schema"].value("version", -1) != kSchemaVersion)
    throw Error(ErrorKind::kIo, std::string("expected schema ") + name + " v" +
                                    std::to_string(kSchemaVersion));
}

using NamePair = std::array<std::string, 2>;

inline NamePair Names(const VertexPair& p) {
  return {p.first.ToString(), p.second.ToString()};
}

inline Json SortedPairs(const std::set<VertexPair>& s) {
  std::vector<NamePair> out;
  for (const auto& p : s) out.push_back(Names(p));
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexPair PairFrom(const Json& j) {
  return SortedPair(ParseVertex(j.at(0).get<std::string>()),
                    ParseVertex(j.at(1).get<std::string>()));
}

inline std::string Quote(const std::string& s) { return "\"" + s + "\""; }

inline Json WordOrNull(const Word& w, bool present) {
  return present ? Json(w.ToString()) : Json(nullptr);
}

}  // namespace internal

// ---------------------------------------------------------------------------
// Blocks.

inline Json ToJson(const BlockGraph& g) {
  Json j;
  j["schema"] = internal::SchemaTag(kBlockSchema);
  j["origin"] = internal::Names(g.origin);
  j["level"] = g.level;
  std::vector<std::pair<std::string, int>> vs;
  for (const auto& [v, b] : g.birth) vs.push_back({v.ToString(), b});
  std::sort(vs.begin(), vs.end());
  j["vertices"] = Json::array();
  for (const auto& [name, b] : vs) j["vertices"].push_back({{"name", name}, {"birth", b}});
  j["e_edges"] = internal::SortedPairs(g.e_edges);
  j["c_edges"] = internal::SortedPairs(g.c_edges);
  j["par"] = internal::SortedPairs(g.par);
  std::vector<std::array<std::string, 3>> orth;
  for (const auto& [p, w] : g.orth) orth.push_back({p.first.ToString(), p.second.ToString(), w.ToString()});
  std::sort(orth.begin(), orth.end());
  j["orth"] = orth;
  return j;
}

inline BlockGraph BlockFromJson(const Json& j) {
  internal::ExpectSchema(j, kBlockSchema);
  try {
    BlockGraph g;
    g.origin = {ParseVertex(j.at("origin").at(0).get<std::string>()),
                ParseVertex(j.at("origin").at(1).get<std::string>())};
    g.level = j.at("level").get<int>();
    for (const Json& v : j.at("vertices"))
      g.birth.emplace(ParseVertex(v.at("name").get<std::string>()), v.at("birth").get<int>());
    for (const Json& p : j.at("e_edges")) g.e_edges.insert(internal::PairFrom(p));
    for (const Json& p : j.at("c_edges")) g.c_edges.insert(internal::PairFrom(p));
    for (const Json& p : j.at("par")) g.par.insert(internal::PairFrom(p));
    for (const Json& p : j.at("orth"))
      g.orth.emplace(internal::PairFrom(p), ParseVertex(p.at(2).get<std::string>()));
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kIo, e.what());
  }
}

// E-edges solid, C-edges dashed, the origin edge bold; orth and par pairs are
// dotted with a label.
inline std::string ToDot(const BlockGraph& g) {
  using internal::Quote;
  std::ostringstream out;
  out << "graph block {\n  node [shape=ellipse];\n";
  std::vector<std::string> names;
  for (const auto& [v, b] : g.birth) names.push_back(v.ToString());
  std::sort(names.begin(), names.end());
  for (const std::string& n : names) out << "  " << Quote(n) << ";\n";
  const auto origin = internal::Names(SortedPair(g.origin.first, g.origin.second));
  auto emit = [&](const Json& pairs, const std::string& attrs, bool mark_origin) {
    for (const Json& p : pairs) {
      const std::string u = p.at(0).get<std::string>();
      const std::string v = p.at(1).get<std::string>();
      std::string a = attrs;
      if (mark_origin && internal::NamePair{u, v} == origin) a += ", penwidth=3";
      out << "  " << Quote(u) << " -- " << Quote(v) << " [" << a << "];\n";
    }
  };
  emit(internal::SortedPairs(g.e_edges), "style=solid", true);
  emit(internal::SortedPairs(g.c_edges), "style=dashed", false);
  std::set<VertexPair> orth;
  for (const auto& [p, w] : g.orth) orth.insert(p);
  emit(internal::SortedPairs(orth), "style=dotted, label=\"orth\"", false);
  emit(internal::SortedPairs(g.par), "style=dotted, label=\"par\"", false);
  out << "}\n";
  return out.str();
}

// A block transcribed as a listing: an alias table for the base letters, the
// origin, the level-1 sticks and C-edges, the level-2 words each with the
// edges it is a stick of and optional extra E- and C-edges, and the
// orthogonal pairs with their witnesses. C-distance-2 pairs that are not
// orthogonal are parallel.
inline BlockGraph BlockFromListing(const Json& j) {
  try {
    std::map<char, std::string> alias;
    for (const auto& [k, v] : j.at("aliases").items()) alias[k.at(0)] = v.get<std::string>();
    auto vertex = [&](const std::string& s) {
      std::string renamed;
      for (char c : s) renamed += alias.count(c) ? alias[c] : std::string(1, c);
      return CanonicalVertex(Word::Parse(renamed));
    };
    BlockGraph g;
    g.level = 2;
    auto edge = [&](const std::string& p, const std::string& q) {
      g.e_edges.insert(SortedPair(vertex(p), vertex(q)));
    };
    const std::string x = j.at("origin").at(0);
    const std::string y = j.at("origin").at(1);
    g.origin = {vertex(x), vertex(y)};
    g.birth.emplace(vertex(x), 0);
    g.birth.emplace(vertex(y), 0);
    edge(x, y);
    for (const Json& s : j.at("level1").at("sticks")) {
      g.birth.emplace(vertex(s), 1);
      edge(s, x);
      edge(s, y);
    }
    for (const Json& c : j.at("level1").at("c_edges"))
      g.c_edges.insert(SortedPair(vertex(c.at(0)), vertex(c.at(1))));
    for (const Json& item : j.at("level2")) {
      const std::string w = item.at("word");
      g.birth.emplace(vertex(w), 2);
      for (const Json& st : item.at("stick_of")) {
        edge(w, st.at(0));
        edge(w, st.at(1));
      }
      if (item.contains("e_edge")) edge(w, item.at("e_edge"));
      if (item.contains("c_edge")) g.c_edges.insert(SortedPair(vertex(w), vertex(item.at("c_edge"))));
    }
    for (const Json& o : j.at("orthogonal"))
      g.orth.emplace(SortedPair(vertex(o.at("pair").at(0)), vertex(o.at("pair").at(1))),
                     vertex(o.at("witness")));
    std::map<Vertex, std::set<Vertex>> adj;
    for (const auto& [p, q] : g.c_edges) {
      adj[p].insert(q);
      adj[q].insert(p);
    }
    for (const auto& [mid, ns] : adj)
      for (const Vertex& p : ns)
        for (const Vertex& q : ns)
          if (p < q && !adj[p].count(q) && !g.orth.count(SortedPair(p, q)))
            g.par.insert(SortedPair(p, q));
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kIo, std::string("listing: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Farey graphs. Vertex and edge indices are kept: they are the construction
// order, which is itself canonical.

inline Json ToJson(const FareyGraph& g) {
  Json j;
  j["schema"] = internal::SchemaTag(kFareySchema);
  j["labelled"] = g.labelled;
  j["vertices"] = Json::array();
  for (const FareyVertex& v : g.vertices)
    j["vertices"].push_back({{"level", v.level},
                             {"parent_edge", v.parent_edge},
                             {"label", internal::WordOrNull(v.label, g.labelled)}});
  j["edges"] = Json::array();
  for (const FareyEdge& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"parent", e.parent},
                          {"from_label", internal::WordOrNull(e.from_label, g.labelled)},
                          {"to_label", internal::WordOrNull(e.to_label, g.labelled)}});
  j["boundary"] = g.boundary;
  return j;
}

inline FareyGraph FareyFromJson(const Json& j) {
  internal::ExpectSchema(j, kFareySchema);
  auto word = [](const Json& w) { return w.is_null() ? Word() : Word::Parse(w.get<std::string>()); };
  try {
    FareyGraph g;
    g.labelled = j.at("labelled").get<bool>();
    for (const Json& v : j.at("vertices")) {
      FareyVertex fv{v.at("level").get<int>(), v.at("parent_edge").get<int>(), word(v.at("label"))};
      if (fv.level >= static_cast<int>(g.levels.size())) g.levels.resize(fv.level + 1);
      g.levels[fv.level].push_back(static_cast<int>(g.vertices.size()));
      g.vertices.push_back(std::move(fv));
    }
    for (const Json& e : j.at("edges"))
      g.edges.push_back({e.at("from").get<int>(), e.at("to").get<int>(), e.at("parent").get<int>(),
                         word(e.at("from_label")), word(e.at("to_label"))});
    g.boundary = j.at("boundary").get<std::vector<int>>();
    if (g.labelled)
      for (std::size_t i = 0; i < g.vertices.size(); ++i)
        g.by_class.emplace(ProjectWord(g.vertices[i].label), static_cast<int>(i));
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kIo, e.what());
  }
}

// Directed edges in construction orientation; labels shown when present.
inline std::string ToDot(const FareyGraph& g) {
  std::ostringstream out;
  out << "digraph farey {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    out << "  v" << i << " [label=\"";
    if (g.labelled) out << g.vertices[i].label.ToString();
    else out << i;
    out << "\", level=" << g.vertices[i].level << "];\n";
  }
  for (const FareyEdge& e : g.edges) out << "  v" << e.from << " -> v" << e.to << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Admissible structures.

inline Json ToJson(const AdmissibleStructure& m) {
  Json j;
  j["schema"] = internal::SchemaTag(kStructureSchema);
  j["vertex_count"] = m.vertex_count();
  std::vector<const Component*> comps;
  for (const Component& c : m.components()) comps.push_back(&c);
  std::sort(comps.begin(), comps.end(), [](auto* p, auto* q) { return p->id < q->id; });
  j["components"] = Json::array();
  for (const Component* c : comps) {
    std::vector<std::pair<std::string, int>> ids;
    for (const auto& [w, gid] : c->ids) ids.push_back({w.ToString(), gid});
    std::sort(ids.begin(), ids.end());
    Json jc{{"id", c->id}, {"origin", internal::Names(c->origin)}, {"level", c->level}};
    jc["ids"] = Json::array();
    for (const auto& [w, gid] : ids) jc["ids"].push_back({w, gid});
    j["components"].push_back(std::move(jc));
  }
  return j;
}

inline AdmissibleStructure StructureFromJson(const Json& j) {
  internal::ExpectSchema(j, kStructureSchema);
  try {
    AdmissibleStructure m;
    for (const Json& c : j.at("components")) {
      std::map<Vertex, int> glue;
      for (const Json& p : c.at("ids"))
        glue.emplace(ParseVertex(p.at(0).get<std::string>()), p.at(1).get<int>());
      const VertexPair origin{ParseVertex(c.at("origin").at(0).get<std::string>()),
                              ParseVertex(c.at("origin").at(1).get<std::string>())};
      const int level = c.at("level").get<int>();
      const int id = c.at("id").get<int>();
      m.AddComponent(origin, level, glue, id);
      if (m.Find(id)->ids.size() != glue.size())
        throw Error(ErrorKind::kIo, "component " + std::to_string(id) + " ids do not cover its block");
    }
    m.ReserveIdsBelow(j.at("vertex_count").get<int>());
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kIo, e.what());
  }
}

inline std::string ToDot(const AdmissibleStructure& m) {
  const LStructure l = Derive(m);
  std::ostringstream out;
  out << "graph structure {\n";
  for (int v : l.vertices) out << "  v" << v << " [label=" << internal::Quote(l.Name(v)) << "];\n";
  for (const auto& [u, v] : l.e) out << "  v" << u << " -- v" << v << " [style=solid];\n";
  for (const auto& [u, v] : l.c) out << "  v" << u << " -- v" << v << " [style=dashed];\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Files.

inline Format FormatOf(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".json") return Format::kJson;
  if (ext == ".dot") return Format::kDot;
  throw Error(ErrorKind::kIo, "unknown output extension '" + ext + "'");
}

inline void WriteText(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot open " + path);
  f << text;
  if (!f) throw Error(ErrorKind::kIo, "cannot write " + path);
}

inline std::string ReadText(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline Json ReadJson(const std::string& path) {
  try {
    return Json::parse(ReadText(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kIo, path + ": " + e.what());
  }
}

template <class G>
std::string Render(const G& g, Format format) {
  return format == Format::kJson ? Dump(ToJson(g)) : ToDot(g);
}

template <class G>
void Export(const G& g, Format format, const std::string& path) {
  WriteText(path, Render(g, format));
}

}  // namespace af2

#endif  // AF2_IO_HPP_
