#include <fstream>
#include <sstream>

#include "matpart/cli.hpp"
#include "matpart/limits.hpp"
#include "matpart/oracle.hpp"

namespace matpart::cli {

namespace {

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void expect_object(const Json& j, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw DocumentError(path.empty() ? "document" : path, "expected an object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed) known = known || item.key() == key;
    if (!known) throw DocumentError(at(path, item.key()), "unknown field");
  }
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(at(path, key), "missing field");
  return *it;
}

const Json& require_array(const Json& obj, const std::string& path, const char* key) {
  const Json& j = require(obj, path, key);
  if (!j.is_array()) throw DocumentError(at(path, key), "expected a list");
  return j;
}

std::size_t as_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw DocumentError(path, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

Element as_element(const Json& j, const std::string& path, const GroundSet& ground) {
  if (!j.is_string()) throw DocumentError(path, "expected an element label");
  const auto e = ground.find(j.get<std::string>());
  if (!e) throw DocumentError(path, "unknown element '" + j.get<std::string>() + "'");
  return *e;
}

ElementSet as_set(const Json& j, const std::string& path, const GroundSet& ground) {
  if (!j.is_array()) throw DocumentError(path, "expected a list of element labels");
  ElementSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Element e = as_element(j[i], at(path, i), ground);
    if (s.contains(e)) throw DocumentError(at(path, i), "element listed twice");
    s.insert(e);
  }
  return s;
}

GroundSet parse_ground(const Json& doc) {
  const Json& g = require_array(doc, "", "ground");
  if (g.size() > ElementSet::kMaxElements) {
    throw DocumentError("ground", "at most 64 elements are supported");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!g[i].is_string()) throw DocumentError(at("ground", i), "expected a string label");
    labels.push_back(g[i].get<std::string>());
  }
  try {
    return GroundSet(std::move(labels));
  } catch (const ValidationError& e) {
    throw DocumentError("ground", e.what());
  }
}

std::vector<CapacitySet> parse_capacity_sets(const Json& list, const std::string& path,
                                             const GroundSet& ground) {
  std::vector<CapacitySet> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = at(path, i);
    expect_object(list[i], p, {"elements", "cap"});
    out.push_back({as_set(require(list[i], p, "elements"), at(p, "elements"), ground),
                   as_count(require(list[i], p, "cap"), at(p, "cap"))});
  }
  return out;
}

template <class Build>
auto wrap(const std::string& path, Build&& build) {
  try {
    return build();
  } catch (const DocumentError&) {
    throw;
  } catch (const ValidationError& e) {
    throw DocumentError(path, e.what());
  }
}

LoadedMatroid parse_matroid(const Json& j, const std::string& path, const GroundSet& ground) {
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  const Json& kind_json = require(j, path, "kind");
  if (!kind_json.is_string()) throw DocumentError(at(path, "kind"), "expected a string");
  const std::string kind = kind_json.get<std::string>();
  const std::size_t n = ground.size();
  const ElementSet all = ground.all();
  LoadedMatroid out;
  out.kind = kind;

  if (kind == "laminar" || kind == "partition") {
    const char* key = kind == "laminar" ? "sets" : "blocks";
    expect_object(j, path, {"kind", key});
    const auto sets = parse_capacity_sets(require_array(j, path, key), at(path, key), ground);
    out.laminar = wrap(at(path, key), [&] {
      return kind == "laminar" ? LaminarDescription(n, all, sets)
                               : partition_matroid(n, all, sets);
    });
    out.matroid = make_laminar(*out.laminar);
  } else if (kind == "transversal") {
    expect_object(j, path, {"kind", "right_size", "edges"});
    BipartiteGraph g;
    g.left_size = n;
    g.right_size = as_count(require(j, path, "right_size"), at(path, "right_size"));
    const Json& edges = require_array(j, path, "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string p = at(at(path, "edges"), i);
      if (!edges[i].is_array() || edges[i].size() != 2) {
        throw DocumentError(p, "expected [element, right vertex]");
      }
      const Element e = as_element(edges[i][0], at(p, 0), ground);
      const std::size_t f = as_count(edges[i][1], at(p, 1));
      if (f >= g.right_size) throw DocumentError(at(p, 1), "right vertex out of range");
      for (const auto& prev : g.edges) {
        if (prev == std::pair{e, f}) throw DocumentError(p, "duplicate edge");
      }
      g.edges.emplace_back(e, f);
    }
    out.matroid = std::make_shared<TransversalMatroid>(std::move(g));
  } else if (kind == "graphic") {
    expect_object(j, path, {"kind", "vertex_count", "edges"});
    Multigraph g;
    g.vertex_count = as_count(require(j, path, "vertex_count"), at(path, "vertex_count"));
    const Json& edges = require_array(j, path, "edges");
    if (edges.size() != n) {
      throw DocumentError(at(path, "edges"), "expected one [u, v] pair per ground element");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string p = at(at(path, "edges"), i);
      if (!edges[i].is_array() || edges[i].size() != 2) throw DocumentError(p, "expected [u, v]");
      const std::size_t u = as_count(edges[i][0], at(p, 0));
      const std::size_t v = as_count(edges[i][1], at(p, 1));
      if (u >= g.vertex_count || v >= g.vertex_count) {
        throw DocumentError(p, "vertex out of range");
      }
      g.edges.emplace_back(u, v);
    }
    out.matroid = std::make_shared<GraphicMatroid>(std::move(g));
  } else if (kind == "uniform") {
    expect_object(j, path, {"kind", "rank"});
    out.matroid =
        std::make_shared<UniformMatroid>(n, as_count(require(j, path, "rank"), at(path, "rank")));
  } else if (kind == "explicit") {
    expect_object(j, path, {"kind", "independent_sets", "bases"});
    const bool by_bases = j.contains("bases");
    if (by_bases == j.contains("independent_sets")) {
      throw DocumentError(path, "give exactly one of independent_sets and bases");
    }
    const char* key = by_bases ? "bases" : "independent_sets";
    const Json& list = require_array(j, path, key);
    std::vector<ElementSet> family;
    for (std::size_t i = 0; i < list.size(); ++i) {
      family.push_back(as_set(list[i], at(at(path, key), i), ground));
    }
    out.matroid = wrap(at(path, key), [&]() -> MatroidPtr {
      return std::make_shared<ExplicitMatroid>(
          n, all, family,
          by_bases ? ExplicitMatroid::Listing::bases : ExplicitMatroid::Listing::independent_sets);
    });
  } else {
    throw DocumentError(at(path, "kind"), "unknown matroid kind '" + kind + "'");
  }
  return out;
}

Json capacity_sets(const GroundSet& ground, const std::vector<CapacitySet>& sets) {
  Json out = Json::array();
  for (const auto& cs : sets) out.push_back({{"elements", label_list(ground, cs.set)}, {"cap", cs.cap}});
  return out;
}

Json extended(ExtendedInt v) {
  if (v.is_finite()) return v.value();
  return v.to_string();
}

ExtendedInt parse_extended(const Json& j, const std::string& path, bool lower) {
  if (j.is_number_integer()) return ExtendedInt::finite(j.get<std::int64_t>());
  if (j.is_string()) {
    if (lower && j.get<std::string>() == "-inf") return ExtendedInt::minus_infinity();
    if (!lower && j.get<std::string>() == "+inf") return ExtendedInt::plus_infinity();
  }
  throw DocumentError(path, lower ? "expected an integer or \"-inf\""
                                  : "expected an integer or \"+inf\"");
}

}  // namespace

std::string element_label(const GroundSet& ground, Element e) {
  if (e < ground.size()) return ground.label(e);
  return "#pad" + std::to_string(e - ground.size());
}

Json label_list(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  for (Element e : s) out.push_back(element_label(ground, e));
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    const auto colon = msg.find(": ", msg.find("column"));
    if (colon != std::string::npos) msg = msg.substr(colon + 2);
    throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(column),
                        msg);
  }
}

Json read_document(const std::string& path) {
  const std::string prefix = "builtin:";
  if (path.rfind(prefix, 0) == 0) return builtin_instance(path.substr(prefix.size()));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path, "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_json_text(text.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path + ", " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

Instance parse_instance(const Json& doc) {
  expect_object(doc, "", {"ground", "matroids"});
  Instance inst;
  inst.ground = parse_ground(doc);
  const Json& ms = require_array(doc, "", "matroids");
  if (ms.size() != 2) throw DocumentError("matroids", "expected exactly two matroids");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    inst.matroids.push_back(parse_matroid(ms[i], at("matroids", i), inst.ground));
  }
  return inst;
}

std::vector<std::string> builtin_names() { return {"figure1", "k4", "konig-demo"}; }

Json builtin_instance(const std::string& name) {
  if (name == "k4") {
    const K4Instance k4 = k4_instance();
    const auto& g = dynamic_cast<const GraphicMatroid&>(*k4.graphic).graph();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    const auto& lam = dynamic_cast<const LaminarMatroid&>(*k4.matching_partition).description();
    return {{"ground", k4.labels.labels()},
            {"matroids",
             {{{"kind", "graphic"}, {"vertex_count", g.vertex_count}, {"edges", edges}},
              {{"kind", "partition"}, {"blocks", capacity_sets(k4.labels, lam.family())}}}}};
  }
  if (name == "figure1") {
    const Figure1 fig = reconstruct_figure1();
    Json edges = Json::array();
    for (const auto& [e, f] : fig.graph.edges) edges.push_back({fig.labels.label(e), f});
    const Json m = {{"kind", "transversal"}, {"right_size", fig.graph.right_size}, {"edges", edges}};
    return {{"ground", fig.labels.labels()}, {"matroids", {m, m}}};
  }
  if (name == "konig-demo") {
    // Left vertices a, b, c; right vertices x, y, z, w; maximum degree 3.
    const std::vector<std::pair<char, char>> edges{{'a', 'x'}, {'a', 'y'}, {'a', 'z'},
                                                   {'b', 'x'}, {'b', 'w'}, {'c', 'y'},
                                                   {'c', 'z'}, {'c', 'w'}};
    Json ground = Json::array();
    for (const auto& [l, r] : edges) ground.push_back(std::string{l, '-', r});
    auto stars = [&](bool left) {
      Json blocks = Json::array();
      for (char v : left ? std::string("abc") : std::string("xyzw")) {
        Json elems = Json::array();
        for (const auto& [l, r] : edges) {
          if ((left ? l : r) == v) elems.push_back(std::string{l, '-', r});
        }
        blocks.push_back({{"elements", elems}, {"cap", 1}});
      }
      return Json{{"kind", "partition"}, {"blocks", blocks}};
    };
    return {{"ground", ground}, {"matroids", {stars(true), stars(false)}}};
  }
  throw DocumentError("builtin:" + name, "unknown built-in instance");
}

ParamodularPair parse_pair(const Json& doc, GroundSet* ground_out) {
  expect_object(doc, "", {"ground", "entries", "provenance"});
  const GroundSet ground = parse_ground(doc);
  PairProvenance prov = PairProvenance::explicit_table;
  if (doc.contains("provenance")) {
    bool found = false;
    for (PairProvenance p : {PairProvenance::explicit_table, PairProvenance::laminar_pair,
                             PairProvenance::rank_pair}) {
      if (doc["provenance"] == to_string(p)) {
        prov = p;
        found = true;
      }
    }
    if (!found) throw DocumentError("provenance", "unknown provenance");
  }
  const Json& list = require_array(doc, "", "entries");
  std::vector<PairEntry> entries;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string p = at("entries", i);
    expect_object(list[i], p, {"set", "p", "b"});
    entries.push_back({as_set(require(list[i], p, "set"), at(p, "set"), ground),
                       parse_extended(require(list[i], p, "p"), at(p, "p"), true),
                       parse_extended(require(list[i], p, "b"), at(p, "b"), false)});
  }
  if (ground_out != nullptr) *ground_out = ground;
  return wrap("entries", [&] {
    return ParamodularPair::finite_family(ground.size(), ground.all(), std::move(entries), prov);
  });
}

Json pair_document(const ParamodularPair& pair, const GroundSet& ground) {
  Json entries = Json::array();
  auto emit = [&](ElementSet a) {
    entries.push_back(
        {{"set", label_list(ground, a)}, {"p", extended(pair.p(a))}, {"b", extended(pair.b(a))}});
  };
  if (pair.oracle_backed()) {
    if (pair.ground().size() > limits().pair_check) {
      throw CapacityError("rank pair export tabulates 2^|E| sets; |E| = " +
                          std::to_string(pair.ground().size()) + " exceeds the pair threshold");
    }
    for_each_subset(pair.ground(), emit);
  } else {
    for (const auto& e : pair.entries()) emit(e.set);
  }
  return {{"ground", ground.labels()},
          {"provenance", to_string(pair.provenance())},
          {"entries", entries}};
}

std::vector<ElementSet> parse_family(const Json& doc, GroundSet* ground_out) {
  expect_object(doc, "", {"ground", "family"});
  const GroundSet ground = parse_ground(doc);
  const Json& list = require_array(doc, "", "family");
  std::vector<ElementSet> family;
  for (std::size_t i = 0; i < list.size(); ++i) {
    family.push_back(as_set(list[i], at("family", i), ground));
  }
  if (ground_out != nullptr) *ground_out = ground;
  return family;
}

Json report_document(const AxiomReport& report, const GroundSet& ground) {
  constexpr std::size_t kListed = 200;
  Json violations = Json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < kListed; ++i) {
    const Violation& v = report.violations[i];
    Json sets = Json::array();
    for (ElementSet s : v.sets) sets.push_back(label_list(ground, s));
    Json elems = Json::array();
    for (Element e : v.elements) elems.push_back(element_label(ground, e));
    violations.push_back({{"axiom", v.axiom}, {"sets", sets}, {"elements", elems}});
  }
  return {{"passed", report.passed()},
          {"violation_count", report.violation_count},
          {"violations", violations},
          {"truncated", report.violation_count > violations.size()},
          {"notes", report.notes}};
}

}  // namespace matpart::cli
