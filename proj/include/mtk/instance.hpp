// Copyright 2023 The Authors.
//
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

#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mtk/complex.hpp"
#include "mtk/core.hpp"
#include "mtk/hypergraph.hpp"
#include "mtk/matroid.hpp"

namespace mtk {

struct Instance {
  std::optional<Hypergraph> hypergraph;
  std::optional<Complex> complex;
  std::optional<MatroidSystem> matroids;
  std::optional<RatVec> w;
  std::optional<RatVec> h;
  std::string provenance;
  nlohmann::json annotations = nlohmann::json::object();
};

namespace detail {

using nlohmann::json;

inline json sets_to_json(const std::vector<SubsetMask>& sets) {
  json out = json::array();
  for (SubsetMask s : sets) out.push_back(s.elements());
  return out;
}

inline json ratvec_to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

inline json matroid_to_json(const Matroid& m) {
  json j;
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      j["kind"] = "uniform";
      j["n"] = m.n();
      j["rank"] = m.uniform_rank();
      break;
    case Matroid::Kind::kGenPartition:
      j["kind"] = "gen_partition";
      j["parts"] = sets_to_json(m.parts());
      j["caps"] = m.caps();
      if (m.n() == 0 || m.parts().empty()) j["n"] = m.n();
      break;
    case Matroid::Kind::kGraphic: {
      j["kind"] = "graphic";
      j["vertices"] = m.graph_vertices();
      json edges = json::array();
      for (auto [a, b] : m.graph_edges()) edges.push_back({a, b});
      j["edges"] = edges;
      break;
    }
    case Matroid::Kind::kExplicit:
      j["kind"] = "explicit";
      j["n"] = m.n();
      j["maximal"] = sets_to_json(m.explicit_bases().maximal_faces());
      break;
    default: {
      // derived kinds are written out by their bases
      j["kind"] = "explicit";
      j["n"] = m.n();
      j["maximal"] = sets_to_json(as_complex(m).maximal_faces());
      break;
    }
  }
  return j;
}

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

template <class T>
T get_field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, "missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(where + "." + key, e.what());
  }
}

inline std::vector<SubsetMask> sets_from_json(const json& j, int n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of arrays");
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(w, "expected an array of vertex indices");
    SubsetMask s;
    for (const auto& v : j[i]) {
      if (!v.is_number_integer()) fail(w, "vertex index must be an integer");
      int x = v.get<int>();
      if (x < 0 || (n >= 0 && x >= n) || x >= kMaxGround) {
        throw ValidationError(w + ": vertex " + std::to_string(x) + " out of range");
      }
      s = s.with(x);
    }
    out.push_back(s);
  }
  return out;
}

inline RatVec ratvec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rationals");
  RatVec out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string w = where + "[" + std::to_string(i) + "]";
    if (j[i].is_string()) {
      try {
        out.push_back(parse_rational(j[i].get<std::string>()));
      } catch (const ParseError& e) {
        fail(w, e.what());
      }
    } else if (j[i].is_number_integer()) {
      out.push_back(Rational(j[i].get<long>()));
    } else {
      fail(w, "rational must be a \"p/q\" string");
    }
  }
  return out;
}

inline Matroid matroid_from_json(const json& j, const std::string& where) {
  std::string kind = get_field<std::string>(j, "kind", where);
  if (kind == "uniform") {
    return Matroid::uniform(get_field<int>(j, "n", where), get_field<int>(j, "rank", where));
  }
  if (kind == "gen_partition") {
    if (!j.contains("parts")) fail(where, "missing field 'parts'");
    auto parts = sets_from_json(j.at("parts"), -1, where + ".parts");
    auto caps = get_field<std::vector<int>>(j, "caps", where);
    int n = 0;
    for (SubsetMask p : parts) n = std::max(n, p.highest() + 1);
    if (j.contains("n")) n = get_field<int>(j, "n", where);
    return Matroid::gen_partition(n, parts, caps);
  }
  if (kind == "graphic") {
    int verts = get_field<int>(j, "vertices", where);
    auto edges = get_field<std::vector<std::vector<int>>>(j, "edges", where);
    std::vector<std::pair<int, int>> es;
    for (const auto& e : edges) {
      if (e.size() != 2) throw ValidationError(where + ": graphic edge needs two endpoints");
      es.push_back({e[0], e[1]});
    }
    return Matroid::graphic(verts, es);
  }
  if (kind == "explicit") {
    int n = get_field<int>(j, "n", where);
    if (!j.contains("maximal")) fail(where, "missing field 'maximal'");
    auto sets = sets_from_json(j.at("maximal"), n, where + ".maximal");
    return Matroid::from_complex(Complex(n, sets));
  }
  fail(where, "unknown matroid kind '" + kind + "'");
}

}  // namespace detail

inline nlohmann::json instance_to_json(const Instance& inst) {
  using nlohmann::json;
  json j = json::object();
  if (inst.hypergraph) {
    j["hypergraph"] = {{"n", inst.hypergraph->n()},
                       {"edges", detail::sets_to_json(inst.hypergraph->edges())}};
  }
  if (inst.complex) {
    j["complex"] = {{"n", inst.complex->n()},
                    {"maximal_faces", detail::sets_to_json(inst.complex->maximal_faces())}};
  }
  if (inst.matroids) {
    json ms = json::array();
    for (const auto& m : inst.matroids->matroids) ms.push_back(detail::matroid_to_json(m));
    j["matroids"] = ms;
  }
  if (inst.w || inst.h) {
    json wj = json::object();
    if (inst.w) wj["w"] = detail::ratvec_to_json(*inst.w);
    if (inst.h) wj["h"] = detail::ratvec_to_json(*inst.h);
    j["weights"] = wj;
  }
  if (!inst.provenance.empty()) j["provenance"] = inst.provenance;
  if (!inst.annotations.empty()) j["annotations"] = inst.annotations;
  return j;
}

inline std::string emit_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2) + "\n";
}

inline Instance instance_from_json(const nlohmann::json& j) {
  using detail::fail;
  if (!j.is_object()) fail("instance", "top level must be an object");
  Instance inst;
  if (j.contains("hypergraph")) {
    const auto& hj = j.at("hypergraph");
    int n = detail::get_field<int>(hj, "n", "hypergraph");
    if (!hj.contains("edges")) fail("hypergraph", "missing field 'edges'");
    inst.hypergraph = Hypergraph(n, detail::sets_from_json(hj.at("edges"), n, "hypergraph.edges"));
  }
  if (j.contains("complex")) {
    const auto& cj = j.at("complex");
    int n = detail::get_field<int>(cj, "n", "complex");
    if (!cj.contains("maximal_faces")) fail("complex", "missing field 'maximal_faces'");
    auto faces = detail::sets_from_json(cj.at("maximal_faces"), n, "complex.maximal_faces");
    inst.complex = Complex(n, faces);
  }
  if (j.contains("matroids")) {
    const auto& mj = j.at("matroids");
    if (!mj.is_array()) fail("matroids", "expected an array");
    std::vector<Matroid> ms;
    for (std::size_t i = 0; i < mj.size(); ++i) {
      ms.push_back(detail::matroid_from_json(mj[i], "matroids[" + std::to_string(i) + "]"));
    }
    inst.matroids = MatroidSystem(std::move(ms));
  }
  if (j.contains("weights")) {
    const auto& wj = j.at("weights");
    if (!wj.is_object()) fail("weights", "expected an object");
    if (wj.contains("w")) inst.w = detail::ratvec_from_json(wj.at("w"), "weights.w");
    if (wj.contains("h")) inst.h = detail::ratvec_from_json(wj.at("h"), "weights.h");
  }
  if (j.contains("provenance") && j.at("provenance").is_string()) {
    inst.provenance = j.at("provenance").get<std::string>();
  }
  if (j.contains("annotations")) inst.annotations = j.at("annotations");
  // cross-member sizes
  if (inst.complex && inst.matroids && inst.complex->n() != inst.matroids->n()) {
    throw ValidationError("complex and matroids have different ground sets");
  }
  return inst;
}

inline Instance parse_instance_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

inline Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

}  // namespace mtk
