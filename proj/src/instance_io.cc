// Copyright 2026 The Authors.
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

#include "matknap/instance_io.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "matknap/errors.h"

namespace matknap {
namespace {

using nlohmann::json;

void RequireObject(const json& j, const std::string& field,
                   std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw ValidationError(field, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto k : required) known = known || key == k;
    for (auto k : optional) known = known || key == k;
    if (!known) throw ValidationError(field + "." + key, "unknown key");
  }
  for (auto k : required) {
    if (!j.contains(std::string(k))) {
      throw ValidationError(field + "." + std::string(k), "missing");
    }
  }
}

double ReadNumber(const json& j, const std::string& field) {
  if (!j.is_number()) throw ValidationError(field, "expected a number");
  return j.get<double>();
}

int ReadInt(const json& j, const std::string& field) {
  if (!j.is_number_integer()) {
    throw ValidationError(field, "expected an integer");
  }
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    throw ValidationError(field, "integer out of range");
  }
  return static_cast<int>(v);
}

const json& ReadArray(const json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError(field, "expected an array");
  return j;
}

std::vector<double> ReadNumbers(const json& j, const std::string& field) {
  std::vector<double> out;
  for (std::size_t i = 0; i < ReadArray(j, field).size(); ++i) {
    out.push_back(ReadNumber(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<int> ReadInts(const json& j, const std::string& field) {
  std::vector<int> out;
  for (std::size_t i = 0; i < ReadArray(j, field).size(); ++i) {
    out.push_back(ReadInt(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string ReadType(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw ValidationError(field + ".type", "expected a string");
  }
  return j["type"].get<std::string>();
}

// Rewraps construction errors so they name the field.
template <typename Make>
auto Build(const std::string& field, Make&& make) {
  try {
    return make();
  } catch (const ValidationError&) {
    throw;
  } catch (const Error& e) {
    throw ValidationError(field, e.what());
  }
}

std::shared_ptr<const Matroid> ParseMatroid(const json& j, int n,
                                            const std::string& field) {
  const std::string type = ReadType(j, field);
  if (type == "uniform") {
    RequireObject(j, field, {"type", "rank"});
    const int rank = ReadInt(j["rank"], field + ".rank");
    return Build(field, [&] { return std::make_shared<UniformMatroid>(n, rank); });
  }
  if (type == "partition") {
    RequireObject(j, field, {"type", "block_of", "capacity"});
    auto block_of = ReadInts(j["block_of"], field + ".block_of");
    auto capacity = ReadInts(j["capacity"], field + ".capacity");
    if (static_cast<int>(block_of.size()) != n) {
      throw ValidationError(field + ".block_of", "length must equal n");
    }
    return Build(field, [&] {
      return std::make_shared<PartitionMatroid>(std::move(block_of),
                                                std::move(capacity));
    });
  }
  if (type == "graphic") {
    RequireObject(j, field, {"type", "vertex_count", "edges"});
    const int vertices = ReadInt(j["vertex_count"], field + ".vertex_count");
    std::vector<std::pair<int, int>> edges;
    const json& arr = ReadArray(j["edges"], field + ".edges");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string f = field + ".edges[" + std::to_string(i) + "]";
      auto ends = ReadInts(arr[i], f);
      if (ends.size() != 2) throw ValidationError(f, "expected [u, v]");
      edges.emplace_back(ends[0], ends[1]);
    }
    if (static_cast<int>(edges.size()) != n) {
      throw ValidationError(field + ".edges", "length must equal n");
    }
    return Build(field, [&] {
      return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
    });
  }
  if (type == "explicit") {
    RequireObject(j, field, {"type", "independent_sets"});
    std::vector<ElementSet> family;
    const json& arr =
        ReadArray(j["independent_sets"], field + ".independent_sets");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      family.push_back(MakeSet(ReadInts(
          arr[i], field + ".independent_sets[" + std::to_string(i) + "]")));
    }
    return Build(field, [&] {
      return std::make_shared<ExplicitMatroid>(n, family);
    });
  }
  throw ValidationError(field + ".type", "unknown matroid type '" + type + "'");
}

std::shared_ptr<const ValueOracle> ParseOracle(const json& j) {
  const std::string field = "oracle";
  const std::string type = ReadType(j, field);
  if (type == "coverage") {
    RequireObject(j, field, {"type", "universe_size", "sets"}, {"weights"});
    const int m = ReadInt(j["universe_size"], "oracle.universe_size");
    std::vector<std::vector<int>> sets;
    const json& arr = ReadArray(j["sets"], "oracle.sets");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      sets.push_back(ReadInts(arr[i], "oracle.sets[" + std::to_string(i) + "]"));
    }
    std::vector<double> weights;
    if (j.contains("weights")) weights = ReadNumbers(j["weights"], "oracle.weights");
    return Build(field, [&] {
      return std::make_shared<CoverageOracle>(m, std::move(sets),
                                              std::move(weights));
    });
  }
  if (type == "modular") {
    RequireObject(j, field, {"type", "profits"});
    auto profits = ReadNumbers(j["profits"], "oracle.profits");
    return Build(field, [&] {
      return std::make_shared<ModularOracle>(std::move(profits));
    });
  }
  if (type == "facility_location") {
    RequireObject(j, field, {"type", "affinity"});
    std::vector<std::vector<double>> affinity;
    const json& arr = ReadArray(j["affinity"], "oracle.affinity");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      affinity.push_back(
          ReadNumbers(arr[i], "oracle.affinity[" + std::to_string(i) + "]"));
    }
    return Build(field, [&] {
      return std::make_shared<FacilityLocationOracle>(std::move(affinity));
    });
  }
  throw ValidationError("oracle.type", "unknown oracle type '" + type + "'");
}

json MatroidToJson(const Matroid& m) {
  if (auto* u = dynamic_cast<const UniformMatroid*>(&m)) {
    return {{"type", "uniform"}, {"rank", u->rank()}};
  }
  if (auto* p = dynamic_cast<const PartitionMatroid*>(&m)) {
    return {{"type", "partition"},
            {"block_of", p->block_of()},
            {"capacity", p->capacity()}};
  }
  if (auto* g = dynamic_cast<const GraphicMatroid*>(&m)) {
    json edges = json::array();
    for (const auto& [a, b] : g->edges()) edges.push_back({a, b});
    return {{"type", "graphic"},
            {"vertex_count", g->vertex_count()},
            {"edges", edges}};
  }
  if (auto* e = dynamic_cast<const ExplicitMatroid*>(&m)) {
    json sets = json::array();
    for (const auto& s : e->independent_sets()) sets.push_back(s);
    return {{"type", "explicit"}, {"independent_sets", sets}};
  }
  throw PreconditionError("cannot serialize matroid family '" +
                          std::string(m.family()) + "'");
}

json OracleToJson(const ValueOracle& o) {
  if (auto* c = dynamic_cast<const CoverageOracle*>(&o)) {
    json out = {{"type", "coverage"},
                {"universe_size", c->universe_size()},
                {"sets", c->sets()}};
    if (!c->has_unit_weights()) out["weights"] = c->weights();
    return out;
  }
  if (auto* m = dynamic_cast<const ModularOracle*>(&o)) {
    return {{"type", "modular"}, {"profits", m->profits()}};
  }
  if (auto* f = dynamic_cast<const FacilityLocationOracle*>(&o)) {
    return {{"type", "facility_location"}, {"affinity", f->affinity()}};
  }
  throw PreconditionError("cannot serialize oracle family '" +
                          std::string(o.family()) + "'");
}

// Integral doubles are written as integers so files stay readable.
json NumberToJson(double v) {
  if (v == std::floor(v) && std::abs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

void NormalizeNumbers(json& j) {
  if (j.is_number_float()) {
    j = NumberToJson(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& child : j) NormalizeNumbers(child);
  }
}

}  // namespace

Instance ParseInstance(std::string_view document) {
  json j;
  try {
    j = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed instance at byte " + std::to_string(e.byte) +
                     ": " + e.what());
  }
  RequireObject(j, "instance", {"n", "costs", "budget", "matroids", "oracle"});
  const int n = ReadInt(j["n"], "n");
  if (n < 0) throw ValidationError("n", "must be >= 0");
  std::vector<double> costs = ReadNumbers(j["costs"], "costs");
  const double budget = ReadNumber(j["budget"], "budget");
  MatroidList matroids;
  const json& arr = ReadArray(j["matroids"], "matroids");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    matroids.push_back(
        ParseMatroid(arr[i], n, "matroids[" + std::to_string(i) + "]"));
  }
  auto oracle = ParseOracle(j["oracle"]);
  return Instance(n, std::move(costs), budget, std::move(matroids),
                  std::move(oracle));
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read instance file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

std::string SerializeInstance(const Instance& instance) {
  json j;
  j["n"] = instance.n();
  j["costs"] = instance.costs();
  j["budget"] = instance.budget();
  j["matroids"] = json::array();
  for (const auto& m : instance.matroids()) {
    j["matroids"].push_back(MatroidToJson(*m));
  }
  j["oracle"] = OracleToJson(instance.oracle());
  NormalizeNumbers(j);
  return j.dump(2) + "\n";
}

}  // namespace matknap
