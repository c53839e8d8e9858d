//  Copyright 2026 The kleene-workbench Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "kleene/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kleene/errors.hpp"

namespace kleene {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructureError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw StructureError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> name_list(const json& value, const char* what) {
  if (!value.is_array()) throw StructureError(std::string(what) + " must be a list of names");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw StructureError(std::string(what) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> name_pairs(const json& value, const char* what) {
  if (!value.is_array()) throw StructureError(std::string(what) + " must be a list of pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : value) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw StructureError(std::string(what) + " entries must be [name, name] pairs");
    out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return out;
}

}  // namespace

// --- algebras -------------------------------------------------------------------------

AlgebraTables AlgebraDocument::tables() const {
  AlgebraTables t;
  t.size = lattice.size();
  const auto n = static_cast<Elem>(t.size);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      t.leq.push_back(lattice.leq(a, b));
      t.join.push_back(lattice.join(a, b));
      t.meet.push_back(lattice.meet(a, b));
    }
  t.neg = neg;
  return t;
}

KleeneAlgebra AlgebraDocument::kleene() const { return KleeneAlgebra(lattice, neg, name); }

AlgebraDocument parse_algebra(std::string_view json_text) {
  const json doc = parse_json(json_text);
  const json& size_field = field(doc, "size");
  if (!size_field.is_number_unsigned() || size_field.get<std::size_t>() == 0)
    throw StructureError("size must be a positive integer");
  const auto n = size_field.get<std::size_t>();
  if (n > 4096) throw StructureError("algebra files are limited to 4096 elements");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = name_list(doc.at("labels"), "labels");
    if (labels.size() != n) throw StructureError("labels must name every element");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  auto element = [&](const json& v) -> Elem {
    if (v.is_number_unsigned() && v.get<std::size_t>() < n) return v.get<Elem>();
    if (v.is_string())
      for (std::size_t i = 0; i < n; ++i)
        if (labels[i] == v.get<std::string>()) return static_cast<Elem>(i);
    throw StructureError("element " + v.dump() + " is out of range");
  };
  auto pairs = [&](const char* key) {
    const json& list = field(doc, key);
    if (!list.is_array()) throw StructureError(std::string(key) + " must be a list of pairs");
    std::vector<std::pair<Elem, Elem>> out;
    for (const auto& p : list) {
      if (!p.is_array() || p.size() != 2)
        throw StructureError(std::string(key) + " entries must be pairs");
      out.emplace_back(element(p[0]), element(p[1]));
    }
    return out;
  };

  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : pairs("leq")) leq[a * n + b] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;

  std::vector<Elem> neg(n);
  std::vector<bool> defined(n, false);
  for (auto [a, b] : pairs("neg")) {
    if (defined[a]) throw StructureError("negation of " + labels[a] + " is defined twice");
    defined[a] = true;
    neg[a] = b;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!defined[i]) throw StructureError("negation of " + labels[i] + " is undefined");

  std::string name = doc.contains("name") && doc.at("name").is_string()
                         ? doc.at("name").get<std::string>()
                         : std::string{};
  return AlgebraDocument{std::move(name), FiniteLattice::from_order(n, std::move(leq), labels),
                         std::move(neg)};
}

std::string algebra_to_json(const DeMorganAlgebra& algebra) {
  json doc;
  if (!algebra.name().empty()) doc["name"] = algebra.name();
  doc["size"] = algebra.size();
  doc["labels"] = algebra.lattice().labels();
  json leq = json::array();
  json neg = json::array();
  // Only covering pairs; the loader closes them.
  for (Elem x = 0; x < algebra.size(); ++x) {
    for (Elem lower : algebra.lattice().lower_covers(x)) leq.push_back({lower, x});
    neg.push_back({x, algebra.neg(x)});
  }
  doc["leq"] = std::move(leq);
  doc["neg"] = std::move(neg);
  return doc.dump(2) + "\n";
}

// --- spaces -----------------------------------------------------------------------------

ApproximationSpace parse_space(std::string_view json_text) {
  const json doc = parse_json(json_text);
  auto universe = name_list(field(doc, "universe"), "universe");
  if (doc.contains("blocks")) {
    const json& blocks = doc.at("blocks");
    if (!blocks.is_array()) throw StructureError("blocks must be a list of name lists");
    std::vector<std::vector<std::string>> parts;
    for (const auto& b : blocks) parts.push_back(name_list(b, "block"));
    return ApproximationSpace(std::move(universe), std::move(parts));
  }
  if (doc.contains("relation"))
    return ApproximationSpace::from_relation(std::move(universe),
                                             name_pairs(doc.at("relation"), "relation"));
  throw StructureError("space needs 'blocks' or 'relation'");
}

std::string space_to_json(const ApproximationSpace& space) {
  json doc;
  doc["universe"] = space.names();
  json blocks = json::array();
  for (SetMask b : space.blocks()) {
    json block = json::array();
    for (std::size_t i = 0; i < space.size(); ++i)
      if (b >> i & 1) block.push_back(space.names()[i]);
    blocks.push_back(std::move(block));
  }
  doc["blocks"] = std::move(blocks);
  return doc.dump(2) + "\n";
}

// --- frames -------------------------------------------------------------------------------

CompatibilityFrame parse_frame(std::string_view json_text) {
  const json doc = parse_json(json_text);
  auto worlds = name_list(field(doc, "worlds"), "worlds");
  auto leq = doc.contains("leq") ? name_pairs(doc.at("leq"), "leq")
                                 : std::vector<std::pair<std::string, std::string>>{};
  return CompatibilityFrame(std::move(worlds), leq, name_pairs(field(doc, "C"), "C"));
}

std::string frame_to_json(const CompatibilityFrame& frame) {
  json doc;
  doc["worlds"] = frame.worlds();
  json leq = json::array();
  json compat = json::array();
  for (std::size_t x = 0; x < frame.size(); ++x)
    for (std::size_t y = 0; y < frame.size(); ++y) {
      if (x != y && frame.leq(x, y)) leq.push_back({frame.world(x), frame.world(y)});
      if (frame.compatible(x, y)) compat.push_back({frame.world(x), frame.world(y)});
    }
  doc["leq"] = std::move(leq);
  doc["C"] = std::move(compat);
  return doc.dump(2) + "\n";
}

// --- files --------------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructureError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructureError("cannot write " + path);
  out << contents;
  if (!out) throw StructureError("failed writing " + path);
}

}  // namespace kleene
