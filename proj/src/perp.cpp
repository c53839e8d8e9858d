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

#include "kleene/perp.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "kleene/errors.hpp"

namespace kleene {

namespace {

constexpr WorldSet bit(std::size_t i) { return WorldSet{1} << i; }

}  // namespace

CompatibilityFrame::CompatibilityFrame(std::vector<std::string> worlds, std::vector<WorldSet> up,
                                       std::vector<WorldSet> succ)
    : worlds_(std::move(worlds)), up_(std::move(up)), succ_(std::move(succ)) {
  const std::size_t n = worlds_.size();
  if (n == 0) throw StructureError("a frame needs at least one world");
  if (n > kMaxWorlds) throw StructureError("frames are limited to 16 worlds");
  if (up_.size() != n || succ_.size() != n) throw StructureError("relation size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (worlds_[i] == worlds_[k]) throw StructureError("duplicate world " + worlds_[i]);
  // Reflexive-transitive closure.
  for (std::size_t x = 0; x < n; ++x) up_[x] = (up_[x] | bit(x)) & all();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (up_[x] & bit(k)) up_[x] |= up_[k];
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (leq(x, y) && leq(y, x))
        throw StructureError("order is not antisymmetric: " + worlds_[x] + " <= " + worlds_[y] +
                             " <= " + worlds_[x]);
  for (std::size_t x = 0; x < n; ++x)
    if (succ_[x] & ~all()) throw StructureError("compatibility relation names an unknown world");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!compatible(x, y)) continue;
      for (std::size_t xp = 0; xp < n; ++xp) {
        if (!leq(xp, x)) continue;
        for (std::size_t yp = 0; yp < n; ++yp)
          if (leq(yp, y) && !compatible(xp, yp))
            throw StructureError("C is not downward monotone: " + worlds_[xp] + " <= " +
                                 worlds_[x] + ", " + worlds_[yp] + " <= " + worlds_[y] + ", " +
                                 worlds_[x] + " C " + worlds_[y] + " but not " + worlds_[xp] +
                                 " C " + worlds_[yp]);
      }
    }
}

CompatibilityFrame::CompatibilityFrame(std::vector<std::string> worlds,
                                       const std::vector<std::pair<std::string, std::string>>& leq,
                                       const std::vector<std::pair<std::string, std::string>>& compat)
    : CompatibilityFrame([&] {
        std::vector<WorldSet> up(worlds.size(), 0), succ(worlds.size(), 0);
        auto index = [&](const std::string& w) {
          auto it = std::find(worlds.begin(), worlds.end(), w);
          if (it == worlds.end()) throw StructureError("unknown world " + w);
          return static_cast<std::size_t>(it - worlds.begin());
        };
        for (const auto& [a, b] : leq) up[index(a)] |= bit(index(b));
        for (const auto& [a, b] : compat) succ[index(a)] |= bit(index(b));
        return CompatibilityFrame(worlds, std::move(up), std::move(succ));
      }()) {}

CompatibilityFrame CompatibilityFrame::from_masks(std::vector<std::string> worlds,
                                                  std::vector<WorldSet> up, std::vector<WorldSet> succ) {
  return CompatibilityFrame(std::move(worlds), std::move(up), std::move(succ));
}

bool CompatibilityFrame::is_up_set(WorldSet s) const {
  for (std::size_t x = 0; x < size(); ++x)
    if ((s & bit(x)) && (up_[x] & ~s)) return false;
  return (s & ~all()) == 0;
}

std::vector<WorldSet> CompatibilityFrame::up_sets() const {
  std::vector<WorldSet> out;
  for (WorldSet s = 0; s <= all(); ++s)
    if (is_up_set(s)) out.push_back(s);
  return out;
}

std::size_t CompatibilityFrame::index_of(const std::string& world) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (worlds_[i] == world) return i;
  throw StructureError("unknown world " + world);
}

std::string CompatibilityFrame::render(WorldSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i)
    if (s & bit(i)) {
      out += (first ? "" : ",") + worlds_[i];
      first = false;
    }
  return out + "}";
}

// --- forcing -----------------------------------------------------------------------

void check_hereditary(const CompatibilityFrame& frame, const HereditaryEvaluation& e) {
  for (const auto& [name, set] : e)
    if (!frame.is_up_set(set))
      throw PreconditionError("extension of " + name + " is not an up-set: " + frame.render(set));
}

WorldSet extension(const CompatibilityFrame& frame, const HereditaryEvaluation& e, const Formula& phi) {
  switch (phi.kind()) {
    case Connective::Top:
      return frame.all();
    case Connective::Bot:
      return 0;
    case Connective::Var: {
      auto it = e.find(phi.name());
      if (it == e.end()) throw PreconditionError("variable " + phi.name() + " has no extension");
      return it->second;
    }
    case Connective::And:
      return extension(frame, e, phi.left()) & extension(frame, e, phi.right());
    case Connective::Or:
      return extension(frame, e, phi.left()) | extension(frame, e, phi.right());
    case Connective::Neg: {
      const WorldSet inner = extension(frame, e, phi.child());
      WorldSet out = 0;
      for (std::size_t x = 0; x < frame.size(); ++x)
        if ((frame.successors(x) & inner) == 0) out |= bit(x);
      return out;
    }
  }
  return 0;
}

bool forces(const CompatibilityFrame& frame, const HereditaryEvaluation& e, std::size_t x,
            const Formula& phi) {
  return extension(frame, e, phi) & bit(x);
}

FrameVerdict frame_valid(const CompatibilityFrame& frame, const Consequent& c,
                         std::uint64_t max_evaluations) {
  const auto vars = c.variables();
  const auto ups = frame.up_sets();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    count *= ups.size();
    if (count > max_evaluations)
      throw SizeError("more than " + std::to_string(max_evaluations) + " hereditary evaluations");
  }
  std::vector<std::size_t> digits(vars.size(), 0);
  HereditaryEvaluation e;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) e[vars[i]] = ups[digits[i]];
    const WorldSet bad = extension(frame, e, c.lhs) & ~extension(frame, e, c.rhs);
    if (bad) return {false, FrameCountermodel{e, static_cast<std::size_t>(std::countr_zero(bad))}};
    std::size_t k = vars.size();
    while (k > 0) {
      if (++digits[k - 1] < ups.size()) break;
      digits[k - 1] = 0;
      --k;
    }
    if (k == 0) return {};
  }
}

// --- frame conditions ----------------------------------------------------------------

ConditionResult check_condition_dni(const CompatibilityFrame& frame) {
  for (std::size_t x = 0; x < frame.size(); ++x)
    for (std::size_t y = 0; y < frame.size(); ++y)
      if (frame.compatible(x, y) && !frame.compatible(y, x)) return {false, {x, y}};
  return {};
}

ConditionResult check_condition_dne(const CompatibilityFrame& frame) {
  for (std::size_t x = 0; x < frame.size(); ++x) {
    bool found = false;
    for (std::size_t y = 0; y < frame.size() && !found; ++y) {
      if (!frame.compatible(x, y)) continue;
      found = true;
      for (std::size_t z = 0; z < frame.size() && found; ++z)
        if (frame.compatible(y, z) && !frame.leq(z, x)) found = false;
    }
    if (!found) return {false, {x}};
  }
  return {};
}

ConditionResult check_condition_kleene(const CompatibilityFrame& frame) {
  for (std::size_t x = 0; x < frame.size(); ++x) {
    if (frame.compatible(x, x)) continue;
    for (std::size_t y = 0; y < frame.size(); ++y)
      if (frame.compatible(x, y) && !frame.leq(y, x)) return {false, {x, y}};
  }
  return {};
}

bool is_kleene_frame(const CompatibilityFrame& frame) {
  return check_condition_dni(frame).holds && check_condition_dne(frame).holds &&
         check_condition_kleene(frame).holds;
}

// --- enumeration ------------------------------------------------------------------------

namespace {

using Perm = std::vector<std::size_t>;

// Row-major adjacency bits of a relation (masks per world) after relabelling
// world i as perm[i].
std::uint32_t relation_code(const std::vector<WorldSet>& rel, const Perm& perm) {
  const std::size_t n = rel.size();
  std::vector<WorldSet> image(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (rel[x] >> y & 1) image[perm[x]] |= bit(perm[y]);
  std::uint32_t code = 0;
  for (std::size_t x = 0; x < n; ++x) code = (code << n) | image[x];
  return code;
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Partial orders on n points as up-set masks, one per isomorphism class.
std::vector<std::vector<WorldSet>> posets(std::size_t n, const std::vector<Perm>& perms) {
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) offdiag.emplace_back(x, y);
  std::vector<std::vector<WorldSet>> out;
  std::set<std::uint32_t> seen;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << offdiag.size()); ++bits) {
    std::vector<WorldSet> up(n);
    for (std::size_t x = 0; x < n; ++x) up[x] = bit(x);
    for (std::size_t i = 0; i < offdiag.size(); ++i)
      if (bits >> i & 1) up[offdiag[i].first] |= bit(offdiag[i].second);
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!(up[x] >> y & 1)) continue;
        if (x != y && (up[y] >> x & 1)) ok = false;   // antisymmetry
        if (up[y] & ~up[x]) ok = false;              // transitivity
      }
    if (!ok) continue;
    std::uint32_t best = ~std::uint32_t{0};
    for (const auto& p : perms) best = std::min(best, relation_code(up, p));
    if (seen.insert(best).second) out.push_back(std::move(up));
  }
  return out;
}

}  // namespace

std::vector<CompatibilityFrame> enumerate_frames(std::size_t max_worlds) {
  if (max_worlds > 4) throw SizeError("frame enumeration is limited to 4 worlds");
  std::vector<CompatibilityFrame> out;
  for (std::size_t n = 1; n <= max_worlds; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
    const auto perms = all_perms(n);
    for (const auto& up : posets(n, perms)) {
      std::vector<Perm> autos;
      for (const auto& p : perms)
        if (relation_code(up, p) == relation_code(up, perms.front())) autos.push_back(p);
      std::vector<WorldSet> down(n, 0);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (up[x] >> y & 1) down[y] |= bit(x);  // down[y]: worlds below y
      const std::uint32_t total = std::uint32_t{1} << (n * n);
      std::vector<WorldSet> succ(n);
      for (std::uint32_t bits = 0; bits < total; ++bits) {
        for (std::size_t x = 0; x < n; ++x) succ[x] = (bits >> (x * n)) & (bit(n) - 1);
        bool monotone = true;
        for (std::size_t x = 0; x < n && monotone; ++x) {
          for (std::size_t y = 0; y < n && monotone; ++y)
            if ((succ[x] >> y & 1) && (down[y] & ~succ[x])) monotone = false;
          for (std::size_t xp = 0; xp < n && monotone; ++xp)
            if ((down[x] >> xp & 1) && (succ[x] & ~succ[xp])) monotone = false;
        }
        if (!monotone) continue;
        const std::uint32_t code = relation_code(succ, perms.front());
        bool minimal = true;
        for (const auto& g : autos)
          if (relation_code(succ, g) < code) {
            minimal = false;
            break;
          }
        if (minimal) out.push_back(CompatibilityFrame::from_masks(names, up, succ));
      }
    }
  }
  return out;
}

std::vector<CompatibilityFrame> enumerate_kleene_frames(std::size_t max_worlds) {
  std::vector<CompatibilityFrame> out;
  for (auto& f : enumerate_frames(max_worlds))
    if (is_kleene_frame(f)) out.push_back(std::move(f));
  return out;
}

std::optional<Countermodel> countermodel_search(const Consequent& c,
                                                const std::vector<CompatibilityFrame>& frames) {
  for (const auto& frame : frames) {
    if (!is_kleene_frame(frame)) continue;
    auto verdict = frame_valid(frame, c);
    if (!verdict.valid) return Countermodel{frame, verdict.witness->evaluation, verdict.witness->world};
  }
  return std::nullopt;
}

std::optional<Countermodel> countermodel_search(const Consequent& c, std::size_t max_worlds) {
  return countermodel_search(c, enumerate_kleene_frames(max_worlds));
}

}  // namespace kleene
