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

#include "kleene/representation.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "kleene/errors.hpp"

namespace kleene {

std::vector<Elem> join_irreducibles(const FiniteLattice& lattice) {
  std::vector<Elem> result;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (x != lattice.bottom() && lattice.lower_covers(x).size() == 1) result.push_back(x);
  return result;
}

std::vector<Elem> join_decompose(const FiniteLattice& lattice, Elem x) {
  std::vector<Elem> below;
  Elem acc = lattice.bottom();
  for (Elem j : join_irreducibles(lattice))
    if (lattice.leq(j, x)) {
      below.push_back(j);
      acc = lattice.join(acc, j);
    }
  if (acc != x)
    throw InvariantViolation("join density fails at " + lattice.label(x));
  return below;
}

Elem star(const DeMorganAlgebra& algebra, Elem j) {
  const auto& lattice = algebra.lattice();
  const auto irreducibles = join_irreducibles(lattice);
  if (!std::binary_search(irreducibles.begin(), irreducibles.end(), j))
    throw PreconditionError(lattice.label(j) + " is not join-irreducible");
  const Elem negated = algebra.neg(j);
  Elem result = algebra.top();
  for (Elem x = 0; x < algebra.size(); ++x)
    if (!algebra.leq(x, negated)) result = algebra.meet(result, x);
  if (!std::binary_search(irreducibles.begin(), irreducibles.end(), result))
    throw InvariantViolation(lattice.label(j) + "* = " + lattice.label(result) +
                             " is not join-irreducible");
  return result;
}

Elem OrderIso::operator()(Elem x) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == x) return codomain[i];
  throw PreconditionError("element " + std::to_string(x) + " is outside the iso's domain");
}

bool is_order_iso(const OrderIso& phi, const FiniteLattice& source, const FiniteLattice& target) {
  if (phi.domain.size() != phi.codomain.size()) return false;
  auto sorted = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto dom = sorted(phi.domain);
  auto cod = sorted(phi.codomain);
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end()) return false;
  if (std::adjacent_find(cod.begin(), cod.end()) != cod.end()) return false;
  for (Elem x : dom)
    if (x >= source.size()) return false;
  for (Elem y : cod)
    if (y >= target.size()) return false;
  for (std::size_t i = 0; i < phi.domain.size(); ++i)
    for (std::size_t k = 0; k < phi.domain.size(); ++k)
      if (source.leq(phi.domain[i], phi.domain[k]) !=
          target.leq(phi.codomain[i], phi.codomain[k]))
        return false;
  return true;
}

bool preserves_star(const OrderIso& phi, const DeMorganAlgebra& source,
                    const DeMorganAlgebra& target) {
  for (std::size_t i = 0; i < phi.domain.size(); ++i)
    if (phi(star(source, phi.domain[i])) != star(target, phi.codomain[i])) return false;
  return true;
}

CanonicalIso canonical_iso_3I(std::size_t n) {
  if (n == 0) throw PreconditionError("canonical_iso_3I needs a positive index size");
  auto three_power = power_algebra(chain3(), n);
  auto interval = interval_algebra(boolean_power(n));
  OrderIso phi;
  // chain3 indices: 0 -> 0, 1 -> a, 2 -> 1.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> coords(n, 0);
    const Elem atom = Elem{1} << i;  // g_i in 2^n
    coords[i] = 1;
    phi.domain.push_back(three_power.index_of(coords));
    phi.codomain.push_back(interval.index_of({0, atom}));
    coords[i] = 2;
    phi.domain.push_back(three_power.index_of(coords));
    phi.codomain.push_back(interval.index_of({atom, atom}));
  }
  return CanonicalIso{std::move(three_power), std::move(interval), std::move(phi)};
}

CarrierMap extend_iso(const OrderIso& phi, const FiniteLattice& source, const FiniteLattice& target) {
  auto sorted = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(phi.domain) != join_irreducibles(source))
    throw PreconditionError("iso domain is not the set of join-irreducibles of the source");
  if (sorted(phi.codomain) != join_irreducibles(target))
    throw PreconditionError("iso codomain is not the set of join-irreducibles of the target");
  if (!is_order_iso(phi, source, target))
    throw PreconditionError("map between join-irreducibles is not an order isomorphism");

  CarrierMap extension(source.size());
  for (Elem x = 0; x < source.size(); ++x) {
    Elem image = target.bottom();
    for (Elem j : join_decompose(source, x)) image = target.join(image, phi(j));
    extension[x] = image;
  }
  return extension;
}

HomomorphismReport verify_homomorphism(const CarrierMap& f, const DeMorganAlgebra& source,
                                       const DeMorganAlgebra& target) {
  if (f.size() != source.size()) return {false, "range", {}};
  for (Elem x = 0; x < f.size(); ++x)
    if (f[x] >= target.size()) return {false, "range", {x}};
  if (f[source.bottom()] != target.bottom()) return {false, "bottom", {source.bottom()}};
  if (f[source.top()] != target.top()) return {false, "top", {source.top()}};
  const auto n = static_cast<Elem>(source.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f[source.join(x, y)] != target.join(f[x], f[y])) return {false, "join", {x, y}};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (f[source.meet(x, y)] != target.meet(f[x], f[y])) return {false, "meet", {x, y}};
  for (Elem x = 0; x < n; ++x)
    if (f[source.neg(x)] != target.neg(f[x])) return {false, "neg", {x}};
  return {};
}

bool is_injective(const CarrierMap& f) {
  auto copy = f;
  std::sort(copy.begin(), copy.end());
  return std::adjacent_find(copy.begin(), copy.end()) == copy.end();
}

bool is_bijective(const CarrierMap& f, std::size_t target_size) {
  return f.size() == target_size && is_injective(f);
}

namespace {

class HomomorphismSearch {
 public:
  HomomorphismSearch(const DeMorganAlgebra& source, const DeMorganAlgebra& target)
      : source_(source), target_(target) {}

  std::vector<CarrierMap> run() {
    std::vector<std::optional<Elem>> partial(source_.size());
    if (assign(partial, source_.bottom(), target_.bottom()) &&
        assign(partial, source_.top(), target_.top()))
      extend(partial);
    return std::move(found_);
  }

 private:
  // Sets h(x) = y and closes under join, meet and negation. Returns false on
  // a conflict.
  bool assign(std::vector<std::optional<Elem>>& h, Elem x, Elem y) {
    std::vector<std::pair<Elem, Elem>> work{{x, y}};
    while (!work.empty()) {
      auto [a, image] = work.back();
      work.pop_back();
      if (h[a]) {
        if (*h[a] != image) return false;
        continue;
      }
      h[a] = image;
      work.emplace_back(source_.neg(a), target_.neg(image));
      for (Elem b = 0; b < source_.size(); ++b) {
        if (!h[b]) continue;
        work.emplace_back(source_.join(a, b), target_.join(image, *h[b]));
        work.emplace_back(source_.meet(a, b), target_.meet(image, *h[b]));
      }
    }
    return true;
  }

  void extend(const std::vector<std::optional<Elem>>& h) {
    auto open = std::find(h.begin(), h.end(), std::nullopt);
    if (open == h.end()) {
      CarrierMap done(h.size());
      for (std::size_t i = 0; i < h.size(); ++i) done[i] = *h[i];
      found_.push_back(std::move(done));
      return;
    }
    const auto x = static_cast<Elem>(open - h.begin());
    for (Elem y = 0; y < target_.size(); ++y) {
      auto next = h;
      if (assign(next, x, y)) extend(next);
    }
  }

  const DeMorganAlgebra& source_;
  const DeMorganAlgebra& target_;
  std::vector<CarrierMap> found_;
};

bool separates_points(const std::vector<CarrierMap>& family, const std::vector<bool>& keep,
                      std::size_t n) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      bool separated = false;
      for (std::size_t i = 0; i < family.size() && !separated; ++i)
        separated = keep[i] && family[i][x] != family[i][y];
      if (!separated) return false;
    }
  return true;
}

}  // namespace

std::vector<CarrierMap> enumerate_homomorphisms(const DeMorganAlgebra& source,
                                                const DeMorganAlgebra& target) {
  return HomomorphismSearch(source, target).run();
}

IntervalEmbedding embed_into_interval(const KleeneAlgebra& algebra, std::size_t max_size) {
  if (algebra.size() > max_size)
    throw SizeError("algebra has " + std::to_string(algebra.size()) +
                    " elements; the embedding bound is " + std::to_string(max_size));
  if (algebra.size() < 2) throw PreconditionError("the one-element algebra has no embedding");

  const auto three = chain3();
  auto homs = enumerate_homomorphisms(algebra, three);
  std::vector<bool> keep(homs.size(), true);
  if (!separates_points(homs, keep, algebra.size()))
    throw InvariantViolation("homomorphisms into 3 do not separate points");
  // Drop coordinates greedily while the family still separates points.
  for (std::size_t i = 0; i < homs.size(); ++i) {
    keep[i] = false;
    if (!separates_points(homs, keep, algebra.size())) keep[i] = true;
  }
  std::vector<CarrierMap> coordinates;
  for (std::size_t i = 0; i < homs.size(); ++i)
    if (keep[i]) coordinates.push_back(std::move(homs[i]));

  const std::size_t n = coordinates.size();
  auto iso = canonical_iso_3I(n);
  if (!preserves_star(iso.phi, iso.three_power.algebra, iso.interval.algebra))
    throw InvariantViolation("canonical iso does not commute with j*");
  auto extension = extend_iso(iso.phi, iso.three_power.algebra.lattice(),
                              iso.interval.algebra.lattice());

  CarrierMap into_power(algebra.size());
  CarrierMap map(algebra.size());
  std::vector<Elem> coords(n);
  for (Elem x = 0; x < algebra.size(); ++x) {
    for (std::size_t i = 0; i < n; ++i) coords[i] = coordinates[i][x];
    into_power[x] = iso.three_power.index_of(coords);
    map[x] = extension[into_power[x]];
  }
  if (!is_injective(map)) throw InvariantViolation("interval embedding is not injective");
  auto report = verify_homomorphism(map, algebra, iso.interval.algebra);
  if (!report) throw InvariantViolation("interval embedding fails the " + report.clause + " clause");
  return IntervalEmbedding{std::move(coordinates), std::move(iso), std::move(into_power),
                           std::move(extension), std::move(map)};
}

}  // namespace kleene
