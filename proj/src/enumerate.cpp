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

#include "kleene/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

#include "kleene/errors.hpp"

namespace kleene {

namespace {

// A poset on {0..n-1}: below[i] is the bitmask of elements strictly below i.
using Poset = std::vector<std::uint32_t>;

std::vector<std::uint32_t> down_sets(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint32_t> result;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((s >> i & 1) && (p[i] & ~s)) closed = false;
    if (closed) result.push_back(s);
  }
  return result;
}

std::uint64_t poset_code(const Poset& p, const std::vector<std::size_t>& perm) {
  const std::size_t n = p.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      code <<= 1;
      if (p[perm[i]] >> perm[j] & 1) code |= 1;
    }
  return code;
}

std::uint64_t canonical_code(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, poset_code(p, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Naturally labelled posets, grown one maximal element at a time, pruned by
// the down-set count (adding an element never decreases it).
void grow(Poset& p, std::size_t max_downsets, std::set<std::pair<std::size_t, std::uint64_t>>& seen,
          std::vector<Poset>& out) {
  for (std::uint32_t s : down_sets(p)) {
    p.push_back(s);
    if (down_sets(p).size() <= max_downsets) {
      if (seen.emplace(p.size(), canonical_code(p)).second) out.push_back(p);
      grow(p, max_downsets, seen, out);
    }
    p.pop_back();
  }
}

FiniteLattice down_set_lattice(const Poset& p) {
  auto sets = down_sets(p);
  std::stable_sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  const std::size_t n = sets.size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a * n + b] = (sets[a] & ~sets[b]) == 0;
  return FiniteLattice::from_order(n, std::move(leq));
}

std::vector<std::vector<Elem>> automorphisms(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<Elem>> result;
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b) ok = l.leq(a, b) == l.leq(perm[a], perm[b]);
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

void involutions(const FiniteLattice& l, std::vector<std::optional<Elem>>& sigma, Elem next,
                 std::vector<std::vector<Elem>>& out) {
  const std::size_t n = l.size();
  while (next < n && sigma[next]) ++next;
  if (next == n) {
    std::vector<Elem> done(n);
    for (Elem i = 0; i < n; ++i) done[i] = *sigma[i];
    out.push_back(std::move(done));
    return;
  }
  for (Elem y = 0; y < n; ++y) {
    if (sigma[y]) continue;
    sigma[next] = y;
    sigma[y] = next;
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      if (!sigma[a]) continue;
      for (Elem b = 0; b < n && ok; ++b) {
        if (!sigma[b]) continue;
        ok = l.leq(a, b) == l.leq(*sigma[b], *sigma[a]);
      }
    }
    if (ok) involutions(l, sigma, next + 1, out);
    sigma[next] = std::nullopt;
    sigma[y] = std::nullopt;
  }
}

template <typename Keep>
std::vector<DeMorganAlgebra> negation_algebras(std::size_t max_size, Keep keep) {
  std::vector<DeMorganAlgebra> result;
  std::map<std::size_t, std::size_t> per_size;
  for (const auto& lattice : enumerate_distributive_lattices(max_size)) {
    if (lattice.size() < 2) continue;
    const auto autos = automorphisms(lattice);
    std::vector<std::optional<Elem>> sigma(lattice.size());
    std::vector<std::vector<Elem>> negs;
    involutions(lattice, sigma, 0, negs);
    std::set<std::vector<Elem>> seen;
    for (const auto& neg : negs) {
      DeMorganAlgebra candidate(lattice, neg);
      if (!keep(candidate)) continue;
      // Canonical form under conjugation by lattice automorphisms.
      std::vector<Elem> best;
      for (const auto& g : autos) {
        std::vector<Elem> conj(neg.size());
        for (Elem x = 0; x < neg.size(); ++x) conj[g[x]] = g[neg[x]];
        if (best.empty() || conj < best) best = std::move(conj);
      }
      if (!seen.insert(best).second) continue;
      result.emplace_back(lattice, neg,
                          "M" + std::to_string(lattice.size()) + "." + std::to_string(per_size[lattice.size()]++));
    }
  }
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return result;
}

}  // namespace

std::vector<FiniteLattice> enumerate_distributive_lattices(std::size_t max_size) {
  if (max_size > 10) throw SizeError("distributive lattice enumeration is limited to 10 elements");
  std::vector<Poset> posets{Poset{}};
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  Poset scratch;
  grow(scratch, max_size, seen, posets);
  std::vector<FiniteLattice> result;
  for (const auto& p : posets) result.push_back(down_set_lattice(p));
  std::stable_sort(result.begin(), result.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return result;
}

std::vector<DeMorganAlgebra> enumerate_de_morgan_algebras(std::size_t max_size) {
  return negation_algebras(max_size, [](const DeMorganAlgebra&) { return true; });
}

std::vector<KleeneAlgebra> enumerate_kleene_algebras(std::size_t max_size) {
  std::vector<KleeneAlgebra> result;
  for (auto& a : negation_algebras(max_size, [](const DeMorganAlgebra& a) { return a.is_kleene(); })) {
    std::string name = a.name();
    name[0] = 'K';
    result.emplace_back(a.lattice(), a.negation_table(), std::move(name));
  }
  return result;
}

}  // namespace kleene
