/*
 *   Copyright 2026 The rfca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rfca/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rfca {

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid::FiniteMonoid(std::size_t               size,
                             std::vector<element_type> flat_table,
                             element_type              identity)
      : _size(size), _table(std::move(flat_table)), _identity(identity) {
    if (_size == 0) {
      throw Error(ErrorKind::invalid_argument, "a monoid has at least one element");
    }
    if (_table.size() != _size * _size) {
      throw Error(ErrorKind::invalid_argument,
                  "table must be " + std::to_string(_size) + "x"
                      + std::to_string(_size));
    }
    for (std::size_t p = 0; p < _table.size(); ++p) {
      if (_table[p] >= _size) {
        throw Error(ErrorKind::index_out_of_range,
                    "table entry [" + std::to_string(p / _size) + "]["
                        + std::to_string(p % _size) + "] = "
                        + std::to_string(_table[p]) + " is out of range");
      }
    }
    if (_identity >= _size) {
      throw Error(ErrorKind::index_out_of_range,
                  "identity " + std::to_string(_identity) + " is out of range");
    }
    for (element_type i = 0; i < _size; ++i) {
      if (product(_identity, i) != i || product(i, _identity) != i) {
        throw BadIdentity(i);
      }
    }
    for (element_type i = 0; i < _size; ++i) {
      for (element_type j = 0; j < _size; ++j) {
        element_type const ij = product(i, j);
        for (element_type k = 0; k < _size; ++k) {
          if (product(ij, k) != product(i, product(j, k))) {
            throw NotAssociative(i, j, k);
          }
        }
      }
    }
  }

  std::vector<std::vector<element_type>> FiniteMonoid::table() const {
    std::vector<std::vector<element_type>> out(_size);
    for (std::size_t i = 0; i < _size; ++i) {
      out[i].assign(_table.begin() + i * _size, _table.begin() + (i + 1) * _size);
    }
    return out;
  }

  bool FiniteMonoid::is_commutative() const noexcept {
    for (element_type i = 0; i < _size; ++i) {
      for (element_type j = i + 1; j < _size; ++j) {
        if (product(i, j) != product(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteMonoid make_monoid(std::vector<std::vector<element_type>> const& table,
                           element_type                                  identity) {
    std::size_t const         n = table.size();
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw Error(ErrorKind::invalid_argument,
                    "table is not square: row " + std::to_string(i) + " has "
                        + std::to_string(table[i].size()) + " entries, expected "
                        + std::to_string(n));
      }
      flat.insert(flat.end(), table[i].begin(), table[i].end());
    }
    return FiniteMonoid(n, std::move(flat), identity);
  }

  FiniteMonoid opposite(FiniteMonoid const& M) {
    std::size_t const         n = M.size();
    std::vector<element_type> flat(n * n);
    for (element_type i = 0; i < n; ++i) {
      for (element_type j = 0; j < n; ++j) {
        flat[i * n + j] = M.product(j, i);
      }
    }
    return FiniteMonoid(n, std::move(flat), M.identity());
  }

  std::vector<element_type> closure(FiniteMonoid const&           M,
                                    std::span<element_type const> gens) {
    std::vector<bool>         seen(M.size(), false);
    std::vector<element_type> out{M.identity()};
    seen[M.identity()] = true;
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
      for (auto g : gens) {
        element_type const y = M.product(out[pos], g);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<element_type> generating_set(FiniteMonoid const& M) {
    std::vector<element_type> gens;
    std::vector<element_type> reached = closure(M, gens);
    for (element_type s = 0; s < M.size(); ++s) {
      if (!std::binary_search(reached.begin(), reached.end(), s)) {
        gens.push_back(s);
        reached = closure(M, gens);
      }
    }
    // Prune elements made redundant by later additions.
    for (std::size_t i = gens.size(); i-- > 0;) {
      std::vector<element_type> without = gens;
      without.erase(without.begin() + i);
      if (closure(M, without).size() == M.size()) {
        gens = std::move(without);
      }
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupMorphism
  ////////////////////////////////////////////////////////////////////////

  SemigroupMorphism::SemigroupMorphism(FiniteMonoid              source,
                                       FiniteMonoid              target,
                                       std::vector<element_type> images,
                                       bool                      monoidal)
      : _source(std::move(source)),
        _target(std::move(target)),
        _images(std::move(images)),
        _monoidal(monoidal) {
    if (_images.size() != _source.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "morphism needs " + std::to_string(_source.size())
                      + " images, got " + std::to_string(_images.size()));
    }
    for (element_type s = 0; s < _images.size(); ++s) {
      if (_images[s] >= _target.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "image of " + std::to_string(s) + " is out of range");
      }
    }
    if (_monoidal && _images[_source.identity()] != _target.identity()) {
      throw InvalidMorphism(_source.identity(),
                            _source.identity(),
                            "identity is not sent to the identity");
    }
    for (element_type s1 = 0; s1 < _source.size(); ++s1) {
      for (element_type s2 = 0; s2 < _source.size(); ++s2) {
        if (_images[_source.product(s1, s2)]
            != _target.product(_images[s1], _images[s2])) {
          throw InvalidMorphism(s1, s2, "image of product differs from product of images");
        }
      }
    }
  }

  bool SemigroupMorphism::is_surjective() const {
    std::vector<bool> hit(_target.size(), false);
    for (auto t : _images) {
      hit[t] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  bool SemigroupMorphism::is_injective() const {
    std::vector<element_type> sorted = _images;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }

  SemigroupMorphism identity_morphism(FiniteMonoid const& M) {
    std::vector<element_type> images(M.size());
    std::iota(images.begin(), images.end(), 0);
    return SemigroupMorphism(M, M, std::move(images), true);
  }

  SemigroupMorphism compose(SemigroupMorphism const& outer,
                            SemigroupMorphism const& inner) {
    if (!(inner.target() == outer.source())) {
      throw Error(ErrorKind::mismatch, "cannot compose: codomain and domain differ");
    }
    std::vector<element_type> images(inner.source().size());
    for (element_type s = 0; s < images.size(); ++s) {
      images[s] = outer(inner(s));
    }
    return SemigroupMorphism(inner.source(),
                             outer.target(),
                             std::move(images),
                             outer.monoidal() && inner.monoidal());
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // First-occurrence numbering; returns the number of classes.
    std::size_t canonicalize(std::span<element_type const> in,
                             std::vector<element_type>&    out) {
      out.assign(in.size(), 0);
      std::vector<std::pair<element_type, element_type>> seen;  // (raw, canonical)
      for (std::size_t s = 0; s < in.size(); ++s) {
        auto it = std::find_if(seen.begin(), seen.end(), [&](auto const& p) {
          return p.first == in[s];
        });
        if (it == seen.end()) {
          seen.emplace_back(in[s], static_cast<element_type>(seen.size()));
          out[s] = seen.back().second;
        } else {
          out[s] = it->second;
        }
      }
      return seen.size();
    }
  }  // namespace

  bool is_congruence(FiniteMonoid const& M, std::span<element_type const> class_of) {
    if (class_of.size() != M.size()) {
      throw Error(ErrorKind::mismatch,
                  "partition has " + std::to_string(class_of.size())
                      + " entries but the monoid has "
                      + std::to_string(M.size()) + " elements");
    }
    // Comparing each element with the first member of its class suffices,
    // because class equality is transitive.
    std::size_t const         n = M.size();
    std::vector<element_type> first(n, static_cast<element_type>(n));
    std::vector<element_type> canonical;
    canonicalize(class_of, canonical);
    for (element_type s = 0; s < n; ++s) {
      if (first[canonical[s]] == n) {
        first[canonical[s]] = s;
      }
    }
    for (element_type s1 = 0; s1 < n; ++s1) {
      element_type const s2 = first[canonical[s1]];
      if (s1 == s2) {
        continue;
      }
      for (element_type s = 0; s < n; ++s) {
        if (canonical[M.product(s, s1)] != canonical[M.product(s, s2)]
            || canonical[M.product(s1, s)] != canonical[M.product(s2, s)]) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence::Congruence(FiniteMonoid M, std::span<element_type const> class_of)
      : _monoid(std::move(M)), _class_of(), _index(0) {
    if (!is_congruence(_monoid, class_of)) {
      throw Error(ErrorKind::not_a_congruence,
                  "partition is not compatible with multiplication");
    }
    _index = canonicalize(class_of, _class_of);
  }

  Congruence Congruence::identity(FiniteMonoid const& M) {
    std::vector<element_type> c(M.size());
    std::iota(c.begin(), c.end(), 0);
    return Congruence(M, c);
  }

  Congruence Congruence::full(FiniteMonoid const& M) {
    std::vector<element_type> c(M.size(), 0);
    return Congruence(M, c);
  }

  bool Congruence::is_finer_than(Congruence const& coarser) const {
    if (!(_monoid == coarser._monoid)) {
      throw Error(ErrorKind::mismatch, "congruences live on different monoids");
    }
    for (element_type s1 = 0; s1 < _class_of.size(); ++s1) {
      for (element_type s2 = s1 + 1; s2 < _class_of.size(); ++s2) {
        if (contains(s1, s2) && !coarser.contains(s1, s2)) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence kernel_relation(SemigroupMorphism const& phi) {
    return Congruence(phi.source(), phi.images());
  }

  Congruence intersect_congruences(Congruence const& g1, Congruence const& g2) {
    if (!(g1.monoid() == g2.monoid())) {
      throw Error(ErrorKind::mismatch, "congruences live on different monoids");
    }
    // Pair label (c1, c2) encoded as c1 * index2 + c2.
    std::size_t const         n = g1.monoid().size();
    std::vector<element_type> labels(n);
    for (element_type s = 0; s < n; ++s) {
      labels[s] = static_cast<element_type>(g1.class_of(s) * g2.index() + g2.class_of(s));
    }
    return Congruence(g1.monoid(), labels);
  }

  QuotientResult quotient(FiniteMonoid const& M, Congruence const& gamma) {
    if (!(gamma.monoid() == M)) {
      throw Error(ErrorKind::mismatch, "congruence is over a different monoid");
    }
    std::size_t const         k = gamma.index();
    std::vector<element_type> rep(k, 0);
    std::vector<bool>         have(k, false);
    for (element_type s = 0; s < M.size(); ++s) {
      if (!have[gamma.class_of(s)]) {
        have[gamma.class_of(s)] = true;
        rep[gamma.class_of(s)]  = s;
      }
    }
    std::vector<element_type> flat(k * k);
    for (element_type a = 0; a < k; ++a) {
      for (element_type b = 0; b < k; ++b) {
        flat[a * k + b] = gamma.class_of(M.product(rep[a], rep[b]));
      }
    }
    FiniteMonoid Q(k, std::move(flat), gamma.class_of(M.identity()));
    return QuotientResult{Q, SemigroupMorphism(M, Q, gamma.class_of(), true)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool satisfies_morphism_equation(FiniteMonoid const&           S,
                                     FiniteMonoid const&           T,
                                     std::span<element_type const> images) {
      for (element_type s1 = 0; s1 < S.size(); ++s1) {
        for (element_type s2 = 0; s2 < S.size(); ++s2) {
          if (images[S.product(s1, s2)] != T.product(images[s1], images[s2])) {
            return false;
          }
        }
      }
      return true;
    }

    // Advances `digits` as a base-`base` odometer, last digit fastest.
    // Returns false after the final value.
    bool next_tuple(std::vector<element_type>& digits, std::size_t base) {
      for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) {
          return true;
        }
        digits[i] = 0;
      }
      return false;
    }

    std::vector<std::vector<element_type>>
    scan_all_maps(FiniteMonoid const& S, FiniteMonoid const& T, bool monoidal) {
      std::vector<std::vector<element_type>> found;
      std::vector<element_type>              images(S.size(), 0);
      do {
        if (monoidal && images[S.identity()] != T.identity()) {
          continue;
        }
        if (satisfies_morphism_equation(S, T, images)) {
          found.push_back(images);
        }
      } while (next_tuple(images, T.size()));
      return found;
    }

    std::vector<std::vector<element_type>>
    backtrack_on_generators(FiniteMonoid const& S, FiniteMonoid const& T, bool monoidal) {
      std::vector<element_type> const gens = generating_set(S);
      std::vector<element_type>       identity_images;
      if (monoidal) {
        identity_images.push_back(T.identity());
      } else {
        for (element_type e = 0; e < T.size(); ++e) {
          if (T.product(e, e) == e) {
            identity_images.push_back(e);
          }
        }
      }

      constexpr element_type unset = static_cast<element_type>(-1);
      std::vector<std::vector<element_type>> found;
      std::vector<element_type>              gen_images(gens.size(), 0);
      std::vector<element_type>              images(S.size());
      std::vector<element_type>              queue;
      for (element_type e : identity_images) {
        std::fill(gen_images.begin(), gen_images.end(), 0);
        do {
          std::fill(images.begin(), images.end(), unset);
          images[S.identity()] = e;
          for (std::size_t i = 0; i < gens.size(); ++i) {
            images[gens[i]] = gen_images[i];
          }
          // Propagate x -> x*g along the right Cayley graph.
          bool consistent = true;
          queue.assign(1, S.identity());
          std::vector<bool> visited(S.size(), false);
          visited[S.identity()] = true;
          for (std::size_t pos = 0; consistent && pos < queue.size(); ++pos) {
            element_type const x = queue[pos];
            for (std::size_t i = 0; i < gens.size(); ++i) {
              element_type const y = S.product(x, gens[i]);
              element_type const v = T.product(images[x], gen_images[i]);
              if (images[y] == unset) {
                images[y] = v;
              } else if (images[y] != v) {
                consistent = false;
                break;
              }
              if (!visited[y]) {
                visited[y] = true;
                queue.push_back(y);
              }
            }
          }
          if (consistent && satisfies_morphism_equation(S, T, images)) {
            found.push_back(images);
          }
        } while (next_tuple(gen_images, T.size()));
      }
      std::sort(found.begin(), found.end());
      return found;
    }
  }  // namespace

  std::vector<SemigroupMorphism> enumerate_morphisms(FiniteMonoid const& S,
                                                     FiniteMonoid const& T,
                                                     bool                monoidal) {
    auto const raw = S.size() <= 4 ? scan_all_maps(S, T, monoidal)
                                   : backtrack_on_generators(S, T, monoidal);
    std::vector<SemigroupMorphism> out;
    out.reserve(raw.size());
    for (auto const& images : raw) {
      out.emplace_back(S, T, images, monoidal);
    }
    return out;
  }

  std::vector<Congruence> enumerate_congruences(FiniteMonoid const& M) {
    std::size_t const n = M.size();
    if (n > max_congruence_search_size) {
      throw CapExceeded("congruence search is limited to monoids of size "
                        + std::to_string(max_congruence_search_size));
    }
    // Restricted growth strings enumerate each set partition exactly once.
    std::vector<Congruence>   out;
    std::vector<element_type> rgs(n, 0);
    std::vector<element_type> prefix_max(n, 0);
    while (true) {
      if (is_congruence(M, rgs)) {
        out.emplace_back(M, rgs);
      }
      std::size_t i = n;
      while (i-- > 1) {
        if (rgs[i] <= prefix_max[i - 1]) {
          break;
        }
      }
      if (i == 0 || n == 1) {
        break;
      }
      ++rgs[i];
      prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j]        = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  namespace catalog {
    namespace {
      FiniteMonoid cyclic_group(std::size_t n) {
        std::vector<element_type> flat(n * n);
        for (element_type i = 0; i < n; ++i) {
          for (element_type j = 0; j < n; ++j) {
            flat[i * n + j] = static_cast<element_type>((i + j) % n);
          }
        }
        return FiniteMonoid(n, std::move(flat), 0);
      }
    }  // namespace

    FiniteMonoid by_name(std::string_view name) {
      if (name == "trivial") {
        return FiniteMonoid();
      } else if (name == "z2") {
        return cyclic_group(2);
      } else if (name == "z3") {
        return cyclic_group(3);
      } else if (name == "z6") {
        return cyclic_group(6);
      } else if (name == "semilattice") {
        return FiniteMonoid(2, {0, 1, 1, 1}, 0);
      } else if (name == "leftzero") {
        // {1, a, b} with xy = x for x, y in {a, b}.
        return FiniteMonoid(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0);
      }
      throw Error(ErrorKind::invalid_argument,
                  "unknown catalog monoid '" + std::string(name) + "'");
    }

    std::vector<std::string_view> names() {
      return {"trivial", "z2", "z3", "z6", "semilattice", "leftzero"};
    }
  }  // namespace catalog

}  // namespace rfca
