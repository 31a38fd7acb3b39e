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

// Certificate checking. Everything is rebuilt from the raw tables stored in
// the certificate; nothing produced by the witness search is reused.

#include "rfca/witness.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rfca {

  namespace {
    std::string at(std::size_t i) {
      return "X[" + std::to_string(i) + "]";
    }

    template <typename T>
    bool has_duplicates(std::vector<T> v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) != v.end();
    }

    template <typename Map, typename Set>
    VerificationResult check_closed(Set const& X, Map const& tau, char const* name) {
      try {
        (void) restrict_to(X, tau);
      } catch (NotClosed const& e) {
        return VerificationResult::fail(std::string("X not closed under ") + name
                                        + ": image of " + at(e.position) + " leaves X");
      }
      return VerificationResult::pass();
    }

    VerificationResult check_images(std::vector<std::size_t> const& stored1,
                                    std::vector<std::size_t> const& stored2,
                                    Transformation const&           actual1,
                                    Transformation const&           actual2) {
      if (stored1 == stored2) {
        return VerificationResult::fail("images coincide");
      }
      if (stored1 != actual1.mapping()) {
        return VerificationResult::fail("image1 does not match the restriction of the first automaton");
      }
      if (stored2 != actual2.mapping()) {
        return VerificationResult::fail("image2 does not match the restriction of the second automaton");
      }
      return VerificationResult::pass();
    }
  }  // namespace

  VerificationResult verify_certificate(FiniteSeparationCertificate const& cert) try {
    FiniteMonoid const M = cert.monoid.to_monoid();
    Alphabet const     A(cert.alphabet);
    auto const         space = std::make_shared<ConfigurationSpace const>(M, A);

    std::optional<EquivariantMap> tau1, tau2;
    try {
      tau1.emplace(space, cert.tau1);
      tau2.emplace(space, cert.tau2);
    } catch (Error const& e) {
      return VerificationResult::fail(std::string("automaton is invalid: ") + e.what());
    }

    std::size_t const w = space->index_of(cert.witness);
    if ((*tau1)(w) == (*tau2)(w)) {
      return VerificationResult::fail("witness does not separate the automata");
    }

    std::vector<Configuration> X;
    for (auto const& values : cert.invariant_set) {
      (void) space->index_of(values);
      X.emplace_back(M, values);
    }
    if (has_duplicates(cert.invariant_set)) {
      return VerificationResult::fail("invariant set lists a configuration twice");
    }
    for (auto r : {check_closed(X, *tau1, "tau1"), check_closed(X, *tau2, "tau2")}) {
      if (!r) {
        return r;
      }
    }
    if (std::find(cert.invariant_set.begin(), cert.invariant_set.end(), cert.witness)
        == cert.invariant_set.end()) {
      return VerificationResult::fail("witness is not in X");
    }
    if (auto r = check_images(cert.image1, cert.image2, restrict_to(X, *tau1), restrict_to(X, *tau2));
        !r) {
      return r;
    }

    // X must be Inv(gamma) for a congruence gamma, which makes it invariant
    // under every cellular automaton and restriction a monoid morphism.
    if (!is_congruence(M, cert.congruence)) {
      return VerificationResult::fail("stored partition is not a congruence");
    }
    Congruence const gamma(M, cert.congruence);
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (element_type m1 = 0; m1 < M.size(); ++m1) {
        for (element_type m2 = m1 + 1; m2 < M.size(); ++m2) {
          if (gamma.contains(m1, m2) && X[i](m1) != X[i](m2)) {
            return VerificationResult::fail(at(i) + " is not constant on congruence classes");
          }
        }
      }
    }
    if (X.size() != checked_power(A.size(), gamma.index(), default_enumeration_cap)) {
      return VerificationResult::fail("X is not all of Inv(gamma)");
    }
    return VerificationResult::pass();
  } catch (Error const& e) {
    return VerificationResult::fail(e.what());
  }

  VerificationResult verify_certificate(IntegerSeparationCertificate const& cert) try {
    LocalRule const rule1 = cert.rule1.to_rule();
    LocalRule const rule2 = cert.rule2.to_rule();
    if (!(rule1.alphabet() == rule2.alphabet())) {
      return VerificationResult::fail("rules use different alphabets");
    }
    Alphabet const     A = rule1.alphabet();
    PeriodicWord const witness(cert.witness);
    if (apply_rule(rule1, witness) == apply_rule(rule2, witness)) {
      return VerificationResult::fail("witness does not separate the rules");
    }

    std::vector<PeriodicWord> X;
    for (auto const& word : cert.invariant_set) {
      for (auto s : word) {
        if (s >= A.size()) {
          return VerificationResult::fail("invariant set uses a symbol outside the alphabet");
        }
      }
      X.emplace_back(word);
    }
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t j = i + 1; j < X.size(); ++j) {
        if (X[i] == X[j]) {
          return VerificationResult::fail("invariant set lists a configuration twice");
        }
      }
    }
    for (auto r : {check_closed(X, rule1, "rule1"), check_closed(X, rule2, "rule2")}) {
      if (!r) {
        return r;
      }
    }
    if (std::find(X.begin(), X.end(), witness) == X.end()) {
      return VerificationResult::fail("witness is not in X");
    }
    if (auto r = check_images(cert.image1, cert.image2, restrict_to(X, rule1), restrict_to(X, rule2));
        !r) {
      return r;
    }

    // X must be the full set of p-periodic points, which every cellular
    // automaton over Z preserves.
    if (cert.modulus == 0) {
      return VerificationResult::fail("modulus must be positive");
    }
    auto const p = static_cast<std::int64_t>(cert.modulus);
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (!(shift(p, X[i]) == X[i])) {
        return VerificationResult::fail(at(i) + " is not " + std::to_string(p) + "-periodic");
      }
    }
    if (X.size() != checked_power(A.size(), cert.modulus, default_enumeration_cap)) {
      return VerificationResult::fail("X is not the set of all p-periodic configurations");
    }
    return VerificationResult::pass();
  } catch (Error const& e) {
    return VerificationResult::fail(e.what());
  }

  VerificationResult verify_certificate(EndSeparationCertificate const& cert) try {
    FiniteMonoid const S = cert.source.to_monoid();
    FiniteMonoid const T = cert.test_target.to_monoid();

    std::optional<SemigroupMorphism> alpha1, alpha2, rho;
    try {
      alpha1.emplace(S, S, cert.alpha1, false);
      alpha2.emplace(S, S, cert.alpha2, false);
    } catch (Error const& e) {
      return VerificationResult::fail(std::string("not an endomorphism: ") + e.what());
    }
    if (cert.alpha1 == cert.alpha2) {
      return VerificationResult::fail("endomorphisms coincide");
    }
    element_type const s0 = cert.witness_element;
    if (s0 >= S.size() || cert.alpha1[s0] == cert.alpha2[s0]) {
      return VerificationResult::fail("endomorphisms agree at the witness element");
    }
    try {
      rho.emplace(S, T, cert.separating_morphism, false);
    } catch (Error const& e) {
      return VerificationResult::fail(std::string("separating map is not a morphism: ") + e.what());
    }
    if ((*rho)(cert.alpha1[s0]) == (*rho)(cert.alpha2[s0])) {
      return VerificationResult::fail("separating morphism does not separate the images of s0");
    }

    if (!is_congruence(S, cert.gamma)) {
      return VerificationResult::fail("gamma is not a congruence");
    }
    Congruence const gamma(S, cert.gamma);
    Congruence       expected = Congruence::full(S);
    for (auto const& psi : enumerate_morphisms(S, T, false)) {
      expected = intersect_congruences(expected, kernel_relation(psi));
    }
    if (!(gamma == expected)) {
      return VerificationResult::fail("gamma is not the intersection of the kernels of Mor(S, T)");
    }

    for (auto const* alpha : {&cert.alpha1, &cert.alpha2}) {
      for (element_type s1 = 0; s1 < S.size(); ++s1) {
        for (element_type s2 = 0; s2 < S.size(); ++s2) {
          if (gamma.contains(s1, s2) && !gamma.contains((*alpha)[s1], (*alpha)[s2])) {
            return VerificationResult::fail("an endomorphism does not preserve gamma at ("
                                            + std::to_string(s1) + ", " + std::to_string(s2)
                                            + ")");
          }
        }
      }
    }

    FiniteMonoid const Q = cert.quotient.to_monoid();
    if (Q.size() != gamma.index() || cert.projection != gamma.class_of()) {
      return VerificationResult::fail("projection does not match gamma");
    }
    try {
      SemigroupMorphism const projection(S, Q, cert.projection, true);
      SemigroupMorphism const induced1(Q, Q, cert.induced1, false);
      SemigroupMorphism const induced2(Q, Q, cert.induced2, false);
      for (element_type s = 0; s < S.size(); ++s) {
        if (induced1(projection(s)) != projection(cert.alpha1[s])
            || induced2(projection(s)) != projection(cert.alpha2[s])) {
          return VerificationResult::fail("induced map is not the quotient of its endomorphism at "
                                          + std::to_string(s));
        }
      }
    } catch (Error const& e) {
      return VerificationResult::fail(std::string("quotient data is inconsistent: ") + e.what());
    }
    if (cert.induced1 == cert.induced2) {
      return VerificationResult::fail("induced endomorphisms coincide");
    }
    return VerificationResult::pass();
  } catch (Error const& e) {
    return VerificationResult::fail(e.what());
  }

}  // namespace rfca
