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

#include "rfca/witness.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace rfca {

  MonoidTable MonoidTable::of(FiniteMonoid const& M) {
    auto const flat = M.flat_table();
    return MonoidTable{M.size(), M.identity(), {flat.begin(), flat.end()}};
  }

  FiniteMonoid MonoidTable::to_monoid() const {
    return FiniteMonoid(size, table, identity);
  }

  RuleTable RuleTable::of(LocalRule const& rule) {
    return RuleTable{rule.radius(), rule.alphabet().size(), rule.table()};
  }

  LocalRule RuleTable::to_rule() const {
    return LocalRule(radius, Alphabet(alphabet), table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Cellular automata over a finite monoid
  ////////////////////////////////////////////////////////////////////////

  FiniteSeparationCertificate separate_ca_finite(EquivariantMap const& tau1,
                                                 EquivariantMap const& tau2,
                                                 std::size_t multiplicativity_samples,
                                                 std::uint64_t seed) {
    if (!(tau1.monoid() == tau2.monoid()) || !(tau1.alphabet() == tau2.alphabet())) {
      throw Error(ErrorKind::mismatch, "automata act on different configuration spaces");
    }
    ConfigurationSpace const& space = tau1.space();
    FiniteMonoid const&       M     = space.monoid();
    Alphabet const            A     = space.alphabet();

    std::size_t x0 = 0;
    while (x0 < space.count() && tau1(x0) == tau2(x0)) {
      ++x0;
    }
    if (x0 == space.count()) {
      throw NotDistinct("automata define the same map");
    }

    Configuration const              witness = space.configuration(x0);
    std::vector<Configuration> const Y       = orbit(witness);
    Congruence const                 gamma   = orbit_congruence(M, Y);
    std::vector<Configuration> const X       = inv(M, gamma, A);

    Transformation const image1 = restrict_to(X, tau1);
    Transformation const image2 = restrict_to(X, tau2);
    if (image1 == image2) {
      throw Error(ErrorKind::internal, "restrictions of distinct automata coincide");
    }

    // Spot-check that restriction to X is multiplicative on CA(M, A).
    std::vector<EquivariantMap> sample{tau1, tau2};
    std::mt19937_64             rng(seed);
    std::uniform_int_distribution<symbol_type> symbol(0, A.size() - 1);
    std::vector<symbol_type>                    mu(space.count());
    for (std::size_t i = 0; i < multiplicativity_samples; ++i) {
      std::generate(mu.begin(), mu.end(), [&] { return symbol(rng); });
      sample.push_back(from_local_function(tau1.shared_space(), mu));
    }
    for (std::size_t i = 0; i < sample.size(); ++i) {
      auto const outer = restrict_to(X, sample[i]);
      auto const inner = restrict_to(X, sample[(i + 1) % sample.size()]);
      if (restrict_to(X, compose(sample[i], sample[(i + 1) % sample.size()]))
          != compose(outer, inner)) {
        throw Error(ErrorKind::internal, "restriction to X is not multiplicative");
      }
    }

    FiniteSeparationCertificate cert;
    cert.monoid     = MonoidTable::of(M);
    cert.alphabet   = A.size();
    cert.tau1       = tau1.graph();
    cert.tau2       = tau2.graph();
    cert.witness    = witness.values();
    cert.congruence = gamma.class_of();
    for (auto const& x : X) {
      cert.invariant_set.push_back(x.values());
    }
    cert.image1 = image1.mapping();
    cert.image2 = image2.mapping();
    return cert;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cellular automata over Z
  ////////////////////////////////////////////////////////////////////////

  std::size_t separation_period_bound(LocalRule const& rule1, LocalRule const& rule2) {
    return 2 * std::max(rule1.radius(), rule2.radius()) + 1;
  }

  IntegerSeparationCertificate separate_ca_integer(LocalRule const& rule1,
                                                   LocalRule const& rule2) {
    if (rules_equal(rule1, rule2)) {
      throw NotDistinct("rules define the same map");
    }
    Alphabet const    A     = rule1.alphabet();
    std::size_t const bound = separation_period_bound(rule1, rule2);

    std::optional<PeriodicWord> found;
    for (std::size_t p = 1; p <= bound && !found; ++p) {
      for (auto const& w : inv_integer(p, A)) {
        if (apply_rule(rule1, w) != apply_rule(rule2, w)) {
          found = w;
          break;
        }
      }
    }
    if (!found) {
      throw Error(ErrorKind::internal,
                  "no separating periodic word within period " + std::to_string(bound));
    }

    std::size_t const  p = integer_orbit_congruence(*found);
    PeriodicWord const witness(
        std::vector<symbol_type>(found->word().begin(), found->word().begin() + p));
    std::vector<PeriodicWord> const X      = inv_integer(p, A);
    Transformation const            image1 = restrict_to(X, rule1);
    Transformation const            image2 = restrict_to(X, rule2);

    IntegerSeparationCertificate cert;
    cert.rule1   = RuleTable::of(rule1);
    cert.rule2   = RuleTable::of(rule2);
    cert.witness = witness.word();
    cert.modulus = p;
    for (auto const& x : X) {
      cert.invariant_set.push_back(x.word());
    }
    cert.image1 = image1.mapping();
    cert.image2 = image2.mapping();
    return cert;
  }

  bool restriction_is_multiplicative(std::span<PeriodicWord const> X,
                                     LocalRule const&              outer,
                                     LocalRule const&              inner) {
    return restrict_to(X, compose(outer, inner))
           == compose(restrict_to(X, outer), restrict_to(X, inner));
  }

  ////////////////////////////////////////////////////////////////////////
  // Hopficity
  ////////////////////////////////////////////////////////////////////////

  HopfReport malcev_hopf_check(SemigroupMorphism const& psi, element_type s1, element_type s2) {
    return malcev_hopf_check(psi, s1, s2, identity_morphism(psi.source()));
  }

  HopfReport malcev_hopf_check(SemigroupMorphism const& psi,
                               element_type             s1,
                               element_type             s2,
                               SemigroupMorphism const& rho) {
    FiniteMonoid const& S = psi.source();
    if (!(psi.target() == S)) {
      throw Error(ErrorKind::invalid_argument, "psi is not an endomorphism");
    }
    if (s1 >= S.size() || s2 >= S.size()) {
      throw Error(ErrorKind::index_out_of_range, "element is not in the semigroup");
    }
    if (s1 == s2) {
      throw Error(ErrorKind::invalid_argument, "the two elements must be distinct");
    }
    if (!(rho.source() == S) || rho(s1) == rho(s2)) {
      throw Error(ErrorKind::invalid_argument,
                  "rho must be a morphism from S that separates the two elements");
    }

    HopfReport report{.target     = rho.target(),
                      .separating = rho,
                      .morphisms  = enumerate_morphisms(S, rho.target(), false)};
    auto const position = [&](std::vector<element_type> const& images) {
      auto it = std::find_if(report.morphisms.begin(),
                             report.morphisms.end(),
                             [&](auto const& u) { return u.images() == images; });
      if (it == report.morphisms.end()) {
        throw Error(ErrorKind::internal, "composite morphism missing from Mor(S, T)");
      }
      return static_cast<std::size_t>(it - report.morphisms.begin());
    };

    for (auto const& u : report.morphisms) {
      report.phi.push_back(position(compose(u, psi).images()));
    }
    std::vector<std::size_t> sorted = report.phi;
    std::sort(sorted.begin(), sorted.end());
    report.phi_injective  = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    report.psi_surjective = psi.is_surjective();
    report.s1             = s1;
    report.s2             = s2;
    report.psi_s1         = psi(s1);
    report.psi_s2         = psi(s2);

    std::size_t const target = position(rho.images());
    auto const        it     = std::find(report.phi.begin(), report.phi.end(), target);
    if (it != report.phi.end()) {
      report.u0 = static_cast<std::size_t>(it - report.phi.begin());
    }
    if (report.psi_surjective) {
      if (!report.phi_injective || !report.u0) {
        throw Error(ErrorKind::internal, "Phi fails to be a permutation for surjective psi");
      }
      // u0(psi(s1)) = rho(s1) != rho(s2) = u0(psi(s2)).
      auto const& u0    = report.morphisms[*report.u0];
      report.conclusion = u0(report.psi_s1) != u0(report.psi_s2);
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  Congruence residual_congruence(FiniteMonoid const& S, FiniteMonoid const& T) {
    Congruence gamma = Congruence::full(S);
    for (auto const& psi : enumerate_morphisms(S, T, false)) {
      gamma = intersect_congruences(gamma, kernel_relation(psi));
    }
    return gamma;
  }

  namespace {
    bool preserves(Congruence const& gamma, std::span<element_type const> alpha) {
      for (element_type s1 = 0; s1 < alpha.size(); ++s1) {
        for (element_type s2 = s1 + 1; s2 < alpha.size(); ++s2) {
          if (gamma.contains(s1, s2) && !gamma.contains(alpha[s1], alpha[s2])) {
            return false;
          }
        }
      }
      return true;
    }

    std::vector<element_type> induced_map(Congruence const&             gamma,
                                          std::span<element_type const> alpha) {
      std::vector<element_type> out(gamma.index());
      for (element_type s = 0; s < alpha.size(); ++s) {
        out[gamma.class_of(s)] = gamma.class_of(alpha[s]);
      }
      return out;
    }
  }  // namespace

  EndSeparationCertificate separate_endomorphisms(FiniteMonoid const&      T,
                                                  SemigroupMorphism const& alpha1,
                                                  SemigroupMorphism const& alpha2) {
    FiniteMonoid const& S = alpha1.source();
    if (!(alpha1.target() == S) || !(alpha2.source() == S) || !(alpha2.target() == S)) {
      throw Error(ErrorKind::mismatch, "both maps must be endomorphisms of the same monoid");
    }
    auto const& a1 = alpha1.images();
    auto const& a2 = alpha2.images();
    if (a1 == a2) {
      throw NotDistinct("endomorphisms coincide");
    }
    element_type s0 = 0;
    while (a1[s0] == a2[s0]) {
      ++s0;
    }

    auto const morphisms = enumerate_morphisms(S, T, false);
    auto const rho       = std::find_if(morphisms.begin(), morphisms.end(), [&](auto const& u) {
      return u(a1[s0]) != u(a2[s0]);
    });
    if (rho == morphisms.end()) {
      throw Error(ErrorKind::no_separating_morphism,
                  "no morphism to the test target separates alpha1(s0) and alpha2(s0)");
    }

    Congruence gamma = Congruence::full(S);
    for (auto const& psi : morphisms) {
      gamma = intersect_congruences(gamma, kernel_relation(psi));
    }
    if (!preserves(gamma, a1) || !preserves(gamma, a2)) {
      throw Error(ErrorKind::internal, "endomorphism does not preserve the residual congruence");
    }
    if (S.size() <= 6) {
      for (auto const& alpha : enumerate_morphisms(S, S, false)) {
        if (!preserves(gamma, alpha.images())) {
          throw Error(ErrorKind::internal,
                      "endomorphism does not preserve the residual congruence");
        }
      }
    }

    QuotientResult const    q = quotient(S, gamma);
    SemigroupMorphism const induced1(q.quotient, q.quotient, induced_map(gamma, a1), false);
    SemigroupMorphism const induced2(q.quotient, q.quotient, induced_map(gamma, a2), false);
    if (induced1(gamma.class_of(s0)) == induced2(gamma.class_of(s0))) {
      throw Error(ErrorKind::internal, "induced endomorphisms agree at [s0]");
    }

    EndSeparationCertificate cert;
    cert.source              = MonoidTable::of(S);
    cert.test_target         = MonoidTable::of(T);
    cert.alpha1              = a1;
    cert.alpha2              = a2;
    cert.witness_element     = s0;
    cert.separating_morphism = rho->images();
    cert.gamma               = gamma.class_of();
    cert.quotient            = MonoidTable::of(q.quotient);
    cert.projection          = q.projection.images();
    cert.induced1            = induced1.images();
    cert.induced2            = induced2.images();
    return cert;
  }

}  // namespace rfca
