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

/**
 * @file
 *
 * Finite-quotient witnesses.
 *
 * - separate_ca_finite / separate_ca_integer: given two distinct cellular
 *   automata, find a periodic configuration x0 they disagree on, take the
 *   congruence gamma of its orbit and the finite invariant set X = Inv(gamma),
 *   and restrict both automata to X. Restriction is a monoid morphism
 *   CA(M, A) -> Map(X), so distinct restrictions separate the automata in a
 *   finite quotient.
 * - malcev_hopf_check: for an endomorphism psi of S and a separating
 *   rho: S -> T, tabulate Phi(u) = u ∘ psi on Mor(S, T) and, when psi is
 *   surjective, recover u0 with u0 ∘ psi = rho.
 * - separate_endomorphisms: intersect the kernels of all of Mor(S, T), which
 *   every endomorphism preserves, and compare the induced endomorphisms of the
 *   quotient.
 *
 * Certificates carry raw tables only so verify_certificate can rebuild every
 * object from scratch.
 */

#ifndef RFCA_WITNESS_HPP
#define RFCA_WITNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rfca/cellular.hpp"

namespace rfca {

  /// A multiplication table as stored in certificates; not validated.
  struct MonoidTable {
    std::size_t               size     = 0;
    element_type              identity = 0;
    std::vector<element_type> table;

    static MonoidTable of(FiniteMonoid const& M);

    /// Throws whatever the FiniteMonoid constructor throws.
    FiniteMonoid to_monoid() const;

    bool operator==(MonoidTable const&) const = default;
  };

  struct FiniteSeparationCertificate {
    MonoidTable                           monoid;
    std::uint32_t                         alphabet = 0;
    std::vector<std::size_t>              tau1;
    std::vector<std::size_t>              tau2;
    std::vector<symbol_type>              witness;
    std::vector<element_type>             congruence;
    std::vector<std::vector<symbol_type>> invariant_set;
    std::vector<std::size_t>              image1;
    std::vector<std::size_t>              image2;
  };

  struct RuleTable {
    std::size_t              radius   = 0;
    std::uint32_t            alphabet = 0;
    std::vector<symbol_type> table;

    static RuleTable of(LocalRule const& rule);
    LocalRule        to_rule() const;

    bool operator==(RuleTable const&) const = default;
  };

  struct IntegerSeparationCertificate {
    RuleTable                             rule1;
    RuleTable                             rule2;
    std::vector<symbol_type>              witness;
    std::size_t                           modulus = 0;
    std::vector<std::vector<symbol_type>> invariant_set;
    std::vector<std::size_t>              image1;
    std::vector<std::size_t>              image2;
  };

  struct EndSeparationCertificate {
    MonoidTable               source;
    MonoidTable               test_target;
    std::vector<element_type> alpha1;
    std::vector<element_type> alpha2;
    element_type              witness_element = 0;
    std::vector<element_type> separating_morphism;
    std::vector<element_type> gamma;
    MonoidTable               quotient;
    std::vector<element_type> projection;
    std::vector<element_type> induced1;
    std::vector<element_type> induced2;
  };

  /// Throws NotDistinct if the graphs agree.
  FiniteSeparationCertificate separate_ca_finite(EquivariantMap const& tau1,
                                                 EquivariantMap const& tau2,
                                                 std::size_t multiplicativity_samples = 16,
                                                 std::uint64_t seed = 20260101);

  /// Throws NotDistinct if the rules define the same map on A^Z.
  IntegerSeparationCertificate separate_ca_integer(LocalRule const& rule1,
                                                   LocalRule const& rule2);

  /// Witness periods never exceed 2 * max(radius) + 1: a window on which the
  /// padded tables differ, extended periodically, separates the rules.
  std::size_t separation_period_bound(LocalRule const& rule1, LocalRule const& rule2);

  /// rho(outer ∘ inner) == rho(outer) ∘ rho(inner) for restriction to X.
  bool restriction_is_multiplicative(std::span<PeriodicWord const> X,
                                     LocalRule const&              outer,
                                     LocalRule const&              inner);

  struct HopfReport {
    FiniteMonoid                   target;
    SemigroupMorphism              separating;
    std::vector<SemigroupMorphism> morphisms;  // Mor(S, T)
    std::vector<std::size_t>       phi{};      // morphisms[i] ∘ psi == morphisms[phi[i]]
    bool                           psi_surjective = false;
    bool                           phi_injective  = false;
    std::optional<std::size_t>     u0{};
    element_type                   s1     = 0;
    element_type                   s2     = 0;
    element_type                   psi_s1 = 0;
    element_type                   psi_s2 = 0;
    /// psi(s1) != psi(s2), derived through u0; empty when psi is not
    /// surjective and the argument does not apply.
    std::optional<bool> conclusion{};
  };

  /// Uses T = S and rho = identity.
  HopfReport malcev_hopf_check(SemigroupMorphism const& psi, element_type s1, element_type s2);

  /// Uses the caller's separating morphism rho: S -> T.
  HopfReport malcev_hopf_check(SemigroupMorphism const& psi,
                               element_type             s1,
                               element_type             s2,
                               SemigroupMorphism const& rho);

  /// The intersection of the kernels of all semigroup morphisms S -> T.
  Congruence residual_congruence(FiniteMonoid const& S, FiniteMonoid const& T);

  /// Throws NotDistinct when alpha1 == alpha2 and NoSeparatingMorphism (as
  /// Error) when no morphism to T tells the images apart.
  EndSeparationCertificate separate_endomorphisms(FiniteMonoid const&      T,
                                                  SemigroupMorphism const& alpha1,
                                                  SemigroupMorphism const& alpha2);

  struct VerificationResult {
    bool        ok = true;
    std::string failure;

    explicit operator bool() const noexcept {
      return ok;
    }

    static VerificationResult pass() {
      return {};
    }

    static VerificationResult fail(std::string why) {
      return {false, std::move(why)};
    }
  };

  VerificationResult verify_certificate(FiniteSeparationCertificate const& cert);
  VerificationResult verify_certificate(IntegerSeparationCertificate const& cert);
  VerificationResult verify_certificate(EndSeparationCertificate const& cert);

}  // namespace rfca

#endif  // RFCA_WITNESS_HPP
