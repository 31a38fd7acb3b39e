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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rfca/witness.hpp"

using namespace rfca;

namespace {
  // Evaluates a local rule on a periodic word straight from the table.
  std::vector<symbol_type> evaluate(RuleTable const& r, std::vector<symbol_type> const& w) {
    auto const               n = static_cast<std::int64_t>(w.size());
    auto const               R = static_cast<std::int64_t>(r.radius);
    std::vector<symbol_type> out(w.size());
    for (std::int64_t k = 0; k < n; ++k) {
      std::size_t window = 0;
      for (std::int64_t j = k - R; j <= k + R; ++j) {
        window = window * r.alphabet + w[static_cast<std::size_t>(((j % n) + n) % n)];
      }
      out[static_cast<std::size_t>(k)] = r.table[window];
    }
    return out;
  }

  LocalRule random_rule(std::mt19937_64& rng, std::size_t radius, std::uint32_t a) {
    std::size_t windows = 1;
    for (std::size_t i = 0; i < 2 * radius + 1; ++i) {
      windows *= a;
    }
    std::uniform_int_distribution<std::uint32_t> sym(0, a - 1);
    std::vector<symbol_type>                     t(windows);
    for (auto& s : t) {
      s = sym(rng);
    }
    return LocalRule(radius, Alphabet(a), std::move(t));
  }

  SemigroupMorphism endo(FiniteMonoid const& M, std::vector<element_type> images) {
    return SemigroupMorphism(M, M, std::move(images), false);
  }
}  // namespace

TEST_CASE("integer separation: rule 110 against rule 90", "[witness][integer]") {
  auto const cert = separate_ca_integer(LocalRule::wolfram(110), LocalRule::wolfram(90));
  CHECK(cert.modulus == 2);
  CHECK(cert.witness == std::vector<symbol_type>{0, 1});
  REQUIRE(cert.invariant_set.size() == 4);
  std::size_t const w = 1;  // (0,1) in lexicographic order of period-2 words
  CHECK(cert.invariant_set[w] == std::vector<symbol_type>{0, 1});
  CHECK(cert.invariant_set[cert.image1[w]] == std::vector<symbol_type>{1, 1});
  CHECK(cert.invariant_set[cert.image2[w]] == std::vector<symbol_type>{0, 0});
  CHECK(verify_certificate(cert));
}

TEST_CASE("integer separation agrees with a brute-force search", "[witness][integer]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    std::uint32_t const a  = trial % 3 == 0 ? 3 : 2;
    auto const          r1 = random_rule(rng, trial % 2, a);
    auto const          r2 = random_rule(rng, 1, a);
    auto const          t1 = RuleTable::of(r1), t2 = RuleTable::of(r2);

    std::vector<symbol_type> expected;
    for (std::size_t p = 1; p <= 3 && expected.empty(); ++p) {
      for (auto const& w : oracle::all_configurations(p, a)) {
        if (evaluate(t1, w) != evaluate(t2, w)) {
          expected = w;
          break;
        }
      }
    }
    if (expected.empty()) {
      CHECK(rules_equal(r1, r2));
      CHECK_THROWS_AS(separate_ca_integer(r1, r2), NotDistinct);
      continue;
    }
    auto const cert = separate_ca_integer(r1, r2);
    CHECK(cert.witness == expected);
    CHECK(cert.modulus == expected.size());
    CHECK(cert.modulus <= separation_period_bound(r1, r2));
    CHECK(verify_certificate(cert));
  }
}

TEST_CASE("identical rules do not separate", "[witness][integer]") {
  CHECK_THROWS_AS(separate_ca_integer(LocalRule::wolfram(110), LocalRule::wolfram(110)),
                  NotDistinct);
  CHECK_THROWS_AS(separate_ca_integer(LocalRule::wolfram(204), LocalRule::identity(Alphabet(2))),
                  NotDistinct);
  CHECK_THROWS_AS(
      separate_ca_integer(LocalRule::wolfram(30), pad_to_radius(LocalRule::wolfram(30), 2)),
      NotDistinct);
}

TEST_CASE("integer certificates reject tampering", "[witness][integer][verify]") {
  auto const base = separate_ca_integer(LocalRule::wolfram(110), LocalRule::wolfram(90));

  auto same = base;
  same.image2 = same.image1;
  auto r = verify_certificate(same);
  CHECK_FALSE(r);
  CHECK(r.failure.find("images") != std::string::npos);

  auto dropped = base;
  dropped.invariant_set.erase(dropped.invariant_set.begin() + 3);
  dropped.image1.pop_back();
  dropped.image2.pop_back();
  r = verify_certificate(dropped);
  CHECK_FALSE(r);
  CHECK(r.failure.find("not closed") != std::string::npos);

  auto wrong_witness = base;
  wrong_witness.witness = {0, 0};
  CHECK_FALSE(verify_certificate(wrong_witness));

  auto wrong_image = base;
  wrong_image.image1[1] = 2;
  CHECK_FALSE(verify_certificate(wrong_image));

  auto bad_table = base;
  bad_table.rule1.table.pop_back();
  CHECK_FALSE(verify_certificate(bad_table));

  auto equal_rules = base;
  equal_rules.rule2 = equal_rules.rule1;
  CHECK_FALSE(verify_certificate(equal_rules));
}

TEST_CASE("finite separation", "[witness][finite]") {
  for (auto const& name : {"trivial", "z2", "semilattice", "z3", "leftzero"}) {
    auto const M   = catalog::by_name(name);
    auto const all = enumerate_ca(M, Alphabet(2));
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = i + 1; j < all.size(); j += 5) {
        auto const cert = separate_ca_finite(all[i], all[j]);
        CHECK(verify_certificate(cert));

        auto const& space = all[i].space();
        auto const  x0    = space.index_of(cert.witness);
        CHECK(all[i](x0) != all[j](x0));

        // The stored congruence is the orbit congruence of the witness,
        // computed here from the definition.
        auto const t = oracle::table_of(M);
        for (element_type m1 = 0; m1 < M.size(); ++m1) {
          for (element_type m2 = 0; m2 < M.size(); ++m2) {
            bool same = true;
            for (element_type m = 0; m < M.size(); ++m) {
              auto const y = oracle::shift(t, m, cert.witness);
              same = same && oracle::shift(t, m1, y) == oracle::shift(t, m2, y);
            }
            CHECK((cert.congruence[m1] == cert.congruence[m2]) == same);
          }
        }
        CHECK(cert.image1 != cert.image2);
      }
    }
    CHECK_THROWS_AS(separate_ca_finite(all[0], all[0]), NotDistinct);
  }
}

TEST_CASE("finite certificates reject tampering", "[witness][finite][verify]") {
  auto const Z2  = catalog::by_name("z2");
  auto const all = enumerate_ca(Z2, Alphabet(2));
  auto const base = separate_ca_finite(all.front(), all.back());
  REQUIRE(verify_certificate(base));

  auto same = base;
  same.image2 = same.image1;
  CHECK(verify_certificate(same).failure.find("images") != std::string::npos);

  auto other_partition = base;
  other_partition.congruence = base.congruence == std::vector<element_type>{0, 0}
                                   ? std::vector<element_type>{0, 1}
                                   : std::vector<element_type>{0, 0};
  CHECK_FALSE(verify_certificate(other_partition));

  auto not_a_congruence = separate_ca_finite(enumerate_ca(catalog::by_name("z3"), Alphabet(2))[0],
                                             enumerate_ca(catalog::by_name("z3"), Alphabet(2))[200]);
  not_a_congruence.congruence = {0, 0, 1};
  CHECK_FALSE(verify_certificate(not_a_congruence));

  auto not_equivariant = base;
  not_equivariant.tau1 = {1, 0, 2, 3};
  CHECK_FALSE(verify_certificate(not_equivariant));

  auto outside = base;
  outside.witness = {2, 0};
  CHECK_FALSE(verify_certificate(outside));
}

TEST_CASE("restriction is multiplicative", "[witness]") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto const f = random_rule(rng, 1, 2), g = random_rule(rng, trial % 2, 2);
    for (std::size_t p = 1; p <= 4; ++p) {
      auto const X = inv_integer(p, Alphabet(2));
      CHECK(restriction_is_multiplicative(X, f, g));
      CHECK(compose(restrict_to(X, f), restrict_to(X, g)) == restrict_to(X, compose(f, g)));
    }
  }
}

TEST_CASE("Hopf check examples", "[witness][hopf]") {
  SECTION("negation on Z/6") {
    auto const Z6  = catalog::by_name("z6");
    auto const rep = malcev_hopf_check(endo(Z6, {0, 5, 4, 3, 2, 1}), 1, 2);
    CHECK(rep.psi_surjective);
    CHECK(rep.phi_injective);
    REQUIRE(rep.u0.has_value());
    CHECK(compose(rep.morphisms[*rep.u0], endo(Z6, {0, 5, 4, 3, 2, 1})).images()
          == rep.separating.images());
    CHECK(rep.psi_s1 == 5);
    CHECK(rep.psi_s2 == 4);
    REQUIRE(rep.conclusion.has_value());
    CHECK(*rep.conclusion);
  }
  SECTION("a constant endomorphism of the semilattice") {
    auto const S   = catalog::by_name("semilattice");
    auto const rep = malcev_hopf_check(endo(S, {1, 1}), 0, 1);
    CHECK_FALSE(rep.psi_surjective);
    CHECK_FALSE(rep.conclusion.has_value());
    CHECK(rep.psi_s1 == rep.psi_s2);
  }
  SECTION("phi table matches composition") {
    auto const L = catalog::by_name("leftzero");
    for (auto const& psi : enumerate_morphisms(L, L, false)) {
      auto const rep = malcev_hopf_check(psi, 1, 2);
      REQUIRE(rep.phi.size() == rep.morphisms.size());
      for (std::size_t i = 0; i < rep.phi.size(); ++i) {
        CHECK(rep.morphisms[rep.phi[i]] == compose(rep.morphisms[i], psi));
      }
      CHECK(rep.psi_surjective == psi.is_surjective());
      if (psi.is_surjective()) {
        CHECK(rep.phi_injective);
        CHECK(rep.conclusion == std::optional<bool>(true));
      }
    }
  }
  SECTION("caller-supplied separating morphism") {
    auto const Z6 = catalog::by_name("z6");
    auto const Z2 = catalog::by_name("z2");
    SemigroupMorphism const rho(Z6, Z2, {0, 1, 0, 1, 0, 1}, true);
    auto const rep = malcev_hopf_check(endo(Z6, {0, 5, 4, 3, 2, 1}), 1, 2, rho);
    CHECK(rep.target == Z2);
    REQUIRE(rep.u0.has_value());
    CHECK(compose(rep.morphisms[*rep.u0], endo(Z6, {0, 5, 4, 3, 2, 1})).images()
          == rho.images());
    CHECK(rep.conclusion == std::optional<bool>(true));
  }
  CHECK_THROWS_AS(malcev_hopf_check(endo(catalog::by_name("z2"), {0, 1}), 0, 0), Error);
}

TEST_CASE("endomorphism separation examples", "[witness][endo]") {
  SECTION("Z/2: identity against the constant map") {
    auto const Z2   = catalog::by_name("z2");
    auto const cert = separate_endomorphisms(Z2, identity_morphism(Z2), endo(Z2, {0, 0}));
    CHECK(cert.gamma == std::vector<element_type>{0, 1});
    CHECK(cert.quotient.size == 2);
    CHECK(cert.induced1 != cert.induced2);
    CHECK(verify_certificate(cert));
  }
  SECTION("Z/6: identity against negation") {
    auto const Z6   = catalog::by_name("z6");
    auto const cert = separate_endomorphisms(Z6, identity_morphism(Z6), endo(Z6, {0, 5, 4, 3, 2, 1}));
    CHECK(cert.gamma == std::vector<element_type>{0, 1, 2, 3, 4, 5});
    CHECK(cert.induced1 != cert.induced2);
    CHECK(verify_certificate(cert));
  }
  SECTION("a smaller test target") {
    auto const Z6   = catalog::by_name("z6");
    auto const cert = separate_endomorphisms(catalog::by_name("z2"), identity_morphism(Z6),
                                             endo(Z6, {0, 2, 4, 0, 2, 4}));
    CHECK(cert.gamma == std::vector<element_type>{0, 1, 0, 1, 0, 1});
    CHECK(cert.quotient.size == 2);
    CHECK(verify_certificate(cert));
  }
  SECTION("failures") {
    auto const Z6 = catalog::by_name("z6");
    CHECK_THROWS_AS(separate_endomorphisms(Z6, identity_morphism(Z6), identity_morphism(Z6)),
                    NotDistinct);
    // x -> 2x and x -> 4x agree mod 2, so no morphism to Z/2 separates them.
    try {
      separate_endomorphisms(catalog::by_name("z2"), endo(Z6, {0, 2, 4, 0, 2, 4}),
                             endo(Z6, {0, 4, 2, 0, 4, 2}));
      FAIL("expected no separating morphism");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::no_separating_morphism);
    }
  }
  SECTION("tampering") {
    auto const Z2   = catalog::by_name("z2");
    auto const base = separate_endomorphisms(Z2, identity_morphism(Z2), endo(Z2, {0, 0}));
    auto       same = base;
    same.induced2   = same.induced1;
    CHECK(verify_certificate(same).failure.find("induced") != std::string::npos);
    auto wrong_gamma = base;
    wrong_gamma.gamma = {0, 0};
    CHECK_FALSE(verify_certificate(wrong_gamma));
    auto wrong_alpha = base;
    wrong_alpha.alpha2 = {1, 1};
    CHECK_FALSE(verify_certificate(wrong_alpha));
  }
}

TEST_CASE("residual congruence", "[witness][endo]") {
  auto const Z6 = catalog::by_name("z6");
  CHECK(residual_congruence(Z6, Z6) == Congruence::identity(Z6));
  CHECK(residual_congruence(Z6, catalog::by_name("z3")).class_of()
        == std::vector<element_type>{0, 1, 2, 0, 1, 2});
  CHECK(residual_congruence(Z6, FiniteMonoid()).index() == 1);
  // Every endomorphism maps gamma-related pairs to gamma-related pairs.
  for (auto const& name : catalog::names()) {
    auto const S = catalog::by_name(name);
    for (auto const& T_name : {"z2", "semilattice"}) {
      auto const g = residual_congruence(S, catalog::by_name(T_name));
      CHECK(oracle::is_congruence(oracle::table_of(S), g.class_of()));
      for (auto const& e : enumerate_morphisms(S, S, false)) {
        for (element_type a = 0; a < S.size(); ++a) {
          for (element_type b = 0; b < S.size(); ++b) {
            if (g.contains(a, b)) {
              CHECK(g.contains(e(a), e(b)));
            }
          }
        }
      }
    }
  }
}
