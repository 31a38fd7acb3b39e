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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rfca/witness.hpp"

using namespace rfca;
using Words = std::vector<std::vector<symbol_type>>;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
  };

  // Collects the first failure; later checks still run so the detail stays
  // about the earliest problem.
  class Checker {
   public:
    void expect(bool condition, std::string const& what) {
      ++_checks;
      if (!condition && _ok) {
        _ok    = false;
        _first = what;
      }
    }
    bool ok() const {
      return _ok;
    }
    std::size_t checks() const {
      return _checks;
    }
    std::string const& first_failure() const {
      return _first;
    }

   private:
    bool        _ok = true;
    std::size_t _checks = 0;
    std::string _first;
  };

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

  std::size_t position_in(Words const& X, std::vector<symbol_type> const& w) {
    return static_cast<std::size_t>(std::find(X.begin(), X.end(), w) - X.begin());
  }

  std::string join(std::vector<std::uint32_t> const& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      s << (i ? "," : "") << v[i];
    }
    return s.str();
  }

  // 1
  Outcome elementary_sweep() {
    Checker     c;
    std::size_t pairs = 0, max_period = 0;
    auto const  start = std::chrono::steady_clock::now();
    for (unsigned n1 = 0; n1 < 256; ++n1) {
      for (unsigned n2 = n1 + 1; n2 < 256; ++n2) {
        ++pairs;
        auto const cert = separate_ca_integer(LocalRule::wolfram(n1), LocalRule::wolfram(n2));
        max_period      = std::max(max_period, cert.modulus);
        std::string const tag = std::to_string(n1) + " vs " + std::to_string(n2);
        c.expect(cert.modulus <= 3, tag + ": period " + std::to_string(cert.modulus));
        auto const verdict = verify_certificate(cert);
        c.expect(verdict.ok, tag + ": " + verdict.failure);
        // Independent re-check of the witness on the elementary formula.
        auto const&  w = cert.witness;
        auto const   p = static_cast<std::int64_t>(w.size());
        bool         differs = false;
        for (std::int64_t k = 0; k < p; ++k) {
          auto const l  = w[static_cast<std::size_t>((k + p - 1) % p)];
          auto const m  = w[static_cast<std::size_t>(k)];
          auto const r  = w[static_cast<std::size_t>((k + 1) % p)];
          differs = differs || oracle::elementary(n1, l, m, r) != oracle::elementary(n2, l, m, r);
        }
        c.expect(differs, tag + ": witness does not separate");
      }
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(pairs == 32640, "pair count " + std::to_string(pairs));
    c.expect(secs < 60.0, "took " + std::to_string(secs) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu pairs, max period %zu, %.2f s", pairs, max_period, secs);
    return {c.ok(), c.ok() ? buf : c.first_failure()};
  }

  // 2
  Outcome rule_110_vs_90() {
    Checker    c;
    auto const cert = separate_ca_integer(LocalRule::wolfram(110), LocalRule::wolfram(90));
    c.expect(cert.modulus == 2, "period " + std::to_string(cert.modulus));
    c.expect(cert.witness == std::vector<symbol_type>{0, 1}, "witness " + join(cert.witness));
    auto const i = position_in(cert.invariant_set, {0, 1});
    c.expect(i < cert.invariant_set.size(), "(0,1) missing from X");
    if (c.ok()) {
      c.expect(cert.invariant_set[cert.image1[i]] == std::vector<symbol_type>{1, 1}, "image under 110");
      c.expect(cert.invariant_set[cert.image2[i]] == std::vector<symbol_type>{0, 0}, "image under 90");
    }
    // Brute force over periods 1 and 2 in search order.
    std::vector<symbol_type> first;
    for (std::size_t p = 1; p <= 2 && first.empty(); ++p) {
      for (auto const& w : oracle::all_configurations(p, 2)) {
        if (evaluate(RuleTable::of(LocalRule::wolfram(110)), w)
            != evaluate(RuleTable::of(LocalRule::wolfram(90)), w)) {
          first = w;
          break;
        }
      }
    }
    c.expect(first == cert.witness, "brute-force first witness " + join(first));
    c.expect(verify_certificate(cert).ok, "verification failed");
    return {c.ok(), c.ok() ? "period 2, witness (0,1), images (1,1) and (0,0)" : c.first_failure()};
  }

  // 3
  Outcome finite_completeness() {
    Checker     c;
    std::size_t separated = 0;
    auto const  start     = std::chrono::steady_clock::now();
    for (auto const* name : {"trivial", "z2"}) {
      auto const M        = catalog::by_name(name);
      auto const all      = enumerate_ca(M, Alphabet(2));
      auto const expected = oracle::all_equivariant_maps(oracle::table_of(M), 2);
      c.expect(all.size() == expected.size(), std::string(name) + ": count mismatch");
      for (std::size_t i = 0; i < std::min(all.size(), expected.size()); ++i) {
        c.expect(all[i].graph() == expected[i], std::string(name) + ": graph mismatch");
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (i == j) {
            continue;
          }
          auto const cert    = separate_ca_finite(all[i], all[j]);
          auto const verdict = verify_certificate(cert);
          c.expect(verdict.ok, std::string(name) + ": " + verdict.failure);
          c.expect(cert.image1 != cert.image2, std::string(name) + ": equal images");
          ++separated;
        }
      }
    }
    double const secs
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(secs < 10.0, "took " + std::to_string(secs) + " s");
    char buf[160];
    std::snprintf(buf, sizeof buf, "4 + 16 automata match brute force, %zu ordered pairs separated, %.2f s",
                  separated, secs);
    return {c.ok(), c.ok() ? buf : c.first_failure()};
  }

  // 4
  Outcome tau_laws() {
    Checker     c;
    std::size_t monoids = 0;
    for (auto name : catalog::names()) {
      auto const M = catalog::by_name(name);
      if (M.size() > 6) {
        continue;
      }
      ++monoids;
      auto const  space = std::make_shared<ConfigurationSpace const>(M, Alphabet(2));
      auto const  t     = oracle::table_of(M);
      auto const  X     = oracle::all_configurations(M.size(), 2);
      std::string tag(name);

      std::vector<std::vector<std::size_t>> taus;
      for (element_type m = 0; m < M.size(); ++m) {
        auto const tau = tau_m(space, m);
        // tau_m(x)(m') = x(m m'), from the definition.
        for (std::size_t x = 0; x < X.size(); ++x) {
          std::vector<symbol_type> y(M.size());
          for (element_type mp = 0; mp < M.size(); ++mp) {
            y[mp] = X[x][t[m][mp]];
          }
          c.expect(tau(x) == position_in(X, y), tag + ": tau_m differs from its definition");
        }
        taus.push_back(tau.graph());
      }
      std::vector<std::size_t> id(X.size());
      for (std::size_t i = 0; i < id.size(); ++i) {
        id[i] = i;
      }
      c.expect(taus[M.identity()] == id, tag + ": tau of the identity");
      for (element_type m1 = 0; m1 < M.size(); ++m1) {
        for (element_type m2 = 0; m2 < M.size(); ++m2) {
          std::vector<std::size_t> composed(X.size());
          for (std::size_t x = 0; x < X.size(); ++x) {
            composed[x] = taus[m2][taus[m1][x]];
          }
          c.expect(taus[t[m1][m2]] == composed, tag + ": tau_{m1 m2} != tau_m2 o tau_m1");
        }
      }
      c.expect(std::set<std::vector<std::size_t>>(taus.begin(), taus.end()).size() == M.size(),
               tag + ": m -> tau_m not injective");
    }
    return {c.ok(), c.ok() ? std::to_string(monoids) + " catalog monoids, "
                                 + std::to_string(c.checks()) + " checks"
                           : c.first_failure()};
  }

  // Every associative table on {0..n-1} with identity 0.
  std::vector<oracle::Table> all_monoids(std::size_t n) {
    std::vector<oracle::Table> out;
    oracle::Table              t(n, std::vector<std::uint32_t>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) {
      t[0][i] = t[i][0] = i;
    }
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) {
        free_cells.emplace_back(i, j);
      }
    }
    std::function<void(std::size_t)> go = [&](std::size_t k) {
      if (k == free_cells.size()) {
        if (oracle::is_associative(t)) {
          out.push_back(t);
        }
        return;
      }
      for (std::uint32_t v = 0; v < n; ++v) {
        t[free_cells[k].first][free_cells[k].second] = v;
        go(k + 1);
      }
    };
    go(0);
    return out;
  }

  // 5
  Outcome intersection_bound() {
    Checker     c;
    std::size_t monoids = 0, pairs = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& t : all_monoids(n)) {
        ++monoids;
        auto const M  = make_monoid(t, 0);
        auto const cs = oracle::all_congruences(t);
        for (auto const& p1 : cs) {
          for (auto const& p2 : cs) {
            ++pairs;
            Congruence const g1(M, p1), g2(M, p2);
            auto const       g = intersect_congruences(g1, g2);
            c.expect(g.index() <= g1.index() * g2.index(), "index bound fails");
            c.expect(is_congruence(M, g.class_of()), "intersection is not a congruence");
            c.expect(oracle::is_congruence(t, g.class_of()),
                     "intersection is not a congruence (by definition)");
          }
        }
      }
    }
    return {c.ok(), c.ok() ? std::to_string(monoids) + " monoids of size <= 4, "
                                 + std::to_string(pairs) + " congruence pairs"
                           : c.first_failure()};
  }

  // 6
  Outcome hopf_machinery() {
    Checker     c;
    std::size_t surjective = 0;
    for (auto name : catalog::names()) {
      auto const S = catalog::by_name(name);
      if (S.size() > 6) {
        continue;
      }
      auto const  morphisms = oracle::all_morphisms(S.table(), S.identity(), S.table(),
                                                    S.identity(), false);
      std::string tag(name);
      for (auto const& psi_images : morphisms) {
        SemigroupMorphism const psi(S, S, psi_images, false);
        if (!psi.is_surjective()) {
          continue;
        }
        ++surjective;
        for (element_type s1 = 0; s1 < S.size(); ++s1) {
          for (element_type s2 = 0; s2 < S.size(); ++s2) {
            if (s1 == s2) {
              continue;
            }
            auto const rep = malcev_hopf_check(psi, s1, s2);
            c.expect(rep.morphisms.size() == morphisms.size(), tag + ": |Mor(S,S)| differs");
            c.expect(rep.phi_injective, tag + ": Phi not injective");
            // Phi recomputed on raw image arrays.
            std::set<std::vector<std::uint32_t>> images;
            for (auto const& u : morphisms) {
              std::vector<std::uint32_t> upsi(S.size());
              for (element_type s = 0; s < S.size(); ++s) {
                upsi[s] = u[psi_images[s]];
              }
              images.insert(upsi);
            }
            c.expect(images.size() == morphisms.size(), tag + ": Phi not injective (recomputed)");
            c.expect(rep.u0.has_value(), tag + ": no u0");
            if (rep.u0) {
              auto const& u0 = rep.morphisms[*rep.u0].images();
              for (element_type s = 0; s < S.size(); ++s) {
                c.expect(u0[psi_images[s]] == rep.separating(s), tag + ": u0 o psi != rho");
              }
            }
            c.expect(rep.separating(s1) != rep.separating(s2), tag + ": rho does not separate");
            c.expect(rep.conclusion == std::optional<bool>(psi_images[s1] != psi_images[s2]),
                     tag + ": wrong conclusion");
          }
        }
      }
    }
    return {c.ok(), c.ok() ? std::to_string(surjective)
                                 + " surjective endomorphisms, all pairs of distinct elements"
                           : c.first_failure()};
  }

  // 7
  Outcome endomorphism_separation() {
    Checker     c;
    std::size_t certified = 0;
    for (auto const* name : {"z2", "z6"}) {
      auto const  S = catalog::by_name(name);
      auto const  t = oracle::table_of(S);
      auto const  endos = oracle::all_morphisms(t, S.identity(), t, S.identity(), false);
      std::string tag(name);

      // gamma: pairs identified by every morphism S -> S, from raw arrays.
      std::vector<std::uint32_t> gamma(S.size());
      for (std::uint32_t a = 0; a < S.size(); ++a) {
        gamma[a] = a;
        for (std::uint32_t b = 0; b < a; ++b) {
          bool related = std::all_of(endos.begin(), endos.end(),
                                     [&](auto const& u) { return u[a] == u[b]; });
          if (related) {
            gamma[a] = gamma[b];
            break;
          }
        }
      }
      for (auto const& e : endos) {
        for (std::uint32_t a = 0; a < S.size(); ++a) {
          for (std::uint32_t b = 0; b < S.size(); ++b) {
            if (gamma[a] == gamma[b]) {
              c.expect(gamma[e[a]] == gamma[e[b]], tag + ": gamma not stable");
            }
          }
        }
      }

      for (std::size_t i = 0; i < endos.size(); ++i) {
        for (std::size_t j = 0; j < endos.size(); ++j) {
          if (i == j) {
            continue;
          }
          auto const cert = separate_endomorphisms(S, SemigroupMorphism(S, S, endos[i], false),
                                                   SemigroupMorphism(S, S, endos[j], false));
          c.expect(cert.induced1 != cert.induced2, tag + ": induced maps coincide");
          auto const verdict = verify_certificate(cert);
          c.expect(verdict.ok, tag + ": " + verdict.failure);
          for (std::uint32_t a = 0; a < S.size(); ++a) {
            for (std::uint32_t b = 0; b < S.size(); ++b) {
              c.expect((gamma[a] == gamma[b]) == (cert.gamma[a] == cert.gamma[b]),
                       tag + ": gamma differs from brute force");
            }
          }
          ++certified;
        }
      }
    }
    return {c.ok(), c.ok() ? std::to_string(certified) + " ordered endomorphism pairs certified"
                           : c.first_failure()};
  }

  // 8
  Outcome cylinder_density() {
    Checker     c;
    std::size_t cylinders = 0;
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& w : oracle::all_configurations(len, 2)) {
        for (std::int64_t offset : {-5, 0, 3}) {
          std::vector<CylinderConstraint> cs;
          for (std::size_t i = 0; i < len; ++i) {
            cs.push_back({offset + static_cast<std::int64_t>(i), w[i]});
          }
          auto const  y = periodic_cylinder_witness(cs, Alphabet(2));
          auto const& word = y.word();
          auto const  p    = static_cast<std::int64_t>(word.size());
          c.expect(p >= 1, "empty period");
          for (std::size_t i = 0; i < len; ++i) {
            auto const k = offset + static_cast<std::int64_t>(i);
            c.expect(word[static_cast<std::size_t>(((k % p) + p) % p)] == w[i],
                     "witness leaves the cylinder of " + join(w));
          }
          ++cylinders;
        }
      }
    }
    return {c.ok(), c.ok() ? std::to_string(cylinders) + " cylinders (words of length <= 6, 3 offsets)"
                           : c.first_failure()};
  }

  // 9
  Outcome rho_multiplicativity() {
    Checker                                       c;
    std::mt19937_64                               rng(20260101);
    std::uniform_int_distribution<std::uint32_t> bit(0, 1);
    auto random_rule = [&] {
      std::size_t const        radius = bit(rng);
      std::vector<symbol_type> table(radius == 0 ? 2 : 8);
      for (auto& s : table) {
        s = bit(rng);
      }
      return LocalRule(radius, Alphabet(2), std::move(table));
    };
    std::size_t pairs = 0, skipped = 0;
    while (pairs < 100) {
      auto const sigma = random_rule();
      auto const tau   = random_rule();
      if (rules_equal(sigma, tau)) {
        ++skipped;
        continue;
      }
      ++pairs;
      auto const   cert = separate_ca_integer(sigma, tau);
      Words const& X    = cert.invariant_set;
      auto const   s    = RuleTable::of(sigma), t = RuleTable::of(tau);
      auto const   st   = RuleTable::of(compose(sigma, tau));
      auto const   ts   = RuleTable::of(compose(tau, sigma));
      for (auto const& x : X) {
        auto const sx = evaluate(s, x), tx = evaluate(t, x);
        c.expect(position_in(X, sx) < X.size() && position_in(X, tx) < X.size(),
                 "X is not invariant");
        c.expect(evaluate(st, x) == evaluate(s, tx), "rho(sigma o tau) != rho(sigma) o rho(tau)");
        c.expect(evaluate(ts, x) == evaluate(t, sx), "rho(tau o sigma) != rho(tau) o rho(sigma)");
      }
      c.expect(restriction_is_multiplicative(
                   [&] {
                     std::vector<PeriodicWord> ws;
                     for (auto const& x : X) {
                       ws.emplace_back(x);
                     }
                     return ws;
                   }(),
                   sigma, tau),
               "library multiplicativity check failed");
    }
    return {c.ok(), c.ok() ? "100 seeded pairs (" + std::to_string(skipped)
                                 + " equal draws redrawn), both composition orders"
                           : c.first_failure()};
  }

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
      {"elementary-rule sweep", elementary_sweep},
      {"rule 110 vs rule 90", rule_110_vs_90},
      {"finite-backend completeness", finite_completeness},
      {"tau_m laws", tau_laws},
      {"congruence intersection bound", intersection_bound},
      {"Hopf machinery", hopf_machinery},
      {"endomorphism separation", endomorphism_separation},
      {"periodic points in cylinders", cylinder_density},
      {"restriction multiplicativity", rho_multiplicativity},
  };
  int failures = 0;
  int index    = 0;
  for (auto const& criterion : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (std::exception const& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += outcome.ok ? 0 : 1;
    std::printf("%s  %d. %s: %s\n", outcome.ok ? "PASS" : "FAIL", index, criterion.name,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
