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

#include "rfca/rfca.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <random>
#include <string>

#include "rfca/serialize.hpp"
#include "rfca/version.hpp"

struct rfca_monoid {
  rfca::FiniteMonoid value;
};

struct rfca_rule {
  rfca::LocalRule value;
};

struct rfca_automaton {
  rfca::EquivariantMap value;
};

struct rfca_certificate {
  rfca::json_io::AnyCertificate value;
};

namespace {

  using rfca::json_io::json;

  thread_local std::string last_error;

  rfca_status status_of(rfca::ErrorKind kind) {
    switch (kind) {
      case rfca::ErrorKind::not_distinct:
        return RFCA_ERR_NOT_DISTINCT;
      case rfca::ErrorKind::cap_exceeded:
        return RFCA_ERR_CAP_EXCEEDED;
      case rfca::ErrorKind::internal:
        return RFCA_ERR_INTERNAL;
      default:
        return RFCA_ERR_INPUT;
    }
  }

  rfca_status fail(rfca_status status, std::string message) {
    last_error = std::move(message);
    return status;
  }

  // Runs `body`, translating exceptions into status codes.
  template <typename F>
  rfca_status guarded(F&& body) noexcept {
    try {
      body();
      return RFCA_OK;
    } catch (rfca::Error const& e) {
      return fail(status_of(e.kind()), e.what());
    } catch (std::bad_alloc const&) {
      return fail(RFCA_ERR_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
      return fail(RFCA_ERR_INTERNAL, e.what());
    }
  }

  void require(void const* p, char const* what) {
    if (p == nullptr) {
      throw rfca::Error(rfca::ErrorKind::invalid_argument, std::string(what) + " is NULL");
    }
  }

  char* duplicate(std::string const& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  std::vector<rfca::element_type> images(uint32_t const* p, std::size_t n) {
    require(p, "image array");
    return {p, p + n};
  }

}  // namespace

extern "C" {

const char* rfca_version(void) {
  return rfca::version_string;
}

const char* rfca_last_error(void) {
  return last_error.c_str();
}

void rfca_string_free(char* s) {
  delete[] s;
}

////////////////////////////////////////////////////////////////////////////
// Monoids
////////////////////////////////////////////////////////////////////////////

rfca_status rfca_monoid_from_catalog(const char* name, rfca_monoid** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new rfca_monoid{rfca::catalog::by_name(name)};
  });
}

rfca_status rfca_monoid_from_json(const char* text, rfca_monoid** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new rfca_monoid{rfca::json_io::monoid_from_json(rfca::json_io::parse(text))};
  });
}

rfca_status rfca_monoid_from_table(size_t          size,
                                   const uint32_t* table,
                                   uint32_t        identity,
                                   rfca_monoid**   out) {
  return guarded([&] {
    require(table, "table");
    require(out, "out");
    *out = new rfca_monoid{
        rfca::FiniteMonoid(size, std::vector<rfca::element_type>(table, table + size * size), identity)};
  });
}

void rfca_monoid_free(rfca_monoid* m) {
  delete m;
}

size_t rfca_monoid_size(const rfca_monoid* m) {
  return m->value.size();
}

uint32_t rfca_monoid_identity(const rfca_monoid* m) {
  return m->value.identity();
}

uint32_t rfca_monoid_product(const rfca_monoid* m, uint32_t a, uint32_t b) {
  return m->value.product(a, b);
}

int rfca_monoid_is_commutative(const rfca_monoid* m) {
  return m->value.is_commutative() ? 1 : 0;
}

rfca_status rfca_monoid_generating_set(const rfca_monoid* m,
                                       uint32_t*          out,
                                       size_t             capacity,
                                       size_t*            count) {
  return guarded([&] {
    require(m, "monoid");
    require(count, "count");
    auto const gens = rfca::generating_set(m->value);
    *count          = gens.size();
    if (out != nullptr) {
      std::copy_n(gens.begin(), std::min(capacity, gens.size()), out);
    }
  });
}

rfca_status rfca_monoid_congruence_count(const rfca_monoid* m, size_t* count) {
  return guarded([&] {
    require(m, "monoid");
    require(count, "count");
    *count = rfca::enumerate_congruences(m->value).size();
  });
}

rfca_status rfca_monoid_to_json(const rfca_monoid* m, char** out) {
  return guarded([&] {
    require(m, "monoid");
    require(out, "out");
    *out = duplicate(rfca::json_io::to_json(m->value).dump());
  });
}

////////////////////////////////////////////////////////////////////////////
// Cellular automata over finite monoids
////////////////////////////////////////////////////////////////////////////

rfca_status rfca_ca_enumerate(const rfca_monoid* m,
                              uint32_t           alphabet,
                              uint64_t           cap,
                              int                include_graphs,
                              char**             listing_json) {
  return guarded([&] {
    require(m, "monoid");
    require(listing_json, "out");
    auto const maps = rfca::enumerate_ca(m->value, rfca::Alphabet(alphabet), cap);
    auto const by_graph = [](auto const& l, auto const& r) { return l.graph() < r.graph(); };
    auto const contains = [&](rfca::EquivariantMap const& tau) {
      return std::binary_search(maps.begin(), maps.end(), tau, by_graph);
    };

    bool const identity_present
        = contains(rfca::EquivariantMap::identity(m->value, rfca::Alphabet(alphabet)));

    // Closure under composition: every pair when there are at most 256 maps,
    // otherwise a fixed pseudo-random sample of 4096 pairs.
    bool              closed     = true;
    bool const        exhaustive = maps.size() <= 256;
    std::mt19937_64   rng(7);
    std::size_t const pairs = exhaustive ? maps.size() * maps.size() : 4096;
    for (std::size_t k = 0; closed && k < pairs; ++k) {
      std::size_t const i = exhaustive ? k / maps.size() : rng() % maps.size();
      std::size_t const j = exhaustive ? k % maps.size() : rng() % maps.size();
      closed              = contains(rfca::compose(maps[i], maps[j]));
    }

    json listing = {{"monoid", rfca::json_io::to_json(m->value)},
                    {"alphabet", alphabet},
                    {"configurations", maps.front().space().count()},
                    {"count", maps.size()},
                    {"identity_present", identity_present},
                    {"closed", closed},
                    {"closure_check", exhaustive ? "exhaustive" : "sampled"}};
    if (include_graphs != 0) {
      json graphs = json::array();
      for (auto const& tau : maps) {
        graphs.push_back(tau.graph());
      }
      listing["graphs"] = graphs;
    }
    *listing_json = duplicate(listing.dump(2));
  });
}

rfca_status rfca_automaton_from_json(const char*        text,
                                     const rfca_monoid* monoid,
                                     uint32_t           alphabet,
                                     rfca_automaton**   out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    std::optional<rfca::FiniteMonoid> M;
    std::optional<rfca::Alphabet>     A;
    if (monoid != nullptr) {
      M = monoid->value;
    }
    if (alphabet != 0) {
      A = rfca::Alphabet(alphabet);
    }
    *out = new rfca_automaton{
        rfca::json_io::equivariant_map_from_json(rfca::json_io::parse(text), M, A)};
  });
}

void rfca_automaton_free(rfca_automaton* a) {
  delete a;
}

////////////////////////////////////////////////////////////////////////////
// Local rules
////////////////////////////////////////////////////////////////////////////

rfca_status rfca_rule_from_wolfram(unsigned number, rfca_rule** out) {
  return guarded([&] {
    require(out, "out");
    *out = new rfca_rule{rfca::LocalRule::wolfram(number)};
  });
}

rfca_status rfca_rule_from_json(const char* text, rfca_rule** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new rfca_rule{rfca::json_io::rule_from_json(rfca::json_io::parse(text))};
  });
}

void rfca_rule_free(rfca_rule* r) {
  delete r;
}

size_t rfca_rule_radius(const rfca_rule* r) {
  return r->value.radius();
}

rfca_status rfca_rules_equal(const rfca_rule* a, const rfca_rule* b, int* equal) {
  return guarded([&] {
    require(a, "rule");
    require(b, "rule");
    require(equal, "equal");
    *equal = rfca::rules_equal(a->value, b->value) ? 1 : 0;
  });
}

rfca_status rfca_rule_apply(const rfca_rule* r, const uint32_t* word, size_t period, uint32_t* out) {
  return guarded([&] {
    require(r, "rule");
    require(word, "word");
    require(out, "out");
    auto const y = rfca::apply_rule(r->value, rfca::PeriodicWord({word, word + period}));
    std::copy(y.word().begin(), y.word().end(), out);
  });
}

////////////////////////////////////////////////////////////////////////////
// Certificates
////////////////////////////////////////////////////////////////////////////

rfca_status rfca_separate_rules(const rfca_rule* a, const rfca_rule* b, rfca_certificate** out) {
  return guarded([&] {
    require(a, "rule");
    require(b, "rule");
    require(out, "out");
    *out = new rfca_certificate{rfca::separate_ca_integer(a->value, b->value)};
  });
}

rfca_status rfca_separate_automata(const rfca_automaton* a,
                                   const rfca_automaton* b,
                                   rfca_certificate**    out) {
  return guarded([&] {
    require(a, "automaton");
    require(b, "automaton");
    require(out, "out");
    *out = new rfca_certificate{rfca::separate_ca_finite(a->value, b->value)};
  });
}

rfca_status rfca_separate_endomorphisms(const rfca_monoid* source,
                                        const rfca_monoid* test_target,
                                        const uint32_t*    alpha1,
                                        const uint32_t*    alpha2,
                                        size_t             length,
                                        rfca_certificate** out) {
  return guarded([&] {
    require(source, "source");
    require(out, "out");
    auto const& S = source->value;
    rfca::SemigroupMorphism const a1(S, S, images(alpha1, length), false);
    rfca::SemigroupMorphism const a2(S, S, images(alpha2, length), false);
    auto const& T = test_target != nullptr ? test_target->value : S;
    *out          = new rfca_certificate{rfca::separate_endomorphisms(T, a1, a2)};
  });
}

rfca_status rfca_certificate_from_json(const char* text, rfca_certificate** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new rfca_certificate{
        rfca::json_io::certificate_from_json(rfca::json_io::parse(text))};
  });
}

rfca_status rfca_certificate_to_json(const rfca_certificate* c, char** out) {
  return guarded([&] {
    require(c, "certificate");
    require(out, "out");
    *out = duplicate(rfca::json_io::to_json(c->value).dump(2));
  });
}

rfca_status rfca_certificate_verify(const rfca_certificate* c) {
  rfca_status status = RFCA_OK;
  rfca_status const guard = guarded([&] {
    require(c, "certificate");
    auto const result = rfca::json_io::verify_certificate(c->value);
    if (!result) {
      status = fail(RFCA_ERR_INVALID_CERTIFICATE, result.failure);
    }
  });
  return guard != RFCA_OK ? guard : status;
}

void rfca_certificate_free(rfca_certificate* c) {
  delete c;
}

////////////////////////////////////////////////////////////////////////////
// Hopficity
////////////////////////////////////////////////////////////////////////////

rfca_status rfca_malcev_check(const rfca_monoid* source,
                              const uint32_t*    psi,
                              size_t             length,
                              uint32_t           s1,
                              uint32_t           s2,
                              char**             report_json) {
  return guarded([&] {
    require(source, "source");
    require(report_json, "out");
    auto const&                   S = source->value;
    rfca::SemigroupMorphism const endo(S, S, images(psi, length), false);
    auto const report = rfca::malcev_hopf_check(endo, s1, s2);
    *report_json      = duplicate(rfca::json_io::to_json(report).dump(2));
  });
}

}  // extern "C"
