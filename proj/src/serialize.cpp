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

#include "rfca/serialize.hpp"

#include <string>

#include "rfca/version.hpp"

namespace rfca::json_io {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object()) {
        throw ParseError(std::string("expected an object containing \"") + key + "\"");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return *it;
    }

    template <typename T>
    T as(json const& j, char const* what) {
      try {
        return j.get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("field \"") + what + "\" has the wrong type: " + e.what());
      }
    }

    template <typename T>
    T get(json const& j, char const* key) {
      return as<T>(field(j, key), key);
    }

    json meta() {
      return {{"producer", std::string("rfca ") + version_string}};
    }

    MonoidTable monoid_table_from_json(json const& j) {
      if (j.is_string()) {
        return MonoidTable::of(catalog::by_name(j.get<std::string>()));
      }
      MonoidTable out;
      out.size     = get<std::size_t>(j, "size");
      out.identity = get<element_type>(j, "identity");
      for (auto const& row : as<std::vector<std::vector<element_type>>>(field(j, "table"), "table")) {
        if (row.size() != out.size) {
          throw ParseError("monoid table is not square");
        }
        out.table.insert(out.table.end(), row.begin(), row.end());
      }
      if (out.table.size() != out.size * out.size) {
        throw ParseError("monoid table is not square");
      }
      return out;
    }

    json to_json(MonoidTable const& t) {
      json table = json::array();
      for (std::size_t i = 0; i < t.size; ++i) {
        table.push_back(std::vector<element_type>(t.table.begin() + i * t.size,
                                                  t.table.begin() + (i + 1) * t.size));
      }
      return {{"size", t.size}, {"identity", t.identity}, {"table", table}};
    }

    json to_json(RuleTable const& r) {
      return {{"radius", r.radius}, {"alphabet", r.alphabet}, {"table", r.table}};
    }

    RuleTable rule_table_from_json(json const& j) {
      if (j.is_object() && j.contains("wolfram")) {
        return RuleTable::of(LocalRule::wolfram(get<unsigned>(j, "wolfram")));
      }
      return RuleTable{get<std::size_t>(j, "radius"),
                       get<std::uint32_t>(j, "alphabet"),
                       get<std::vector<symbol_type>>(j, "table")};
    }

    json word_json(std::vector<symbol_type> const& w) {
      return {{"period", w.size()}, {"word", w}};
    }

    std::vector<symbol_type> word_from_json(json const& j) {
      auto word = get<std::vector<symbol_type>>(j, "word");
      if (j.contains("period") && as<std::size_t>(j["period"], "period") != word.size()) {
        throw ParseError("period does not match the word length");
      }
      return word;
    }

    json transformation_json(std::vector<std::size_t> const& mapping) {
      return {{"domain_size", mapping.size()}, {"mapping", mapping}};
    }

    std::vector<std::size_t> transformation_from_json(json const& j) {
      auto mapping = get<std::vector<std::size_t>>(j, "mapping");
      if (j.contains("domain_size")
          && as<std::size_t>(j["domain_size"], "domain_size") != mapping.size()) {
        throw ParseError("domain_size does not match the mapping length");
      }
      return mapping;
    }

    json header(char const* kind) {
      return {{"schema_version", certificate_schema_version}, {"kind", kind}, {"meta", meta()}};
    }
  }  // namespace

  json parse(std::string_view text) {
    try {
      return json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic objects
  ////////////////////////////////////////////////////////////////////////

  json to_json(FiniteMonoid const& M) {
    return to_json(MonoidTable::of(M));
  }

  FiniteMonoid monoid_from_json(json const& j) {
    return monoid_table_from_json(j).to_monoid();
  }

  json to_json(LocalRule const& rule) {
    return to_json(RuleTable::of(rule));
  }

  LocalRule rule_from_json(json const& j) {
    return rule_table_from_json(j).to_rule();
  }

  json to_json(PeriodicWord const& y) {
    return word_json(y.word());
  }

  PeriodicWord periodic_word_from_json(json const& j) {
    return PeriodicWord(word_from_json(j));
  }

  json to_json(Configuration const& x) {
    return {{"monoid", to_json(x.monoid())}, {"values", x.values()}};
  }

  Configuration configuration_from_json(json const& j) {
    return Configuration(monoid_from_json(field(j, "monoid")),
                         get<std::vector<symbol_type>>(j, "values"));
  }

  json to_json(EquivariantMap const& tau) {
    return {{"monoid", to_json(tau.monoid())},
            {"alphabet", tau.alphabet().size()},
            {"graph", tau.graph()}};
  }

  EquivariantMap equivariant_map_from_json(json const&                 j,
                                           std::optional<FiniteMonoid> monoid,
                                           std::optional<Alphabet>     alphabet) {
    if (j.is_object() && j.contains("monoid")) {
      FiniteMonoid const M = monoid_from_json(j["monoid"]);
      if (monoid && !(*monoid == M)) {
        throw ParseError("automaton is over a different monoid than requested");
      }
      monoid = M;
    }
    if (j.is_object() && j.contains("alphabet")) {
      Alphabet const A(as<std::uint32_t>(j["alphabet"], "alphabet"));
      if (alphabet && !(*alphabet == A)) {
        throw ParseError("automaton uses a different alphabet than requested");
      }
      alphabet = A;
    }
    if (!monoid || !alphabet) {
      throw ParseError("automaton needs a monoid and an alphabet");
    }
    return EquivariantMap(*monoid, *alphabet, get<std::vector<std::size_t>>(j, "graph"));
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  json to_json(FiniteSeparationCertificate const& cert) {
    json j = header(kind_finite);
    j["monoid"]     = to_json(cert.monoid);
    j["alphabet"]   = cert.alphabet;
    j["tau1"]       = {{"graph", cert.tau1}};
    j["tau2"]       = {{"graph", cert.tau2}};
    j["witness"]    = {{"values", cert.witness}};
    j["congruence"] = {{"class_of", cert.congruence}};
    json X          = json::array();
    for (auto const& x : cert.invariant_set) {
      X.push_back({{"values", x}});
    }
    j["invariant_set"] = X;
    j["image1"]        = transformation_json(cert.image1);
    j["image2"]        = transformation_json(cert.image2);
    return j;
  }

  json to_json(IntegerSeparationCertificate const& cert) {
    json j       = header(kind_integer);
    j["rule1"]   = to_json(cert.rule1);
    j["rule2"]   = to_json(cert.rule2);
    j["witness"] = word_json(cert.witness);
    j["modulus"] = cert.modulus;
    json X       = json::array();
    for (auto const& x : cert.invariant_set) {
      X.push_back(word_json(x));
    }
    j["invariant_set"] = X;
    j["image1"]        = transformation_json(cert.image1);
    j["image2"]        = transformation_json(cert.image2);
    return j;
  }

  json to_json(EndSeparationCertificate const& cert) {
    json j                   = header(kind_end);
    j["source"]              = to_json(cert.source);
    j["test_target"]         = to_json(cert.test_target);
    j["alpha1"]              = cert.alpha1;
    j["alpha2"]              = cert.alpha2;
    j["witness_element"]     = cert.witness_element;
    j["separating_morphism"] = cert.separating_morphism;
    j["gamma"]               = {{"class_of", cert.gamma}};
    j["quotient"]            = to_json(cert.quotient);
    j["projection"]          = cert.projection;
    j["induced1"]            = cert.induced1;
    j["induced2"]            = cert.induced2;
    return j;
  }

  json to_json(AnyCertificate const& cert) {
    return std::visit([](auto const& c) { return to_json(c); }, cert);
  }

  AnyCertificate certificate_from_json(json const& j) {
    int const version = get<int>(j, "schema_version");
    if (version != certificate_schema_version) {
      throw ParseError("unsupported schema_version " + std::to_string(version));
    }
    auto const kind = get<std::string>(j, "kind");
    if (kind == kind_finite) {
      FiniteSeparationCertificate cert;
      cert.monoid     = monoid_table_from_json(field(j, "monoid"));
      cert.alphabet   = get<std::uint32_t>(j, "alphabet");
      cert.tau1       = get<std::vector<std::size_t>>(field(j, "tau1"), "graph");
      cert.tau2       = get<std::vector<std::size_t>>(field(j, "tau2"), "graph");
      cert.witness    = get<std::vector<symbol_type>>(field(j, "witness"), "values");
      cert.congruence = get<std::vector<element_type>>(field(j, "congruence"), "class_of");
      for (auto const& x : as<std::vector<json>>(field(j, "invariant_set"), "invariant_set")) {
        cert.invariant_set.push_back(get<std::vector<symbol_type>>(x, "values"));
      }
      cert.image1 = transformation_from_json(field(j, "image1"));
      cert.image2 = transformation_from_json(field(j, "image2"));
      return cert;
    } else if (kind == kind_integer) {
      IntegerSeparationCertificate cert;
      cert.rule1   = rule_table_from_json(field(j, "rule1"));
      cert.rule2   = rule_table_from_json(field(j, "rule2"));
      cert.witness = word_from_json(field(j, "witness"));
      cert.modulus = get<std::size_t>(j, "modulus");
      for (auto const& x : as<std::vector<json>>(field(j, "invariant_set"), "invariant_set")) {
        cert.invariant_set.push_back(word_from_json(x));
      }
      cert.image1 = transformation_from_json(field(j, "image1"));
      cert.image2 = transformation_from_json(field(j, "image2"));
      return cert;
    } else if (kind == kind_end) {
      EndSeparationCertificate cert;
      cert.source              = monoid_table_from_json(field(j, "source"));
      cert.test_target         = monoid_table_from_json(field(j, "test_target"));
      cert.alpha1              = get<std::vector<element_type>>(j, "alpha1");
      cert.alpha2              = get<std::vector<element_type>>(j, "alpha2");
      cert.witness_element     = get<element_type>(j, "witness_element");
      cert.separating_morphism = get<std::vector<element_type>>(j, "separating_morphism");
      cert.gamma               = get<std::vector<element_type>>(field(j, "gamma"), "class_of");
      cert.quotient            = monoid_table_from_json(field(j, "quotient"));
      cert.projection          = get<std::vector<element_type>>(j, "projection");
      cert.induced1            = get<std::vector<element_type>>(j, "induced1");
      cert.induced2            = get<std::vector<element_type>>(j, "induced2");
      return cert;
    }
    throw ParseError("unknown certificate kind \"" + kind + "\"");
  }

  VerificationResult verify_certificate(AnyCertificate const& cert) {
    return std::visit([](auto const& c) { return rfca::verify_certificate(c); }, cert);
  }

  json to_json(HopfReport const& r) {
    json morphisms = json::array();
    for (auto const& u : r.morphisms) {
      morphisms.push_back(u.images());
    }
    json j = {{"target", to_json(r.target)},
              {"separating_morphism", r.separating.images()},
              {"morphisms", morphisms},
              {"phi", r.phi},
              {"psi_surjective", r.psi_surjective},
              {"phi_injective", r.phi_injective},
              {"s1", r.s1},
              {"s2", r.s2},
              {"psi_s1", r.psi_s1},
              {"psi_s2", r.psi_s2},
              {"hypothesis_holds", r.psi_surjective}};
    j["u0"]         = r.u0 ? json(*r.u0) : json(nullptr);
    j["conclusion"] = r.conclusion ? json(*r.conclusion) : json(nullptr);
    return j;
  }

}  // namespace rfca::json_io
