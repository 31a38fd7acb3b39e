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
 * JSON encodings.
 *
 *   monoid         {"size": n, "identity": i, "table": [[...], ...]}
 *                  or a catalog name as a JSON string
 *   local rule     {"radius": r, "alphabet": a, "table": [...]}
 *                  or {"wolfram": N}
 *   periodic word  {"period": n, "word": [...]}
 *   configuration  {"monoid": <monoid>, "values": [...]}
 *   automaton      {"monoid": <monoid>, "alphabet": a, "graph": [...]}
 *
 * Certificates carry "schema_version" and "kind". Anything under "meta" is
 * informational and ignored when reading.
 */

#ifndef RFCA_SERIALIZE_HPP
#define RFCA_SERIALIZE_HPP

#include <optional>
#include <variant>

#include "json.hpp"
#include "rfca/witness.hpp"

namespace rfca::json_io {

  using json = nlohmann::json;

  inline constexpr int certificate_schema_version = 1;

  inline constexpr char const* kind_finite  = "ca-separation/finite";
  inline constexpr char const* kind_integer = "ca-separation/integer";
  inline constexpr char const* kind_end     = "endomorphism-separation";

  class ParseError : public Error {
   public:
    explicit ParseError(std::string const& what) : Error(ErrorKind::parse_error, what) {}
  };

  /// Parses text, translating library exceptions into ParseError.
  json parse(std::string_view text);

  json         to_json(FiniteMonoid const& M);
  FiniteMonoid monoid_from_json(json const& j);

  json      to_json(LocalRule const& rule);
  LocalRule rule_from_json(json const& j);

  json         to_json(PeriodicWord const& y);
  PeriodicWord periodic_word_from_json(json const& j);

  json          to_json(Configuration const& x);
  Configuration configuration_from_json(json const& j);

  json to_json(EquivariantMap const& tau);

  /// `monoid` and `alphabet` fill in fields missing from the JSON; when both
  /// are present they must agree.
  EquivariantMap equivariant_map_from_json(json const&                 j,
                                           std::optional<FiniteMonoid> monoid   = std::nullopt,
                                           std::optional<Alphabet>     alphabet = std::nullopt);

  using AnyCertificate = std::variant<FiniteSeparationCertificate,
                                      IntegerSeparationCertificate,
                                      EndSeparationCertificate>;

  json           to_json(FiniteSeparationCertificate const& cert);
  json           to_json(IntegerSeparationCertificate const& cert);
  json           to_json(EndSeparationCertificate const& cert);
  json           to_json(AnyCertificate const& cert);
  AnyCertificate certificate_from_json(json const& j);

  VerificationResult verify_certificate(AnyCertificate const& cert);

  json to_json(HopfReport const& report);

}  // namespace rfca::json_io

#endif  // RFCA_SERIALIZE_HPP
