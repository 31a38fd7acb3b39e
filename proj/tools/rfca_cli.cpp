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

// rfca command-line tool. Talks to the library through the C interface only.
//
// Exit codes: 0 success, 1 input error, 2 the two inputs are not distinct,
// 3 invalid certificate, 4 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rfca/rfca.h"

namespace {

  using json = nlohmann::json;

  constexpr int exit_ok               = 0;
  constexpr int exit_input            = 1;
  constexpr int exit_not_distinct     = 2;
  constexpr int exit_invalid          = 3;
  constexpr int exit_internal         = 4;

  struct Failure {
    int         code;
    std::string message;
  };

  int exit_code(rfca_status status) {
    switch (status) {
      case RFCA_OK:
        return exit_ok;
      case RFCA_ERR_NOT_DISTINCT:
        return exit_not_distinct;
      case RFCA_ERR_INVALID_CERTIFICATE:
        return exit_invalid;
      case RFCA_ERR_INTERNAL:
        return exit_internal;
      default:
        return exit_input;
    }
  }

  void check(rfca_status status) {
    if (status != RFCA_OK) {
      throw Failure{exit_code(status), rfca_last_error()};
    }
  }

  template <typename T, void (*Free)(T*)>
  struct Deleter {
    void operator()(T* p) const noexcept {
      Free(p);
    }
  };

  using Monoid      = std::unique_ptr<rfca_monoid, Deleter<rfca_monoid, rfca_monoid_free>>;
  using Rule        = std::unique_ptr<rfca_rule, Deleter<rfca_rule, rfca_rule_free>>;
  using Automaton   = std::unique_ptr<rfca_automaton, Deleter<rfca_automaton, rfca_automaton_free>>;
  using Certificate = std::unique_ptr<rfca_certificate, Deleter<rfca_certificate, rfca_certificate_free>>;
  using String      = std::unique_ptr<char, Deleter<char, rfca_string_free>>;

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Failure{exit_input, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_output(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text << '\n')) {
      throw Failure{exit_input, "cannot write " + path};
    }
  }

  std::string take(char* s) {
    String      owned(s);
    std::string out(owned.get());
    return out;
  }

  Monoid catalog_monoid(std::string const& name) {
    rfca_monoid* m = nullptr;
    check(rfca_monoid_from_catalog(name.c_str(), &m));
    return Monoid(m);
  }

  Monoid file_monoid(std::string const& path) {
    rfca_monoid* m = nullptr;
    check(rfca_monoid_from_json(read_file(path).c_str(), &m));
    return Monoid(m);
  }

  /// A catalog name, or else a path to a monoid JSON file.
  Monoid any_monoid(std::string const& text) {
    rfca_monoid* m = nullptr;
    if (rfca_monoid_from_catalog(text.c_str(), &m) == RFCA_OK) {
      return Monoid(m);
    }
    return file_monoid(text);
  }

  Monoid monoid_from_options(std::string const& catalog, std::string const& path) {
    if (!catalog.empty() && !path.empty()) {
      throw Failure{exit_input, "give either a catalog name or a monoid file, not both"};
    }
    if (!catalog.empty()) {
      return catalog_monoid(catalog);
    }
    if (!path.empty()) {
      return any_monoid(path);
    }
    throw Failure{exit_input, "no monoid given (use --catalog NAME or a JSON file)"};
  }

  /// "identity", "constant" (everything to the identity), or "i0,i1,...".
  std::vector<uint32_t> endomorphism(rfca_monoid const* m, std::string const& text) {
    std::size_t const     n = rfca_monoid_size(m);
    std::vector<uint32_t> images(n);
    if (text == "identity" || text == "id") {
      std::iota(images.begin(), images.end(), 0);
    } else if (text == "constant") {
      std::fill(images.begin(), images.end(), rfca_monoid_identity(m));
    } else {
      images.clear();
      std::stringstream ss(text);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t used  = 0;
          auto const  value = std::stoul(item, &used);
          if (used != item.size()) {
            throw std::invalid_argument(item);
          }
          images.push_back(static_cast<uint32_t>(value));
        } catch (std::exception const&) {
          throw Failure{exit_input, "bad endomorphism entry '" + item + "'"};
        }
      }
      if (images.size() != n) {
        throw Failure{exit_input,
                      "endomorphism needs " + std::to_string(n) + " images, got "
                          + std::to_string(images.size())};
      }
    }
    return images;
  }

  std::string list(std::vector<uint32_t> const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "]";
  }

  std::string list(json const& v) {
    return list(v.get<std::vector<uint32_t>>());
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  struct MonoidCheckOptions {
    std::string catalog;
    std::string input;
  };

  int monoid_check(MonoidCheckOptions const& opt) {
    Monoid m;
    try {
      m = monoid_from_options(opt.catalog, opt.input);
    } catch (Failure const& f) {
      throw Failure{f.code, "invalid: " + f.message};
    }
    std::size_t const n = rfca_monoid_size(m.get());
    std::size_t       count = 0;
    check(rfca_monoid_generating_set(m.get(), nullptr, 0, &count));
    std::vector<uint32_t> gens(count);
    check(rfca_monoid_generating_set(m.get(), gens.data(), gens.size(), &count));

    std::cout << "valid, size " << n << ", " << count
              << (count == 1 ? " generator" : " generators") << '\n';
    std::cout << "identity: " << rfca_monoid_identity(m.get()) << '\n';
    std::cout << "associative: yes\n";
    std::cout << "commutative: " << (rfca_monoid_is_commutative(m.get()) ? "yes" : "no") << '\n';
    std::cout << "generating set: " << list(gens) << '\n';
    if (n <= 4) {
      std::size_t congruences = 0;
      check(rfca_monoid_congruence_count(m.get(), &congruences));
      std::cout << "congruences: " << congruences << '\n';
    } else {
      std::cout << "congruences: not counted (size > 4)\n";
    }
    return exit_ok;
  }

  struct CaEnumerateOptions {
    std::string catalog;
    std::string input;
    uint32_t    alphabet = 2;
    uint64_t    cap      = uint64_t(1) << 20;
    bool        graphs   = false;
  };

  int ca_enumerate(CaEnumerateOptions const& opt) {
    Monoid const m       = monoid_from_options(opt.catalog, opt.input);
    char*        listing = nullptr;
    check(rfca_ca_enumerate(m.get(), opt.alphabet, opt.cap, opt.graphs ? 1 : 0, &listing));
    json const j = json::parse(take(listing));
    std::cout << j["count"].get<std::size_t>() << " cellular automata\n";
    std::cout << "configurations: " << j["configurations"].get<std::size_t>() << '\n';
    std::cout << "identity present: " << (j["identity_present"].get<bool>() ? "yes" : "no")
              << '\n';
    std::cout << "closed under composition: " << (j["closed"].get<bool>() ? "yes" : "no")
              << " (" << j["closure_check"].get<std::string>() << ")\n";
    if (opt.graphs) {
      for (auto const& g : j["graphs"]) {
        std::cout << list(g) << '\n';
      }
    }
    return exit_ok;
  }

  struct SeparateOptions {
    std::vector<unsigned>    wolfram;
    std::vector<std::string> rules;
    std::vector<std::string> maps;
    std::string              monoid;
    uint32_t                 alphabet = 0;
    bool                     verify   = false;
    std::string              output;
  };

  std::string emit(Certificate const& cert, bool verify, std::string const& output) {
    if (verify) {
      check(rfca_certificate_verify(cert.get()));
    }
    char* text = nullptr;
    check(rfca_certificate_to_json(cert.get(), &text));
    std::string const out = take(text);
    write_output(output, out);
    return out;
  }

  int separate(SeparateOptions const& opt) {
    int const given = (opt.wolfram.empty() ? 0 : 1) + (opt.rules.empty() ? 0 : 1)
                      + (opt.maps.empty() ? 0 : 1);
    if (given != 1) {
      throw Failure{exit_input, "give exactly one of --wolfram, --rule or --map"};
    }
    rfca_certificate* raw    = nullptr;
    rfca_status       status = RFCA_OK;
    if (!opt.wolfram.empty() || !opt.rules.empty()) {
      Rule r1, r2;
      for (std::size_t i = 0; i < 2; ++i) {
        rfca_rule* r = nullptr;
        if (!opt.wolfram.empty()) {
          check(rfca_rule_from_wolfram(opt.wolfram[i], &r));
        } else {
          check(rfca_rule_from_json(read_file(opt.rules[i]).c_str(), &r));
        }
        (i == 0 ? r1 : r2).reset(r);
      }
      status = rfca_separate_rules(r1.get(), r2.get(), &raw);
    } else {
      Monoid const m = opt.monoid.empty() ? Monoid() : any_monoid(opt.monoid);
      Automaton    a1, a2;
      for (std::size_t i = 0; i < 2; ++i) {
        rfca_automaton* a = nullptr;
        check(rfca_automaton_from_json(read_file(opt.maps[i]).c_str(), m.get(), opt.alphabet, &a));
        (i == 0 ? a1 : a2).reset(a);
      }
      status = rfca_separate_automata(a1.get(), a2.get(), &raw);
    }
    if (status == RFCA_ERR_NOT_DISTINCT) {
      throw Failure{exit_not_distinct,
                    opt.maps.empty() ? "rules define the same map" : "automata define the same map"};
    }
    check(status);
    Certificate const cert(raw);
    emit(cert, opt.verify, opt.output);
    return exit_ok;
  }

  int verify(std::string const& path) {
    rfca_certificate* raw = nullptr;
    check(rfca_certificate_from_json(read_file(path).c_str(), &raw));
    Certificate const cert(raw);
    rfca_status const status = rfca_certificate_verify(cert.get());
    if (status == RFCA_ERR_INVALID_CERTIFICATE) {
      throw Failure{exit_invalid, std::string("invalid certificate: ") + rfca_last_error()};
    }
    check(status);
    std::cout << "certificate valid\n";
    return exit_ok;
  }

  struct MalcevOptions {
    std::string           catalog;
    std::string           input;
    std::string           endo;
    std::vector<uint32_t> pair;
    std::string           json_output;
  };

  int malcev(MalcevOptions const& opt) {
    Monoid const m      = monoid_from_options(opt.catalog, opt.input);
    auto const   psi    = endomorphism(m.get(), opt.endo);
    char*        report = nullptr;
    check(rfca_malcev_check(m.get(), psi.data(), psi.size(), opt.pair[0], opt.pair[1], &report));
    std::string const text = take(report);
    json const        j    = json::parse(text);

    std::cout << "psi = " << list(psi) << ", s1 = " << opt.pair[0] << ", s2 = " << opt.pair[1]
              << '\n';
    std::cout << "separating morphism rho = " << list(j["separating_morphism"])
              << " into T of size " << j["target"]["size"].get<std::size_t>() << '\n';
    std::cout << "|Mor(S,T)| = " << j["morphisms"].size() << '\n';
    std::cout << "Phi(u) = u o psi:\n";
    for (std::size_t i = 0; i < j["morphisms"].size(); ++i) {
      std::size_t const k = j["phi"][i].get<std::size_t>();
      std::cout << "  #" << i << " " << list(j["morphisms"][i]) << " -> #" << k << " "
                << list(j["morphisms"][k]) << '\n';
    }
    bool const surjective = j["psi_surjective"].get<bool>();
    std::cout << "psi surjective: " << (surjective ? "yes" : "no") << '\n';
    std::cout << "Phi injective: "
              << (j["phi_injective"].get<bool>() ? "yes (a permutation of Mor(S,T))" : "no")
              << '\n';
    if (surjective) {
      std::size_t const u0 = j["u0"].get<std::size_t>();
      std::cout << "u0 = #" << u0 << " " << list(j["morphisms"][u0]) << " with u0 o psi = rho\n";
      std::cout << "conclusion: psi(" << opt.pair[0] << ") = " << j["psi_s1"].get<uint32_t>()
                << (j["conclusion"].get<bool>() ? " != " : " == ") << j["psi_s2"].get<uint32_t>()
                << " = psi(" << opt.pair[1] << ")\n";
    } else {
      std::cout << "hypothesis fails: psi is not surjective, no conclusion drawn\n";
    }
    if (!opt.json_output.empty()) {
      write_output(opt.json_output, text);
    }
    return exit_ok;
  }

  struct EndSeparateOptions {
    std::string catalog;
    std::string input;
    std::string target;
    std::string endo1;
    std::string endo2;
    bool        verify = false;
    std::string output;
  };

  int end_separate(EndSeparateOptions const& opt) {
    Monoid const m  = monoid_from_options(opt.catalog, opt.input);
    Monoid const t  = opt.target.empty() ? Monoid() : any_monoid(opt.target);
    auto const   a1 = endomorphism(m.get(), opt.endo1);
    auto const   a2 = endomorphism(m.get(), opt.endo2);

    rfca_certificate* raw    = nullptr;
    rfca_status const status = rfca_separate_endomorphisms(
        m.get(), t.get(), a1.data(), a2.data(), a1.size(), &raw);
    if (status == RFCA_ERR_NOT_DISTINCT) {
      throw Failure{exit_not_distinct, "endomorphisms coincide"};
    }
    check(status);
    Certificate const cert(raw);
    std::string const text = emit(cert, opt.verify, opt.output);
    if (!opt.output.empty() && opt.output != "-") {
      json const j = json::parse(text);
      std::cout << "quotient of size " << j["quotient"]["size"].get<std::size_t>()
                << ", induced maps " << list(j["induced1"]) << " and " << list(j["induced2"])
                << " differ at [" << j["witness_element"].get<uint32_t>() << "]\n";
    }
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rfca: finite-quotient certificates for monoids and cellular automata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rfca_version());

  // monoid check
  MonoidCheckOptions monoid_opt;
  auto* monoid_cmd = app.add_subcommand("monoid", "Finite monoids");
  monoid_cmd->require_subcommand(1);
  auto* check_cmd = monoid_cmd->add_subcommand("check", "Validate a monoid and summarize it");
  check_cmd->add_option("input", monoid_opt.input, "Monoid JSON file");
  check_cmd->add_option("--catalog", monoid_opt.catalog, "Built-in monoid name");

  // ca enumerate
  CaEnumerateOptions ca_opt;
  auto* ca_cmd = app.add_subcommand("ca", "Cellular automata over finite monoids");
  ca_cmd->require_subcommand(1);
  auto* enum_cmd = ca_cmd->add_subcommand("enumerate", "List CA(M, A)");
  enum_cmd->add_option("input", ca_opt.input, "Monoid JSON file");
  enum_cmd->add_option("--catalog", ca_opt.catalog, "Built-in monoid name");
  enum_cmd->add_option("--alphabet", ca_opt.alphabet, "Alphabet size")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--cap", ca_opt.cap, "Largest |A^M| to enumerate");
  enum_cmd->add_flag("--graphs", ca_opt.graphs, "Print every graph");

  // separate
  SeparateOptions sep_opt;
  auto* sep_cmd = app.add_subcommand("separate", "Separate two cellular automata");
  sep_cmd->add_option("--wolfram", sep_opt.wolfram, "Two elementary rule numbers")
      ->expected(2)
      ->check(CLI::Range(0, 255));
  sep_cmd->add_option("--rule", sep_opt.rules, "Two local rule JSON files")->expected(2);
  sep_cmd->add_option("--map", sep_opt.maps, "Two automaton JSON files (finite monoid)")
      ->expected(2);
  sep_cmd->add_option("--monoid", sep_opt.monoid, "Catalog name or monoid JSON file for --map");
  sep_cmd->add_option("--alphabet", sep_opt.alphabet, "Alphabet size for --map");
  sep_cmd->add_flag("--verify", sep_opt.verify, "Verify the certificate before emitting it");
  sep_cmd->add_option("-o,--output", sep_opt.output, "Write the certificate here");

  // verify
  std::string cert_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate");
  verify_cmd->add_option("certificate", cert_path, "Certificate JSON file")->required();

  // malcev
  MalcevOptions malcev_opt;
  auto* malcev_cmd = app.add_subcommand("malcev", "Hopficity argument for an endomorphism");
  malcev_cmd->add_option("input", malcev_opt.input, "Monoid JSON file");
  malcev_cmd->add_option("--catalog", malcev_opt.catalog, "Built-in monoid name");
  malcev_cmd->add_option("--endo", malcev_opt.endo, "identity | constant | i0,i1,...")->required();
  malcev_cmd->add_option("--pair", malcev_opt.pair, "Two distinct elements")->expected(2)->required();
  malcev_cmd->add_option("--json", malcev_opt.json_output, "Also write the JSON report here");

  // end-separate
  EndSeparateOptions end_opt;
  auto* end_cmd = app.add_subcommand("end-separate", "Separate two endomorphisms");
  end_cmd->add_option("input", end_opt.input, "Monoid JSON file");
  end_cmd->add_option("--catalog", end_opt.catalog, "Built-in monoid name");
  end_cmd->add_option("--target", end_opt.target, "Test target T (default: the monoid itself)");
  end_cmd->add_option("--endo1", end_opt.endo1, "identity | constant | i0,i1,...")->required();
  end_cmd->add_option("--endo2", end_opt.endo2, "identity | constant | i0,i1,...")->required();
  end_cmd->add_flag("--verify", end_opt.verify, "Verify the certificate before emitting it");
  end_cmd->add_option("-o,--output", end_opt.output, "Write the certificate here");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (check_cmd->parsed()) {
      return monoid_check(monoid_opt);
    } else if (enum_cmd->parsed()) {
      return ca_enumerate(ca_opt);
    } else if (sep_cmd->parsed()) {
      return separate(sep_opt);
    } else if (verify_cmd->parsed()) {
      return verify(cert_path);
    } else if (malcev_cmd->parsed()) {
      return malcev(malcev_opt);
    } else if (end_cmd->parsed()) {
      return end_separate(end_opt);
    }
  } catch (Failure const& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_internal;
  }
  return exit_input;
}
