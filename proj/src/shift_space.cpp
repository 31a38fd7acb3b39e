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

#include "rfca/shift_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rfca {

  Alphabet::Alphabet(std::uint32_t size) : _size(size) {
    if (size == 0) {
      throw Error(ErrorKind::invalid_argument, "alphabet must be nonempty");
    }
  }

  std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
      if (base != 0 && result > cap / base) {
        throw CapExceeded(std::to_string(base) + "^" + std::to_string(exponent)
                          + " exceeds the enumeration cap of " + std::to_string(cap));
      }
      result *= base;
    }
    if (result > cap) {
      throw CapExceeded(std::to_string(base) + "^" + std::to_string(exponent)
                        + " exceeds the enumeration cap of " + std::to_string(cap));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Configuration / PeriodicWord
  ////////////////////////////////////////////////////////////////////////

  Configuration::Configuration(FiniteMonoid monoid, std::vector<symbol_type> values)
      : _monoid(std::move(monoid)), _values(std::move(values)) {
    if (_values.size() != _monoid.size()) {
      throw Error(ErrorKind::mismatch,
                  "configuration has " + std::to_string(_values.size())
                      + " values but the monoid has " + std::to_string(_monoid.size())
                      + " elements");
    }
  }

  PeriodicWord::PeriodicWord(std::vector<symbol_type> word) : _word(std::move(word)) {
    if (_word.empty()) {
      throw Error(ErrorKind::invalid_argument, "a periodic word has period at least 1");
    }
  }

  symbol_type PeriodicWord::at(std::int64_t k) const noexcept {
    auto const n = static_cast<std::int64_t>(_word.size());
    return _word[static_cast<std::size_t>(((k % n) + n) % n)];
  }

  bool PeriodicWord::operator==(PeriodicWord const& other) const {
    std::size_t const l = std::lcm(period(), other.period());
    for (std::size_t i = 0; i < l; ++i) {
      if (_word[i % period()] != other._word[i % other.period()]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // ConfigurationSpace
  ////////////////////////////////////////////////////////////////////////

  ConfigurationSpace::ConfigurationSpace(FiniteMonoid  monoid,
                                         Alphabet      alphabet,
                                         std::uint64_t cap)
      : _monoid(std::move(monoid)),
        _alphabet(alphabet),
        _count(checked_power(alphabet.size(), _monoid.size(), cap)),
        _shift(_monoid.size() * _count) {
    std::size_t const        n = _monoid.size();
    std::vector<symbol_type> shifted(n);
    for (std::size_t x = 0; x < _count; ++x) {
      auto const values = values_of(x);
      for (element_type m = 0; m < n; ++m) {
        for (element_type mp = 0; mp < n; ++mp) {
          shifted[mp] = values[_monoid.product(mp, m)];
        }
        _shift[m * _count + x] = index_of(shifted);
      }
    }
  }

  std::size_t ConfigurationSpace::index_of(std::span<symbol_type const> values) const {
    if (values.size() != _monoid.size()) {
      throw Error(ErrorKind::mismatch, "configuration length does not match the monoid");
    }
    std::size_t index = 0;
    for (auto v : values) {
      if (v >= _alphabet.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "symbol " + std::to_string(v) + " is outside the alphabet");
      }
      index = index * _alphabet.size() + v;
    }
    return index;
  }

  std::size_t ConfigurationSpace::index_of(Configuration const& x) const {
    if (!(x.monoid() == _monoid)) {
      throw Error(ErrorKind::mismatch, "configuration is over a different monoid");
    }
    return index_of(x.values());
  }

  std::vector<symbol_type> ConfigurationSpace::values_of(std::size_t index) const {
    std::vector<symbol_type> values(_monoid.size());
    for (std::size_t i = values.size(); i-- > 0;) {
      values[i] = static_cast<symbol_type>(index % _alphabet.size());
      index /= _alphabet.size();
    }
    return values;
  }

  Configuration ConfigurationSpace::configuration(std::size_t index) const {
    return Configuration(_monoid, values_of(index));
  }

  ////////////////////////////////////////////////////////////////////////
  // Shift, orbits
  ////////////////////////////////////////////////////////////////////////

  Configuration shift(element_type m, Configuration const& x) {
    FiniteMonoid const& M = x.monoid();
    if (m >= M.size()) {
      throw Error(ErrorKind::index_out_of_range,
                  "element " + std::to_string(m) + " is not in the monoid");
    }
    std::vector<symbol_type> values(M.size());
    for (element_type mp = 0; mp < M.size(); ++mp) {
      values[mp] = x(M.product(mp, m));
    }
    return Configuration(M, std::move(values));
  }

  PeriodicWord shift(std::int64_t k, PeriodicWord const& y) {
    std::vector<symbol_type> word(y.period());
    for (std::size_t i = 0; i < word.size(); ++i) {
      word[i] = y.at(static_cast<std::int64_t>(i) + k);
    }
    return PeriodicWord(std::move(word));
  }

  std::vector<Configuration> orbit(Configuration const& x) {
    std::vector<Configuration> out;
    for (element_type m = 0; m < x.monoid().size(); ++m) {
      Configuration y = shift(m, x);
      if (std::find(out.begin(), out.end(), y) == out.end()) {
        out.push_back(std::move(y));
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.values() < b.values();
    });
    return out;
  }

  std::vector<PeriodicWord> orbit(PeriodicWord const& y) {
    std::vector<PeriodicWord> out;
    for (std::size_t k = 0; k < y.period(); ++k) {
      PeriodicWord z = shift(static_cast<std::int64_t>(k), y);
      if (std::find(out.begin(), out.end(), z) == out.end()) {
        out.push_back(std::move(z));
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.representation_less(b);
    });
    return out;
  }

  bool is_periodic(Configuration const&) noexcept {
    return true;
  }

  bool is_periodic(PeriodicWord const&) noexcept {
    return true;
  }

  Congruence orbit_congruence(FiniteMonoid const& M, std::span<Configuration const> Y) {
    if (Y.empty()) {
      throw Error(ErrorKind::invalid_argument, "orbit congruence needs a nonempty set");
    }
    // signature[m][j] = position of shift(m, Y[j]) in Y
    std::vector<std::vector<std::size_t>> signature(M.size(),
                                                    std::vector<std::size_t>(Y.size()));
    for (std::size_t j = 0; j < Y.size(); ++j) {
      if (!(Y[j].monoid() == M)) {
        throw Error(ErrorKind::mismatch, "configuration is over a different monoid");
      }
      for (element_type m = 0; m < M.size(); ++m) {
        auto const y  = shift(m, Y[j]);
        auto const it = std::find(Y.begin(), Y.end(), y);
        if (it == Y.end()) {
          throw NotInvariant(m, j);
        }
        signature[m][j] = static_cast<std::size_t>(it - Y.begin());
      }
    }
    std::map<std::vector<std::size_t>, element_type> label;
    std::vector<element_type>                        class_of(M.size());
    for (element_type m = 0; m < M.size(); ++m) {
      auto [it, inserted] = label.emplace(signature[m], static_cast<element_type>(label.size()));
      class_of[m]         = it->second;
    }
    return Congruence(M, class_of);
  }

  std::size_t integer_orbit_congruence(PeriodicWord const& y) {
    std::size_t const n = y.period();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool ok = true;
      for (std::size_t i = d; ok && i < n; ++i) {
        ok = y.word()[i] == y.word()[i % d];
      }
      if (ok) {
        return d;
      }
    }
    return n;
  }

  ////////////////////////////////////////////////////////////////////////
  // Inv(gamma)
  ////////////////////////////////////////////////////////////////////////

  std::vector<Configuration> inv(FiniteMonoid const& M,
                                 Congruence const&   gamma,
                                 Alphabet            A,
                                 std::uint64_t       cap) {
    if (!(gamma.monoid() == M)) {
      throw Error(ErrorKind::mismatch, "congruence is over a different monoid");
    }
    std::uint64_t const count = checked_power(A.size(), gamma.index(), cap);
    // Colorings of the classes, class 0 most significant. Since classes are
    // numbered by first occurrence this coincides with configuration order.
    std::vector<Configuration> out;
    out.reserve(count);
    std::vector<symbol_type> coloring(gamma.index(), 0);
    std::vector<symbol_type> values(M.size());
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = coloring.size(); i-- > 0;) {
        coloring[i] = static_cast<symbol_type>(rest % A.size());
        rest /= A.size();
      }
      for (element_type m = 0; m < M.size(); ++m) {
        values[m] = coloring[gamma.class_of(m)];
      }
      out.emplace_back(M, values);
    }
    return out;
  }

  std::vector<PeriodicWord> inv_integer(std::size_t p, Alphabet A, std::uint64_t cap) {
    if (p == 0) {
      throw Error(ErrorKind::invalid_argument, "period must be positive");
    }
    std::uint64_t const       count = checked_power(A.size(), p, cap);
    std::vector<PeriodicWord> out;
    out.reserve(count);
    std::vector<symbol_type> word(p);
    for (std::uint64_t c = 0; c < count; ++c) {
      std::uint64_t rest = c;
      for (std::size_t i = p; i-- > 0;) {
        word[i] = static_cast<symbol_type>(rest % A.size());
        rest /= A.size();
      }
      out.emplace_back(word);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cylinders
  ////////////////////////////////////////////////////////////////////////

  bool in_cylinder(PeriodicWord const& y, std::span<CylinderConstraint const> constraints) {
    return std::all_of(constraints.begin(), constraints.end(), [&](auto const& c) {
      return y.at(c.position) == c.symbol;
    });
  }

  PeriodicWord periodic_cylinder_witness(std::span<CylinderConstraint const> constraints,
                                         Alphabet                            A) {
    if (constraints.empty()) {
      return PeriodicWord({0});
    }
    auto const [lo, hi] = std::minmax_element(
        constraints.begin(), constraints.end(), [](auto const& a, auto const& b) {
          return a.position < b.position;
        });
    auto const width = static_cast<std::size_t>(hi->position - lo->position + 1);
    if (width > default_enumeration_cap) {
      throw CapExceeded("cylinder window is too wide");
    }
    // Positions of the window have pairwise distinct residues mod width, so
    // each constraint claims its own slot of the word.
    std::vector<symbol_type> word(width, 0);
    std::vector<bool>        fixed(width, false);
    auto const               n = static_cast<std::int64_t>(width);
    for (auto const& c : constraints) {
      if (c.symbol >= A.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "symbol " + std::to_string(c.symbol) + " is outside the alphabet");
      }
      auto const slot = static_cast<std::size_t>(((c.position % n) + n) % n);
      if (fixed[slot] && word[slot] != c.symbol) {
        throw Error(ErrorKind::contradictory_constraints,
                    "position " + std::to_string(c.position)
                        + " is constrained to two different symbols");
      }
      fixed[slot] = true;
      word[slot]  = c.symbol;
    }
    return PeriodicWord(std::move(word));
  }

}  // namespace rfca
