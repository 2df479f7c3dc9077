#ifndef ENDOCHAIN_CHAIN_ENDO_HPP_
#define ENDOCHAIN_CHAIN_ENDO_HPP_

// Endomorphisms of the finite chain C_n = ({0, ..., n - 1}, max).
//
// A join-preserving self-map of a chain is the same thing as a monotone one,
// so an endomorphism is stored as its value tuple <f(0), ..., f(n - 1)>.
// Addition is the pointwise max and multiplication is composition written on
// the right: (alpha * beta)(i) = beta(alpha(i)), i.e. "first alpha, then
// beta".  Every formula elsewhere in the library assumes this order.

#include <algorithm>
#include <cassert>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace endochain {

  //! An element of the chain C_n.
  using Point = std::uint8_t;

  inline constexpr std::size_t kMaxChainSize = 255;

  class ChainEndo;

  ChainEndo make_endo(std::size_t n, std::span<int const> values);

  class ChainEndo {
   public:
    //! The identity of C_1; exists so that ChainEndo is regular.
    ChainEndo() : _values{0} {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _values.size();
    }

    [[nodiscard]] Point operator[](std::size_t i) const noexcept {
      return _values[i];
    }

    [[nodiscard]] std::span<Point const> values() const noexcept {
      return _values;
    }

    //! Lexicographic order on the value tuple. This is NOT the additive
    //! (pointwise) order; see leq() for that.
    friend auto operator<=>(ChainEndo const&, ChainEndo const&) = default;
    friend bool operator==(ChainEndo const&, ChainEndo const&)  = default;

    // Only for callers that have already established the invariants
    // (arithmetic, enumeration).  Checked in debug builds.
    static ChainEndo from_trusted(std::vector<Point> values) {
      ChainEndo result;
      result._values = std::move(values);
      assert(result.valid());
      return result;
    }

    [[nodiscard]] bool valid() const noexcept {
      std::size_t const n = _values.size();
      if (n == 0 || n > kMaxChainSize) {
        return false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (_values[i] >= n || (i > 0 && _values[i - 1] > _values[i])) {
          return false;
        }
      }
      return true;
    }

   private:
    std::vector<Point> _values;
  };

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  inline ChainEndo make_endo(std::size_t n, std::span<int const> values) {
    if (n == 0 || n > kMaxChainSize) {
      throw Error(ErrorKind::OutOfRange,
                  "chain size must be in [1, " + std::to_string(kMaxChainSize)
                      + "], found " + std::to_string(n));
    }
    if (values.size() != n) {
      throw Error(ErrorKind::LengthMismatch,
                  "expected " + std::to_string(n) + " values, found "
                      + std::to_string(values.size()));
    }
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] < 0 || static_cast<std::size_t>(values[i]) >= n) {
        throw Error(ErrorKind::OutOfRange,
                    "value " + std::to_string(values[i]) + " at position "
                        + std::to_string(i) + " is not in C_"
                        + std::to_string(n));
      }
      v[i] = static_cast<Point>(values[i]);
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (v[i - 1] > v[i]) {
        throw Error(ErrorKind::NotMonotone,
                    "values decrease at position " + std::to_string(i));
      }
    }
    return ChainEndo::from_trusted(std::move(v));
  }

  inline ChainEndo make_endo(std::size_t n, std::initializer_list<int> values) {
    return make_endo(n, std::span<int const>(values.begin(), values.size()));
  }

  inline ChainEndo make_endo(std::size_t n, std::vector<int> const& values) {
    return make_endo(n, std::span<int const>(values));
  }

  inline ChainEndo constant(std::size_t n, Point a) {
    if (n == 0 || n > kMaxChainSize || a >= n) {
      throw Error(ErrorKind::OutOfRange,
                  "constant " + std::to_string(a) + " not in C_"
                      + std::to_string(n));
    }
    return ChainEndo::from_trusted(std::vector<Point>(n, a));
  }

  inline ChainEndo identity(std::size_t n) {
    if (n == 0 || n > kMaxChainSize) {
      throw Error(ErrorKind::OutOfRange, "bad chain size " + std::to_string(n));
    }
    std::vector<Point> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<Point>(i);
    }
    return ChainEndo::from_trusted(std::move(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // Arithmetic
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void check_same_size(ChainEndo const& x, ChainEndo const& y) {
      if (x.size() != y.size()) {
        throw Error(ErrorKind::SizeMismatch,
                    "operands live on C_" + std::to_string(x.size())
                        + " and C_" + std::to_string(y.size()));
      }
    }
  }  // namespace detail

  inline ChainEndo add(ChainEndo const& x, ChainEndo const& y) {
    detail::check_same_size(x, y);
    std::vector<Point> v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = std::max(x[i], y[i]);
    }
    return ChainEndo::from_trusted(std::move(v));
  }

  //! (x * y)(i) = y(x(i)).
  inline ChainEndo mul(ChainEndo const& x, ChainEndo const& y) {
    detail::check_same_size(x, y);
    std::vector<Point> v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = y[x[i]];
    }
    return ChainEndo::from_trusted(std::move(v));
  }

  inline ChainEndo operator+(ChainEndo const& x, ChainEndo const& y) {
    return add(x, y);
  }

  inline ChainEndo operator*(ChainEndo const& x, ChainEndo const& y) {
    return mul(x, y);
  }

  inline ChainEndo power(ChainEndo const& x, std::size_t t) {
    if (t == 0) {
      throw Error(ErrorKind::RangeError, "power exponent must be >= 1");
    }
    ChainEndo result = x;
    for (std::size_t i = 1; i < t; ++i) {
      result = mul(result, x);
    }
    return result;
  }

  //! Pointwise (additive) order: x <= y iff x + y == y.
  inline bool leq(ChainEndo const& x, ChainEndo const& y) {
    detail::check_same_size(x, y);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementwise classification
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<Point> image(ChainEndo const& x) {
    std::vector<Point> result(x.values().begin(), x.values().end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  inline std::vector<Point> fixed_points(ChainEndo const& x) {
    std::vector<Point> result;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == i) {
        result.push_back(static_cast<Point>(i));
      }
    }
    return result;
  }

  //! Number of i with x(i) == v.
  inline std::size_t multiplicity(ChainEndo const& x, Point v) {
    return static_cast<std::size_t>(
        std::count(x.values().begin(), x.values().end(), v));
  }

  inline bool is_constant(ChainEndo const& x) {
    return x[0] == x[x.size() - 1];
  }

  inline bool is_idempotent(ChainEndo const& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[x[i]] != x[i]) {
        return false;
      }
    }
    return true;
  }

  //! The power trajectory of a monotone self-map of a finite chain is
  //! eventually constant, and it settles after at most n steps.
  struct PowerTrajectory {
    ChainEndo   idempotent;
    std::size_t exponent;  // least t >= 1 with x^t idempotent
  };

  inline PowerTrajectory power_trajectory(ChainEndo const& x) {
    ChainEndo   p = x;
    std::size_t t = 1;
    while (!is_idempotent(p)) {
      p = mul(p, x);
      ++t;
      // Orbits of a monotone map are monotone, hence stabilise within n - 1
      // steps.
      if (t > x.size()) {
        throw Error(ErrorKind::DomainError, "power sequence did not stabilise");
      }
    }
    return {std::move(p), t};
  }

  inline ChainEndo eventual_idempotent(ChainEndo const& x) {
    return power_trajectory(x).idempotent;
  }

  inline bool is_nilpotent_to(ChainEndo const& x, Point a) {
    if (a >= x.size()) {
      throw Error(ErrorKind::OutOfRange,
                  std::to_string(a) + " is not in C_" + std::to_string(x.size()));
    }
    ChainEndo const e = eventual_idempotent(x);
    return is_constant(e) && e[0] == a;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compact notation: "1_2 2 3" is <1, 1, 2, 3>.
  //
  //   endo := run (SP run)*
  //   run  := INT ("_" INT)?
  //
  // The first INT is the (0-based) symbol and the optional second one its
  // multiplicity; symbols strictly increase and multiplicities sum to n.
  ////////////////////////////////////////////////////////////////////////

  struct Run {
    Point       symbol;
    std::size_t multiplicity;

    friend bool operator==(Run const&, Run const&) = default;
  };

  struct CompactForm {
    std::vector<Run> runs;

    friend bool operator==(CompactForm const&, CompactForm const&) = default;
  };

  inline CompactForm to_compact(ChainEndo const& x) {
    CompactForm result;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (result.runs.empty() || result.runs.back().symbol != x[i]) {
        result.runs.push_back({x[i], 1});
      } else {
        ++result.runs.back().multiplicity;
      }
    }
    return result;
  }

  inline ChainEndo from_compact(CompactForm const& form, std::size_t n) {
    if (n == 0 || n > kMaxChainSize) {
      throw Error(ErrorKind::OutOfRange, "bad chain size " + std::to_string(n));
    }
    std::vector<Point> v;
    std::size_t        total = 0;
    for (std::size_t r = 0; r < form.runs.size(); ++r) {
      Run const& run = form.runs[r];
      if (r > 0 && form.runs[r - 1].symbol >= run.symbol) {
        throw Error(ErrorKind::NotMonotone,
                    "run symbols must strictly increase");
      }
      if (run.symbol >= n) {
        throw Error(ErrorKind::OutOfRange,
                    "symbol " + std::to_string(run.symbol) + " not in C_"
                        + std::to_string(n));
      }
      if (run.multiplicity == 0) {
        throw Error(ErrorKind::ParseError, "run multiplicity must be >= 1");
      }
      total += run.multiplicity;
      if (total > n) {
        break;
      }
      v.insert(v.end(), run.multiplicity, run.symbol);
    }
    if (total != n) {
      throw Error(ErrorKind::SumMismatch,
                  "multiplicities sum to " + std::to_string(total)
                      + ", expected " + std::to_string(n));
    }
    return ChainEndo::from_trusted(std::move(v));
  }

  namespace detail {
    inline std::size_t parse_uint(std::string_view text, std::string_view what) {
      std::size_t value = 0;
      auto const* first = text.data();
      auto const* last  = text.data() + text.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (text.empty() || ec != std::errc() || ptr != last) {
        throw Error(ErrorKind::ParseError,
                    "expected a decimal " + std::string(what) + ", found \""
                        + std::string(text) + "\"");
      }
      return value;
    }
  }  // namespace detail

  inline CompactForm parse_compact_form(std::string_view text) {
    CompactForm result;
    if (text.empty()) {
      throw Error(ErrorKind::ParseError, "empty endomorphism");
    }
    std::size_t pos = 0;
    while (true) {
      std::size_t const end = text.find(' ', pos);
      std::string_view  run = text.substr(
          pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      if (run.empty()) {
        throw Error(ErrorKind::ParseError,
                    "runs must be separated by single spaces");
      }
      std::size_t const underscore = run.find('_');
      std::size_t const symbol
          = detail::parse_uint(run.substr(0, underscore), "symbol");
      std::size_t multiplicity = 1;
      if (underscore != std::string_view::npos) {
        multiplicity
            = detail::parse_uint(run.substr(underscore + 1), "multiplicity");
      }
      if (symbol >= kMaxChainSize) {
        throw Error(ErrorKind::OutOfRange,
                    "symbol " + std::to_string(symbol) + " too large");
      }
      result.runs.push_back({static_cast<Point>(symbol), multiplicity});
      if (end == std::string_view::npos) {
        break;
      }
      pos = end + 1;
    }
    return result;
  }

  inline ChainEndo parse_compact(std::string_view text, std::size_t n) {
    return from_compact(parse_compact_form(text), n);
  }

  inline std::string format_compact(ChainEndo const& x) {
    std::string out;
    for (Run const& run : to_compact(x).runs) {
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(run.symbol);
      if (run.multiplicity != 1) {
        out += '_';
        out += std::to_string(run.multiplicity);
      }
    }
    return out;
  }

  //! Value-tuple rendering, e.g. "<1,1,2,3>".
  inline std::string format_tuple(ChainEndo const& x) {
    std::string out = "<";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(x[i]);
    }
    out += '>';
    return out;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_CHAIN_ENDO_HPP_
