#ifndef ENDOCHAIN_STRINGS_HPP_
#define ENDOCHAIN_STRINGS_HPP_

// Strings STR^(n){a, b}: the 1-simplices.  Elements are a_l b_{n-l} for
// l = 0..n and are indexed by l, the multiplicity of a.  The string splits
// into three parts by index arithmetic alone:
//
//   l in [b + 1, n]  a-nilpotent  (n - b elements)
//   l in [a + 1, b]  idempotent   (b - a elements, right identities)
//   l in [0, a]      b-nilpotent  (a + 1 elements)

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"
#include "chain_endo.hpp"
#include "error.hpp"
#include "simplex.hpp"

namespace endochain {

  struct StringSpec {
    std::size_t n;
    Point       a;
    Point       b;

    friend bool operator==(StringSpec const&, StringSpec const&) = default;
    friend auto operator<=>(StringSpec const&, StringSpec const&) = default;
  };

  inline StringSpec make_string(std::size_t n, std::size_t a, std::size_t b) {
    if (n == 0 || n > kMaxChainSize || !(a < b) || b >= n) {
      throw Error(ErrorKind::RangeError,
                  "string needs 0 <= a < b <= n - 1, found n="
                      + std::to_string(n) + " a=" + std::to_string(a)
                      + " b=" + std::to_string(b));
    }
    return StringSpec{n, static_cast<Point>(a), static_cast<Point>(b)};
  }

  inline SimplexSpec as_simplex(StringSpec const& s) {
    return SimplexSpec{s.n, {s.a, s.b}};
  }

  inline std::string to_string(StringSpec const& s) {
    return "str n=" + std::to_string(s.n) + " a=" + std::to_string(s.a)
           + " b=" + std::to_string(s.b);
  }

  //! a_l b_{n-l}.
  inline ChainEndo string_elem(StringSpec const& s, std::size_t l) {
    if (l > s.n) {
      throw Error(ErrorKind::RangeError, "string index exceeds n");
    }
    std::vector<Point> v(s.n, s.b);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(l), s.a);
    return ChainEndo::from_trusted(std::move(v));
  }

  inline std::vector<ChainEndo> string_range(StringSpec const& s,
                                             std::size_t       lo,
                                             std::size_t       hi) {
    std::vector<ChainEndo> out;
    for (std::size_t l = hi + 1; l-- > lo;) {
      out.push_back(string_elem(s, l));
    }
    return out;  // descending l is ascending lexicographic order
  }

  inline std::vector<ChainEndo> enumerate_string(StringSpec const& s) {
    return string_range(s, 0, s.n);
  }

  enum class StringPart { NilA, Idempotent, NilB };

  inline char const* to_string(StringPart p) noexcept {
    switch (p) {
      case StringPart::NilA: return "nil_a";
      case StringPart::Idempotent: return "id";
      case StringPart::NilB: return "nil_b";
    }
    return "id";
  }

  inline StringPart part_of_index(StringSpec const& s, std::size_t l) {
    if (l >= static_cast<std::size_t>(s.b) + 1) {
      return StringPart::NilA;
    }
    if (l >= static_cast<std::size_t>(s.a) + 1) {
      return StringPart::Idempotent;
    }
    return StringPart::NilB;
  }

  struct StringPartition {
    std::vector<ChainEndo> nil_a;
    std::vector<ChainEndo> idem;
    std::vector<ChainEndo> nil_b;
  };

  inline StringPartition partition_string(StringSpec const& s) {
    return {string_range(s, s.b + 1u, s.n),
            string_range(s, s.a + 1u, s.b),
            string_range(s, 0, s.a)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Products of string elements
  ////////////////////////////////////////////////////////////////////////

  struct StringElem {
    StringSpec  spec;
    std::size_t l;  // multiplicity of spec.a
  };

  inline ChainEndo to_endo(StringElem const& e) {
    return string_elem(e.spec, e.l);
  }

  //! a_k b_{n-k} * x_l y_{n-l} by the three-case rule:
  //!   x-bar            if b + 1 <= l <= n
  //!   x_k y_{n-k}      if a + 1 <= l <= b
  //!   y-bar            if 0 <= l <= a
  inline ChainEndo string_mul_cases(StringElem const& lhs,
                                    StringElem const& rhs) {
    if (lhs.spec.n != rhs.spec.n) {
      throw Error(ErrorKind::SizeMismatch, "strings over different chains");
    }
    std::size_t const n = lhs.spec.n;
    switch (part_of_index(lhs.spec, rhs.l)) {
      case StringPart::NilA: return constant(n, rhs.spec.a);
      case StringPart::Idempotent: return string_elem(rhs.spec, lhs.l);
      case StringPart::NilB: return constant(n, rhs.spec.b);
    }
    return constant(n, rhs.spec.b);
  }

  ////////////////////////////////////////////////////////////////////////
  // A_r, B_s and consecutive unions
  ////////////////////////////////////////////////////////////////////////

  struct FamilyResult {
    std::vector<ChainEndo> elements;
    Verdict                semiring;
  };

  //! A_r = {a-bar, a_{n-1} b, ..., a_r b_{n-r}}, 1 <= r <= n.
  inline FamilyResult family_A(StringSpec const& s, std::size_t r) {
    if (r < 1 || r > s.n) {
      throw Error(ErrorKind::RangeError, "A_r needs 1 <= r <= n");
    }
    std::vector<ChainEndo> elems = string_range(s, r, s.n);
    Verdict v = is_subsemiring(Subset(s.n, elems));
    return {std::move(elems), std::move(v)};
  }

  //! B_s = {b-bar, a b_{n-1}, ..., a_s b_{n-s}}, 0 <= s <= n - 1.
  inline FamilyResult family_B(StringSpec const& str, std::size_t s) {
    if (s + 1 > str.n) {
      throw Error(ErrorKind::RangeError, "B_s needs 0 <= s <= n - 1");
    }
    std::vector<ChainEndo> elems = string_range(str, 0, s);
    Verdict v = is_subsemiring(Subset(str.n, elems));
    return {std::move(elems), std::move(v)};
  }

  struct ConsecutiveUnionResult {
    std::vector<ChainEndo> elements;  // STR{a, b} u STR{b, c}
    Verdict                semiring;
    //! STR{a, b} u STR{a, c} u STR{b, c} is not additively closed; this is
    //! the first escaping sum found.
    Verdict three_strings;
  };

  inline ConsecutiveUnionResult consecutive_union(std::size_t n,
                                                  std::size_t a,
                                                  std::size_t b,
                                                  std::size_t c) {
    if (!(a < b && b < c && c < n)) {
      throw Error(ErrorKind::RangeError, "consecutive union needs a < b < c < n");
    }
    StringSpec const ab = make_string(n, a, b), bc = make_string(n, b, c),
                     ac = make_string(n, a, c);
    Subset const two
        = set_union(Subset(n, enumerate_string(ab)), Subset(n, enumerate_string(bc)));
    Subset const three = set_union(two, Subset(n, enumerate_string(ac)));
    return {two.elements(), is_subsemiring(two), is_add_closed(three)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism between strings
  //
  // The additive structure of a string is a chain of n + 1 elements.  A
  // semiring isomorphism preserves +, hence the order, and an order bijection
  // between two chains of the same length is unique.  So two strings over
  // the same n are isomorphic iff that one bijection, l -> l, preserves *.
  ////////////////////////////////////////////////////////////////////////

  inline IsoResult string_iso(StringSpec const& s, StringSpec const& t) {
    return forced_chain_iso(Subset(s.n, enumerate_string(s)),
                            Subset(t.n, enumerate_string(t)));
  }

  //! Parses "str n=4 a=1 b=2" (the leading keyword is optional).
  inline StringSpec parse_string_spec(std::string_view text) {
    std::istringstream         in{std::string(text)};
    std::string                token;
    std::optional<std::size_t> n, a, b;
    while (in >> token) {
      std::string_view t = token;
      if (t == "str") {
        continue;
      }
      if (t.starts_with("n=")) {
        n = detail::parse_uint(t.substr(2), "n");
      } else if (t.starts_with("a=")) {
        a = detail::parse_uint(t.substr(2), "a");
      } else if (t.starts_with("b=")) {
        b = detail::parse_uint(t.substr(2), "b");
      } else {
        throw Error(ErrorKind::ParseError,
                    "unexpected token \"" + token + "\" in string literal");
      }
    }
    if (!n || !a || !b) {
      throw Error(ErrorKind::ParseError, "string literal needs n=, a= and b=");
    }
    return make_string(*n, *a, *b);
  }

}  // namespace endochain

#endif  // ENDOCHAIN_STRINGS_HPP_
