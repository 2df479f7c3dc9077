#ifndef ENDOCHAIN_ANALYSIS_HPP_
#define ENDOCHAIN_ANALYSIS_HPP_

// Structure-agnostic checks on finite subsets of the endomorphism semiring of
// a chain: closure, ideals, triviality, identities, similarity, element
// classification and isomorphism between closed subsets.
//
// All scans visit elements in lexicographic order of their value tuples and
// report the first witness found, so failures are reproducible.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chain_endo.hpp"
#include "error.hpp"

namespace endochain {

  //! A finite set of endomorphisms of one chain C_n, kept sorted and
  //! duplicate free.
  class Subset {
   public:
    Subset() = default;

    Subset(std::size_t n, std::vector<ChainEndo> elements)
        : _n(n), _elements(std::move(elements)) {
      for (ChainEndo const& x : _elements) {
        if (x.size() != n) {
          throw Error(ErrorKind::SizeMismatch,
                      "element " + format_tuple(x) + " does not live on C_"
                          + std::to_string(n));
        }
      }
      std::sort(_elements.begin(), _elements.end());
      _elements.erase(std::unique(_elements.begin(), _elements.end()),
                      _elements.end());
    }

    [[nodiscard]] std::size_t n() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _elements.empty();
    }

    [[nodiscard]] bool contains(ChainEndo const& x) const {
      return std::binary_search(_elements.begin(), _elements.end(), x);
    }

    [[nodiscard]] std::vector<ChainEndo> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] ChainEndo const& operator[](std::size_t i) const {
      return _elements[i];
    }

    [[nodiscard]] auto begin() const noexcept {
      return _elements.begin();
    }

    [[nodiscard]] auto end() const noexcept {
      return _elements.end();
    }

    //! Position in lexicographic order, or size() if absent.
    [[nodiscard]] std::size_t index_of(ChainEndo const& x) const {
      auto it = std::lower_bound(_elements.begin(), _elements.end(), x);
      if (it == _elements.end() || *it != x) {
        return _elements.size();
      }
      return static_cast<std::size_t>(it - _elements.begin());
    }

    [[nodiscard]] bool is_subset_of(Subset const& other) const {
      return std::includes(other.begin(), other.end(), begin(), end());
    }

    friend bool operator==(Subset const&, Subset const&) = default;

   private:
    std::size_t            _n = 0;
    std::vector<ChainEndo> _elements;
  };

  inline Subset set_union(Subset const& x, Subset const& y) {
    std::vector<ChainEndo> out;
    std::set_union(
        x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return Subset(x.n(), std::move(out));
  }

  inline Subset set_difference(Subset const& x, Subset const& y) {
    std::vector<ChainEndo> out;
    std::set_difference(
        x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return Subset(x.n(), std::move(out));
  }

  inline Subset set_intersection(Subset const& x, Subset const& y) {
    std::vector<ChainEndo> out;
    std::set_intersection(
        x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return Subset(x.n(), std::move(out));
  }

  template <typename Pred>
  Subset filter(Subset const& s, Pred&& pred) {
    std::vector<ChainEndo> out;
    for (ChainEndo const& x : s) {
      if (pred(x)) {
        out.push_back(x);
      }
    }
    return Subset(s.n(), std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Verdicts
  ////////////////////////////////////////////////////////////////////////

  enum class Operation { Add, Mul };

  inline char const* to_string(Operation op) noexcept {
    return op == Operation::Add ? "add" : "mul";
  }

  //! lhs (op) rhs == result, and result escapes the set under test.
  struct Witness {
    Operation op;
    ChainEndo lhs;
    ChainEndo rhs;
    ChainEndo result;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  inline std::string to_string(Witness const& w) {
    return format_compact(w.lhs) + (w.op == Operation::Add ? " + " : " * ")
           + format_compact(w.rhs) + " = " + format_compact(w.result);
  }

  struct Verdict {
    bool                   holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  namespace detail {
    inline Verdict fail(Operation op,
                        ChainEndo const& x,
                        ChainEndo const& y,
                        ChainEndo const& r) {
      return Verdict{false, Witness{op, x, y, r}};
    }
  }  // namespace detail

  inline Verdict is_add_closed(Subset const& s) {
    for (ChainEndo const& x : s) {
      for (ChainEndo const& y : s) {
        ChainEndo r = add(x, y);
        if (!s.contains(r)) {
          return detail::fail(Operation::Add, x, y, r);
        }
      }
    }
    return {};
  }

  inline Verdict is_mul_closed(Subset const& s) {
    for (ChainEndo const& x : s) {
      for (ChainEndo const& y : s) {
        ChainEndo r = mul(x, y);
        if (!s.contains(r)) {
          return detail::fail(Operation::Mul, x, y, r);
        }
      }
    }
    return {};
  }

  //! Distributivity and associativity are inherited from the ambient
  //! semiring, so only closure needs checking.  The first pair (x, y) in
  //! lexicographic order with x + y or x * y outside s is reported, addition
  //! taking precedence for the same pair.
  inline Verdict is_subsemiring(Subset const& s) {
    for (ChainEndo const& x : s) {
      for (ChainEndo const& y : s) {
        ChainEndo sum = add(x, y);
        if (!s.contains(sum)) {
          return detail::fail(Operation::Add, x, y, sum);
        }
        ChainEndo prod = mul(x, y);
        if (!s.contains(prod)) {
          return detail::fail(Operation::Mul, x, y, prod);
        }
      }
    }
    return {};
  }

  //! I + I in I, R I in I and I R in I, checked literally.  For a product
  //! witness lhs * rhs, the ring element is whichever side is not in I.
  inline Verdict is_ideal(Subset const& ideal, Subset const& ring) {
    if (!ideal.is_subset_of(ring)) {
      throw Error(ErrorKind::NotSubset, "ideal candidate is not a subset");
    }
    if (Verdict v = is_add_closed(ideal); !v) {
      return v;
    }
    for (ChainEndo const& r : ring) {
      for (ChainEndo const& i : ideal) {
        ChainEndo ri = mul(r, i);
        if (!ideal.contains(ri)) {
          return detail::fail(Operation::Mul, r, i, ri);
        }
        ChainEndo ir = mul(i, r);
        if (!ideal.contains(ir)) {
          return detail::fail(Operation::Mul, i, r, ir);
        }
      }
    }
    return {};
  }

  //! Every x in s satisfies z * x == z.
  inline bool is_left_zero(ChainEndo const& z, Subset const& s) {
    return std::all_of(
        s.begin(), s.end(), [&z](ChainEndo const& x) { return mul(z, x) == z; });
  }

  inline bool is_commutative(Subset const& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (mul(s[i], s[j]) != mul(s[j], s[i])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Maximum / minimum in the pointwise order, if one exists.
  inline std::optional<ChainEndo> greatest(Subset const& s) {
    for (ChainEndo const& x : s) {
      if (std::all_of(s.begin(), s.end(), [&x](ChainEndo const& y) {
            return leq(y, x);
          })) {
        return x;
      }
    }
    return std::nullopt;
  }

  inline std::optional<ChainEndo> least(Subset const& s) {
    for (ChainEndo const& x : s) {
      if (std::all_of(s.begin(), s.end(), [&x](ChainEndo const& y) {
            return leq(x, y);
          })) {
        return x;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Trivial semirings: all products equal one fixed idempotent iota.
  ////////////////////////////////////////////////////////////////////////

  enum class TrivialFlavor { Upper, Lower, UpperAndLower, Neither };

  inline char const* to_string(TrivialFlavor f) noexcept {
    switch (f) {
      case TrivialFlavor::Upper: return "upper";
      case TrivialFlavor::Lower: return "lower";
      case TrivialFlavor::UpperAndLower: return "upper+lower";
      case TrivialFlavor::Neither: return "neither";
    }
    return "neither";
  }

  struct TrivialityVerdict {
    bool                     is_trivial = false;
    std::optional<ChainEndo> iota;
    // A one-element set is both; every other trivial set is at most one.
    bool upper = false;
    bool lower = false;

    [[nodiscard]] TrivialFlavor flavor() const noexcept {
      if (upper && lower) {
        return TrivialFlavor::UpperAndLower;
      }
      if (upper) {
        return TrivialFlavor::Upper;
      }
      if (lower) {
        return TrivialFlavor::Lower;
      }
      return TrivialFlavor::Neither;
    }
  };

  inline TrivialityVerdict triviality(Subset const& s) {
    if (s.empty()) {
      throw Error(ErrorKind::DomainError, "triviality of the empty set");
    }
    if (Verdict v = is_mul_closed(s); !v) {
      throw Error(ErrorKind::NotClosed,
                  "set is not multiplicatively closed: " + to_string(*v.witness));
    }
    ChainEndo const iota = mul(s[0], s[0]);
    for (ChainEndo const& x : s) {
      for (ChainEndo const& y : s) {
        if (mul(x, y) != iota) {
          return {};
        }
      }
    }
    TrivialityVerdict result;
    result.is_trivial = true;
    result.iota       = iota;
    result.upper      = std::all_of(
        s.begin(), s.end(), [&](ChainEndo const& y) { return leq(y, iota); });
    result.lower = std::all_of(
        s.begin(), s.end(), [&](ChainEndo const& y) { return leq(iota, y); });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Identities and similarity
  ////////////////////////////////////////////////////////////////////////

  struct Identities {
    std::vector<ChainEndo> left;
    std::vector<ChainEndo> right;
    std::vector<ChainEndo> two_sided;
  };

  inline Identities identities(Subset const& s) {
    Identities result;
    for (ChainEndo const& e : s) {
      bool is_left = true, is_right = true;
      for (ChainEndo const& x : s) {
        is_left  = is_left && mul(e, x) == x;
        is_right = is_right && mul(x, e) == x;
        if (!is_left && !is_right) {
          break;
        }
      }
      if (is_left) {
        result.left.push_back(e);
      }
      if (is_right) {
        result.right.push_back(e);
      }
      if (is_left && is_right) {
        result.two_sided.push_back(e);
      }
    }
    return result;
  }

  enum class Side { Left, Right };

  //! Unordered pairs {x, y}, x < y lexicographically, with g * x == g * y for
  //! every g in s (left) or x * g == y * g (right).  Returned sorted.
  inline std::vector<std::pair<ChainEndo, ChainEndo>>
  similar_pairs(Subset const& s, Side side) {
    std::map<std::vector<ChainEndo>, std::vector<ChainEndo>> classes;
    for (ChainEndo const& x : s) {
      std::vector<ChainEndo> signature;
      signature.reserve(s.size());
      for (ChainEndo const& g : s) {
        signature.push_back(side == Side::Left ? mul(g, x) : mul(x, g));
      }
      classes[std::move(signature)].push_back(x);
    }
    std::vector<std::pair<ChainEndo, ChainEndo>> result;
    for (auto const& [sig, members] : classes) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          result.emplace_back(members[i], members[j]);
        }
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Element classification by power trajectory
  ////////////////////////////////////////////////////////////////////////

  enum class ElementClass { Idempotent, RootOfIdempotent, NilpotentTo };

  inline char const* to_string(ElementClass c) noexcept {
    switch (c) {
      case ElementClass::Idempotent: return "idempotent";
      case ElementClass::RootOfIdempotent: return "root-of-idempotent";
      case ElementClass::NilpotentTo: return "nilpotent";
    }
    return "idempotent";
  }

  struct Classification {
    ElementClass kind;
    ChainEndo    idempotent;  // the eventual idempotent (x itself if kind is
                              // Idempotent)
    std::size_t exponent;     // least t with x^t == idempotent
    std::optional<Point> vertex;  // set iff kind is NilpotentTo
  };

  inline Classification classify_element(ChainEndo const& x) {
    PowerTrajectory traj = power_trajectory(x);
    if (traj.exponent == 1) {
      return {ElementClass::Idempotent, x, 1, std::nullopt};
    }
    if (is_constant(traj.idempotent)) {
      Point const v = traj.idempotent[0];
      return {ElementClass::NilpotentTo, traj.idempotent, traj.exponent, v};
    }
    return {ElementClass::RootOfIdempotent,
            traj.idempotent,
            traj.exponent,
            std::nullopt};
  }

  inline Classification classify_element(ChainEndo const& x, Subset const& s) {
    if (!s.contains(x)) {
      throw Error(ErrorKind::NotSubset, format_compact(x) + " is not in the set");
    }
    return classify_element(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism between closed subsets
  //
  // A semiring isomorphism preserves +, which on these sets is the join of
  // the pointwise order, so it is an order isomorphism.  When the additive
  // order of s is a chain there is exactly one candidate (the monotone
  // bijection); otherwise candidates are searched by backtracking over
  // bijections respecting order-invariant profiles.
  ////////////////////////////////////////////////////////////////////////

  struct IsoResult {
    bool                                         isomorphic = false;
    std::vector<std::pair<ChainEndo, ChainEndo>> mapping;  // sorted by first
  };

  namespace detail {
    struct Tables {
      std::size_t                           size;
      std::vector<std::size_t>              sum;   // size * size
      std::vector<std::size_t>              prod;  // size * size
      std::vector<std::vector<std::size_t>> below; // indices strictly below
      // Invariants preserved by any semiring isomorphism.
      std::vector<std::tuple<std::size_t, std::size_t, bool, std::size_t>>
          profile;
    };

    inline Tables make_tables(Subset const& s) {
      Tables t;
      t.size = s.size();
      t.sum.resize(t.size * t.size);
      t.prod.resize(t.size * t.size);
      t.below.resize(t.size);
      for (std::size_t i = 0; i < t.size; ++i) {
        for (std::size_t j = 0; j < t.size; ++j) {
          t.sum[i * t.size + j]  = s.index_of(add(s[i], s[j]));
          t.prod[i * t.size + j] = s.index_of(mul(s[i], s[j]));
          if (i != j && leq(s[j], s[i])) {
            t.below[i].push_back(j);
          }
        }
      }
      for (std::size_t i = 0; i < t.size; ++i) {
        std::size_t above = 0;
        for (std::size_t j = 0; j < t.size; ++j) {
          above += (i != j && leq(s[i], s[j])) ? 1 : 0;
        }
        std::size_t const sq = t.prod[i * t.size + i];
        t.profile.emplace_back(t.below[i].size(),
                               above,
                               sq == i,
                               t.below[sq].size());
      }
      return t;
    }

    inline bool is_chain(Tables const& t) {
      std::vector<std::size_t> ranks;
      for (auto const& b : t.below) {
        ranks.push_back(b.size());
      }
      std::sort(ranks.begin(), ranks.end());
      for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] != i) {
          return false;
        }
      }
      return true;
    }

    struct IsoSearch {
      Tables const&            src;
      Tables const&            dst;
      std::vector<std::size_t> order;  // source indices, by rank
      std::vector<std::size_t> map;    // src -> dst, or npos
      std::vector<bool>        used;

      static constexpr std::size_t npos = static_cast<std::size_t>(-1);

      bool consistent(std::size_t i) const {
        std::size_t const n = src.size;
        for (std::size_t j = 0; j < n; ++j) {
          if (map[j] == npos) {
            continue;
          }
          for (auto [x, y] : {std::pair{i, j}, std::pair{j, i}}) {
            std::size_t const fx = map[x], fy = map[y];
            std::size_t const s  = src.sum[x * n + y];
            if (map[s] != npos && map[s] != dst.sum[fx * n + fy]) {
              return false;
            }
            std::size_t const p = src.prod[x * n + y];
            if (map[p] != npos && map[p] != dst.prod[fx * n + fy]) {
              return false;
            }
          }
        }
        return true;
      }

      bool run(std::size_t depth) {
        if (depth == order.size()) {
          return true;
        }
        std::size_t const i = order[depth];
        for (std::size_t c = 0; c < dst.size; ++c) {
          if (used[c] || src.profile[i] != dst.profile[c]) {
            continue;
          }
          map[i]  = c;
          used[c] = true;
          if (consistent(i) && run(depth + 1)) {
            return true;
          }
          map[i]  = npos;
          used[c] = false;
        }
        return false;
      }
    };

    inline bool preserves_everything(Tables const&                   src,
                                     Tables const&                   dst,
                                     std::vector<std::size_t> const& map) {
      std::size_t const n = src.size;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (map[src.sum[x * n + y]] != dst.sum[map[x] * n + map[y]]
              || map[src.prod[x * n + y]] != dst.prod[map[x] * n + map[y]]) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace detail

  //! The unique order-preserving bijection between two chains of equal
  //! length (pointwise order), checked for preservation of + and *.  The
  //! mapping is returned even when it fails to be a homomorphism.
  inline IsoResult forced_chain_iso(Subset const& s, Subset const& t) {
    IsoResult result;
    if (s.size() != t.size()) {
      return result;
    }
    // On a chain the pointwise order is total, so the value sum ranks it.
    auto by_order = [](Subset const& x) {
      std::vector<ChainEndo> v = x.elements();
      auto weight = [](ChainEndo const& z) {
        std::size_t w = 0;
        for (Point p : z.values()) {
          w += p;
        }
        return w;
      };
      std::stable_sort(v.begin(), v.end(), [&](auto const& p, auto const& q) {
        return weight(p) < weight(q);
      });
      return v;
    };
    std::vector<ChainEndo> sv = by_order(s), tv = by_order(t);
    for (std::size_t i = 0; i + 1 < sv.size(); ++i) {
      if (!leq(sv[i], sv[i + 1]) || !leq(tv[i], tv[i + 1])) {
        throw Error(ErrorKind::DomainError, "set is not a chain");
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < sv.size() && ok; ++i) {
      for (std::size_t j = 0; j < sv.size() && ok; ++j) {
        auto image_of = [&](ChainEndo const& z) -> std::optional<ChainEndo> {
          auto it = std::find(sv.begin(), sv.end(), z);
          if (it == sv.end()) {
            return std::nullopt;
          }
          return tv[static_cast<std::size_t>(it - sv.begin())];
        };
        ok = image_of(add(sv[i], sv[j])) == add(tv[i], tv[j])
             && image_of(mul(sv[i], sv[j])) == mul(tv[i], tv[j]);
      }
    }
    result.isomorphic = ok;
    for (std::size_t i = 0; i < sv.size(); ++i) {
      result.mapping.emplace_back(sv[i], tv[i]);
    }
    std::sort(result.mapping.begin(), result.mapping.end());
    return result;
  }

  inline IsoResult iso_check(Subset const& s, Subset const& t) {
    for (Subset const* x : {&s, &t}) {
      if (Verdict v = is_subsemiring(*x); !v) {
        throw Error(ErrorKind::NotClosed,
                    "iso_check needs closed sets: " + to_string(*v.witness));
      }
    }
    IsoResult result;
    if (s.size() != t.size()) {
      return result;
    }
    detail::Tables const src = detail::make_tables(s);
    detail::Tables const dst = detail::make_tables(t);
    {
      auto ps = src.profile, pt = dst.profile;
      std::sort(ps.begin(), ps.end());
      std::sort(pt.begin(), pt.end());
      if (ps != pt) {
        return result;
      }
    }
    if (detail::is_chain(src)) {
      if (!detail::is_chain(dst)) {
        return result;
      }
      return forced_chain_iso(s, t);
    }
    detail::IsoSearch search{src,
                             dst,
                             {},
                             std::vector<std::size_t>(s.size(),
                                                      detail::IsoSearch::npos),
                             std::vector<bool>(t.size(), false)};
    for (std::size_t i = 0; i < s.size(); ++i) {
      search.order.push_back(i);
    }
    std::stable_sort(search.order.begin(),
                     search.order.end(),
                     [&](std::size_t x, std::size_t y) {
                       return src.below[x].size() < src.below[y].size();
                     });
    if (search.run(0) && detail::preserves_everything(src, dst, search.map)) {
      result.isomorphic = true;
      for (std::size_t i = 0; i < s.size(); ++i) {
        result.mapping.emplace_back(s[i], t[search.map[i]]);
      }
    }
    return result;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_ANALYSIS_HPP_
