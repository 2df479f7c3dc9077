#ifndef ENDOCHAIN_TRIANGLE_HPP_
#define ENDOCHAIN_TRIANGLE_HPP_

// Triangles: the 2-simplices over {a, b, c}.  An element is a_k b_l c_m with
// k + l + m = n.  Most structure of a triangle is visible through the type
// triple (alpha(a), alpha(b), alpha(c)), which is how regions are assigned.

#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "analysis.hpp"
#include "chain_endo.hpp"
#include "error.hpp"
#include "simplex.hpp"
#include "strings.hpp"

namespace endochain {

  struct TriangleSpec {
    std::size_t n;
    Point       a;
    Point       b;
    Point       c;

    friend bool operator==(TriangleSpec const&, TriangleSpec const&) = default;
    friend auto operator<=>(TriangleSpec const&, TriangleSpec const&)
        = default;
  };

  inline TriangleSpec make_triangle(std::size_t n,
                                    std::size_t a,
                                    std::size_t b,
                                    std::size_t c) {
    if (n < 3 || n > kMaxChainSize || !(a < b && b < c && c < n)) {
      throw Error(ErrorKind::RangeError,
                  "triangle needs n >= 3 and a < b < c <= n - 1, found n="
                      + std::to_string(n) + " a=" + std::to_string(a)
                      + " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }
    return TriangleSpec{n,
                        static_cast<Point>(a),
                        static_cast<Point>(b),
                        static_cast<Point>(c)};
  }

  inline SimplexSpec as_simplex(TriangleSpec const& t) {
    return SimplexSpec{t.n, {t.a, t.b, t.c}};
  }

  inline std::string to_string(TriangleSpec const& t) {
    return "tri n=" + std::to_string(t.n) + " a=" + std::to_string(t.a)
           + " b=" + std::to_string(t.b) + " c=" + std::to_string(t.c);
  }

  //! Parses "tri n=6 a=1 b=3 c=4" (the leading keyword is optional).
  inline TriangleSpec parse_triangle(std::string_view text) {
    std::istringstream         in{std::string(text)};
    std::string                token;
    std::optional<std::size_t> n, a, b, c;
    while (in >> token) {
      std::string_view t = token;
      if (t == "tri") {
        continue;
      }
      std::optional<std::size_t>* slot = nullptr;
      if (t.starts_with("n=")) {
        slot = &n;
      } else if (t.starts_with("a=")) {
        slot = &a;
      } else if (t.starts_with("b=")) {
        slot = &b;
      } else if (t.starts_with("c=")) {
        slot = &c;
      } else {
        throw Error(ErrorKind::ParseError,
                    "unexpected token \"" + token + "\" in triangle literal");
      }
      *slot = detail::parse_uint(t.substr(2), t.substr(0, 1));
    }
    if (!n || !a || !b || !c) {
      throw Error(ErrorKind::ParseError,
                  "triangle literal needs n=, a=, b= and c=");
    }
    return make_triangle(*n, *a, *b, *c);
  }

  inline std::size_t triangle_order(TriangleSpec const& t) {
    return (t.n + 2) * (t.n + 1) / 2;
  }

  inline std::vector<ChainEndo> enumerate_triangle(TriangleSpec const& t) {
    return enumerate_simplex(as_simplex(t));
  }

  inline Subset triangle_set(TriangleSpec const& t) {
    return Subset(t.n, enumerate_triangle(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Elements
  ////////////////////////////////////////////////////////////////////////

  struct TriElem {
    std::size_t k;  // multiplicity of a
    std::size_t l;  // multiplicity of b
    std::size_t m;  // multiplicity of c

    friend bool operator==(TriElem const&, TriElem const&) = default;
    friend auto operator<=>(TriElem const&, TriElem const&) = default;
  };

  inline ChainEndo to_endo(TriangleSpec const& t, TriElem const& e) {
    if (e.k + e.l + e.m != t.n) {
      throw Error(ErrorKind::SumMismatch,
                  "multiplicities must sum to n=" + std::to_string(t.n));
    }
    std::vector<Point> v;
    v.reserve(t.n);
    v.insert(v.end(), e.k, t.a);
    v.insert(v.end(), e.l, t.b);
    v.insert(v.end(), e.m, t.c);
    return ChainEndo::from_trusted(std::move(v));
  }

  inline TriElem to_tri_elem(TriangleSpec const& t, ChainEndo const& x) {
    if (x.size() != t.n || !in_simplex(as_simplex(t), x)) {
      throw Error(ErrorKind::NotSubset,
                  format_compact(x) + " is not in " + to_string(t));
    }
    return {multiplicity(x, t.a), multiplicity(x, t.b), multiplicity(x, t.c)};
  }

  enum class Corner : std::uint8_t { A, B, C };

  struct TypeTriple {
    Corner ta;
    Corner tb;
    Corner tc;

    friend bool operator==(TypeTriple const&, TypeTriple const&) = default;
    friend auto operator<=>(TypeTriple const&, TypeTriple const&) = default;
  };

  inline char corner_letter(Corner c) noexcept {
    return c == Corner::A ? 'a' : c == Corner::B ? 'b' : 'c';
  }

  inline std::string to_string(TypeTriple const& t) {
    return {'(', corner_letter(t.ta), ',', corner_letter(t.tb), ',',
            corner_letter(t.tc), ')'};
  }

  //! All ten monotone triples over {a, b, c}, in lexicographic order.
  inline std::vector<TypeTriple> all_type_triples() {
    std::vector<TypeTriple> out;
    for (int x = 0; x < 3; ++x) {
      for (int y = x; y < 3; ++y) {
        for (int z = y; z < 3; ++z) {
          out.push_back({static_cast<Corner>(x),
                         static_cast<Corner>(y),
                         static_cast<Corner>(z)});
        }
      }
    }
    return out;
  }

  inline TypeTriple elem_type(TriangleSpec const& t, ChainEndo const& x) {
    auto corner = [&](Point v) {
      return v == t.a ? Corner::A : v == t.b ? Corner::B : Corner::C;
    };
    return {corner(x[t.a]), corner(x[t.b]), corner(x[t.c])};
  }

  inline TypeTriple elem_type(TriangleSpec const& t, TriElem const& e) {
    return elem_type(t, to_endo(t, e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Interior decomposition
  ////////////////////////////////////////////////////////////////////////

  //! a_k b_{n-k-j} c_j = a_k b_{n-k} + a_{n-j} c_j for j >= 1 and
  //! n - k - j >= 1.  This covers the interior and the interior of STR{b, c}
  //! (k = 0).
  inline std::pair<ChainEndo, ChainEndo>
  interior_decompose(TriangleSpec const& t, ChainEndo const& x) {
    TriElem const e = to_tri_elem(t, x);
    if (e.l == 0 || e.m == 0) {
      throw Error(ErrorKind::NotDecomposable,
                  format_compact(x) + " is not interior to the triangle or to "
                                      "its (b, c) side");
    }
    return {to_endo(t, {e.k, t.n - e.k, 0}), to_endo(t, {t.n - e.m, 0, e.m})};
  }

  ////////////////////////////////////////////////////////////////////////
  // Right identities
  ////////////////////////////////////////////////////////////////////////

  inline bool fixes(ChainEndo const& x, Point p) {
    return x[p] == p;
  }

  //! The elements fixing a, b and c, i.e. a_k b_{n-k-j} c_j for a+1 <= k <= b
  //! and n-c <= j <= n-b-1.  Sorted.
  inline std::vector<ChainEndo> right_identities(TriangleSpec const& t) {
    std::vector<ChainEndo> out;
    for (std::size_t k = t.a + 1u; k <= t.b; ++k) {
      for (std::size_t j = t.n - t.c; j + t.b + 1 <= t.n; ++j) {
        out.push_back(to_endo(t, {k, t.n - k - j, j}));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::size_t right_identity_count(TriangleSpec const& t) {
    return (std::size_t{t.b} - t.a) * (t.c - t.b);
  }

  //! (b-a)(c-a), the erratum count kept for comparison.  It never matches
  //! enumeration since c - a != c - b.
  inline std::size_t right_identity_count_as_stated(TriangleSpec const& t) {
    return (std::size_t{t.b} - t.a) * (t.c - t.a);
  }

  ////////////////////////////////////////////////////////////////////////
  // Basic layers
  ////////////////////////////////////////////////////////////////////////

  enum class BasicVertex { A, C };

  struct BasicLayer {
    BasicVertex            vertex;
    std::size_t            k;  // multiplicity of the vertex symbol
    std::vector<ChainEndo> left;
    std::vector<ChainEndo> idempotent;
    std::vector<ChainEndo> right;

    std::vector<ChainEndo> elements() const {
      std::vector<ChainEndo> all = left;
      all.insert(all.end(), idempotent.begin(), idempotent.end());
      all.insert(all.end(), right.begin(), right.end());
      std::sort(all.begin(), all.end());
      return all;
    }
  };

  inline std::pair<std::size_t, std::size_t>
  basic_range(TriangleSpec const& t, BasicVertex v) {
    if (v == BasicVertex::A) {
      return {t.a + 1u, t.b};
    }
    return {t.n - t.c, t.n - t.b - 1};
  }

  inline BasicVertex parse_basic_vertex(TriangleSpec const& t, Point v) {
    if (v == t.a) {
      return BasicVertex::A;
    } else if (v == t.c) {
      return BasicVertex::C;
    }
    throw Error(ErrorKind::NotBasic,
                "basic layers exist only with respect to a and c, not "
                    + std::to_string(v));
  }

  //! Layer k with respect to a-bar is {a_k b_{n-k-j} c_j}; with respect to
  //! c-bar it is {a_i b_{n-k-i} c_k}.  The split follows the parts of the
  //! isomorphic string: left is the part nilpotent to its smaller vertex.
  inline BasicLayer basic_layer(TriangleSpec const& t,
                                BasicVertex         v,
                                std::size_t         k) {
    auto [lo, hi] = basic_range(t, v);
    if (k < lo || k > hi) {
      throw Error(ErrorKind::NotBasic,
                  "layer " + std::to_string(k) + " is not basic");
    }
    BasicLayer layer{v, k, {}, {}, {}};
    if (v == BasicVertex::A) {
      for (std::size_t j = 0; j + k <= t.n; ++j) {
        ChainEndo x = to_endo(t, {k, t.n - k - j, j});
        if (j + t.c < t.n) {
          layer.left.push_back(std::move(x));
        } else if (j + t.b < t.n) {
          layer.idempotent.push_back(std::move(x));
        } else {
          layer.right.push_back(std::move(x));
        }
      }
    } else {
      for (std::size_t i = 0; i + k <= t.n; ++i) {
        ChainEndo x = to_endo(t, {i, t.n - k - i, k});
        if (i > t.b) {
          layer.left.push_back(std::move(x));
        } else if (i > t.a) {
          layer.idempotent.push_back(std::move(x));
        } else {
          layer.right.push_back(std::move(x));
        }
      }
    }
    for (auto* part : {&layer.left, &layer.idempotent, &layer.right}) {
      std::sort(part->begin(), part->end());
    }
    return layer;
  }

  inline std::vector<BasicLayer> basic_layers(TriangleSpec const& t,
                                              BasicVertex         v) {
    std::vector<BasicLayer> out;
    auto [lo, hi] = basic_range(t, v);
    for (std::size_t k = lo; k <= hi; ++k) {
      out.push_back(basic_layer(t, v, k));
    }
    return out;
  }

  //! Expected split sizes (left, idempotent, right).
  inline std::array<std::size_t, 3> basic_split_sizes(TriangleSpec const& t,
                                                      BasicVertex         v,
                                                      std::size_t         k) {
    if (v == BasicVertex::A) {
      return {t.n - t.c, (std::size_t{t.c} - t.b), t.b - k + 1};
    }
    return {t.n - k - t.b, (std::size_t{t.b} - t.a), t.a + 1u};
  }

  //! STR^(n-k){b-k, c-k} for a-bar and STR^(n-k){a, b} for c-bar.
  inline StringSpec layer_target(TriangleSpec const& t,
                                 BasicVertex         v,
                                 std::size_t         k) {
    basic_layer(t, v, k);  // range check
    if (v == BasicVertex::A) {
      return make_string(t.n - k, t.b - k, t.c - k);
    }
    return make_string(t.n - k, t.a, t.b);
  }

  struct LayerIso {
    StringSpec  target;
    IsoResult   iso;
    BasicLayer  layer;
  };

  inline LayerIso layer_string_iso(TriangleSpec const& t,
                                   BasicVertex         v,
                                   std::size_t         k) {
    BasicLayer layer  = basic_layer(t, v, k);
    StringSpec target = layer_target(t, v, k);
    IsoResult  iso    = forced_chain_iso(Subset(t.n, layer.elements()),
                                     Subset(target.n, enumerate_string(target)));
    return {target, std::move(iso), std::move(layer)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotent triangle
  ////////////////////////////////////////////////////////////////////////

  struct IdempotentTriangleReport {
    Subset it;
    Subset ri;
    Subset it_minus_ri;
    Subset id_ac;  // Id(STR{a, c})
    Subset l_tri;  // type (a, a, c), including its Id(STR{a, c}) edge
    Subset r_tri;  // type (a, c, c), including its Id(STR{a, c}) edge

    Verdict ri_closed;
    Verdict rest_closed;
    Verdict l_tri_closed;
    Verdict r_tri_closed;
    Verdict id_ac_ideal;
    Verdict rest_ideal;
    Verdict ri_ideal;  // expected to fail
    bool    id_ac_left_zeroes = true;
    bool    l_below_r         = true;

    std::size_t it_formula;       // (c - a)(c - a + 1) / 2
    std::size_t ri_formula;       // (b - a)(c - b)
    std::size_t ri_as_stated;     // (b - a)(c - a)
    std::size_t rest_formula;     // ((c - b)^2 + (b - a)^2 + c - a) / 2
    std::size_t fixes_a_and_b;    // size of the alternative reading {a, b}
  };

  inline IdempotentTriangleReport idempotent_triangle(TriangleSpec const& t) {
    std::vector<ChainEndo> it, ab;
    for (ChainEndo& x : enumerate_triangle(t)) {
      if (fixes(x, t.a) && fixes(x, t.b)) {
        ab.push_back(x);
      }
      if (fixes(x, t.a) && fixes(x, t.c)) {
        it.push_back(std::move(x));
      }
    }
    Subset const itset(t.n, it);
    Subset const ri(t.n, right_identities(t));
    Subset const rest = set_difference(itset, ri);
    StringSpec const ac = make_string(t.n, t.a, t.c);
    Subset const id_ac(t.n, partition_string(ac).idem);
    auto         of_type = [&](TypeTriple want) {
      return filter(itset,
                    [&](ChainEndo const& x) { return elem_type(t, x) == want; });
    };
    Subset const l_tri = of_type({Corner::A, Corner::A, Corner::C});
    Subset const r_tri = of_type({Corner::A, Corner::C, Corner::C});

    IdempotentTriangleReport r{itset,
                               ri,
                               rest,
                               id_ac,
                               l_tri,
                               r_tri,
                               is_subsemiring(ri),
                               is_subsemiring(rest),
                               is_subsemiring(l_tri),
                               is_subsemiring(r_tri),
                               is_ideal(id_ac, itset),
                               is_ideal(rest, itset),
                               is_ideal(ri, itset),
                               true,
                               true,
                               0,
                               0,
                               0,
                               0,
                               ab.size()};
    for (ChainEndo const& z : id_ac) {
      r.id_ac_left_zeroes = r.id_ac_left_zeroes && is_left_zero(z, itset);
    }
    for (ChainEndo const& x : l_tri) {
      for (ChainEndo const& y : r_tri) {
        r.l_below_r = r.l_below_r && leq(x, y) && x != y;
      }
    }
    std::size_t const ca = t.c - t.a, cb = t.c - t.b, ba = t.b - t.a;
    r.it_formula   = ca * (ca + 1) / 2;
    r.ri_formula   = right_identity_count(t);
    r.ri_as_stated = right_identity_count_as_stated(t);
    r.rest_formula = (cb * cb + ba * ba + ca) / 2;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Eight-region decomposition
  ////////////////////////////////////////////////////////////////////////

  enum class Region : std::uint8_t {
    NilA,
    NilB,
    NilC,
    LPar,
    RPar,
    LTri,
    RTri,
    RightIdentities
  };

  inline constexpr std::array<Region, 8> kRegions = {Region::NilA,
                                                     Region::NilB,
                                                     Region::NilC,
                                                     Region::LPar,
                                                     Region::RPar,
                                                     Region::LTri,
                                                     Region::RTri,
                                                     Region::RightIdentities};

  inline char const* to_string(Region r) noexcept {
    switch (r) {
      case Region::NilA: return "nil_a";
      case Region::NilB: return "nil_b";
      case Region::NilC: return "nil_c";
      case Region::LPar: return "l_par";
      case Region::RPar: return "r_par";
      case Region::LTri: return "l_tri";
      case Region::RTri: return "r_tri";
      case Region::RightIdentities: return "ri";
    }
    return "ri";
  }

  inline char region_letter(Region r) noexcept {
    constexpr char letters[] = "ABCpqlrE";
    return letters[static_cast<std::size_t>(r)];
  }

  inline Region region_of(TypeTriple const& tt) {
    using C = Corner;
    auto is = [&](C x, C y, C z) { return tt == TypeTriple{x, y, z}; };
    if (is(C::A, C::A, C::A) || is(C::A, C::A, C::B)) {
      return Region::NilA;
    } else if (is(C::B, C::B, C::B)) {
      return Region::NilB;
    } else if (is(C::C, C::C, C::C) || is(C::B, C::C, C::C)) {
      return Region::NilC;
    } else if (is(C::A, C::B, C::B)) {
      return Region::LPar;
    } else if (is(C::B, C::B, C::C)) {
      return Region::RPar;
    } else if (is(C::A, C::A, C::C)) {
      return Region::LTri;
    } else if (is(C::A, C::C, C::C)) {
      return Region::RTri;
    } else if (is(C::A, C::B, C::C)) {
      return Region::RightIdentities;
    }
    throw Error(ErrorKind::DomainError, "not a monotone type triple");
  }

  inline Region region_of(TriangleSpec const& t, ChainEndo const& x) {
    return region_of(elem_type(t, x));
  }

  //! Closed-form order of a region.  LTri and RTri are counted with their
  //! Id(STR{a, c}) edges.
  inline std::size_t region_formula(TriangleSpec const& t, Region r) {
    std::size_t const n = t.n, a = t.a, b = t.b, c = t.c;
    switch (r) {
      case Region::NilA: return (n - c) * (n + c - 2 * b + 1) / 2;
      case Region::NilB: return (a + 1) * (n - c);
      case Region::NilC: return (a + 1) * (2 * b - a + 2) / 2;
      case Region::LPar: return (b - a) * (n - c);
      case Region::RPar: return (a + 1) * (c - b);
      case Region::LTri: return (c - b) * (c - b + 1) / 2;
      case Region::RTri: return (b - a) * (b - a + 1) / 2;
      case Region::RightIdentities: return (b - a) * (c - b);
    }
    return 0;
  }

  //! Membership by the geometric descriptions, independent of type triples:
  //! nilpotent regions by power iteration, parallelograms as unions of
  //! left/right parts of basic layers, L/R triangles by index bounds and RI
  //! by fixed points.
  inline bool in_region_intrinsic(TriangleSpec const& t,
                                  Region              r,
                                  ChainEndo const&    x) {
    TriElem const e = to_tri_elem(t, x);
    std::size_t const a = t.a, b = t.b, c = t.c, n = t.n;
    switch (r) {
      case Region::NilA: return is_nilpotent_to(x, t.a);
      case Region::NilB: return is_nilpotent_to(x, t.b);
      case Region::NilC: return is_nilpotent_to(x, t.c);
      case Region::LPar:
        // left elements of L^k_a, a+1 <= k <= b: c-multiplicity < n - c
        return e.k >= a + 1 && e.k <= b && e.m + c < n;
      case Region::RPar:
        // right elements of L^k_c, n-c <= k <= n-b-1: a-multiplicity <= a
        return e.m + c >= n && e.m + b + 1 <= n && e.k <= a;
      case Region::LTri: {
        // a_m b_{l-m} c_{n-l} with b+1 <= m <= l <= c
        std::size_t const l = e.k + e.l;
        return e.k >= b + 1 && l <= c;
      }
      case Region::RTri: {
        std::size_t const l = e.k + e.l;
        return e.k >= a + 1 && l <= b;
      }
      case Region::RightIdentities:
        return fixes(x, t.a) && fixes(x, t.b) && fixes(x, t.c);
    }
    return false;
  }

  struct RegionEntry {
    Region                        region;
    Subset                        elements;
    Verdict                       closed;
    std::size_t                   formula;
    bool                          matches_intrinsic;
    std::optional<TrivialityVerdict> triviality;  // nilpotent regions only
  };

  struct RegionReport {
    TriangleSpec             spec;
    std::vector<RegionEntry> regions;  // in kRegions order
    bool                     disjoint = true;
    bool                     cover    = true;
    std::size_t              total    = 0;

    RegionEntry const& at(Region r) const {
      return regions[static_cast<std::size_t>(r)];
    }

    bool holds() const {
      bool ok = disjoint && cover && total == triangle_order(spec);
      for (RegionEntry const& e : regions) {
        ok = ok && e.closed.holds && e.formula == e.elements.size()
             && e.matches_intrinsic;
      }
      return ok;
    }
  };

  inline RegionReport decompose(TriangleSpec const& t) {
    std::vector<ChainEndo> const all = enumerate_triangle(t);
    std::array<std::vector<ChainEndo>, 8> buckets;
    for (ChainEndo const& x : all) {
      buckets[static_cast<std::size_t>(region_of(t, x))].push_back(x);
    }
    RegionReport report{t, {}, true, true, 0};
    std::vector<std::size_t> hits(all.size(), 0);
    for (Region r : kRegions) {
      Subset s(t.n, buckets[static_cast<std::size_t>(r)]);
      bool   intrinsic = true;
      for (std::size_t i = 0; i < all.size(); ++i) {
        bool const in = s.contains(all[i]);
        hits[i] += in ? 1 : 0;
        intrinsic = intrinsic && (in == in_region_intrinsic(t, r, all[i]));
      }
      Verdict closed = is_subsemiring(s);
      std::optional<TrivialityVerdict> triv;
      if ((r == Region::NilA || r == Region::NilB || r == Region::NilC)
          && closed.holds) {
        triv = triviality(s);
      }
      report.total += s.size();
      report.regions.push_back({r,
                                std::move(s),
                                std::move(closed),
                                region_formula(t, r),
                                intrinsic,
                                std::move(triv)});
    }
    for (std::size_t h : hits) {
      report.disjoint = report.disjoint && h <= 1;
      report.cover    = report.cover && h >= 1;
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Similarity
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::pair<ChainEndo, ChainEndo>>
  find_similar_pairs(TriangleSpec const& t, Side side) {
    return similar_pairs(triangle_set(t), side);
  }

  //! A left-similar pair of non-right-identities built by case analysis on
  //! (a, b, c).  Only meaningful for n > 3.
  inline std::pair<ChainEndo, ChainEndo>
  left_similar_witness(TriangleSpec const& t) {
    std::size_t const n = t.n;
    if (n <= 3) {
      throw Error(ErrorKind::DomainError, "no left-similar pairs for n = 3");
    }
    if (t.a > 0) {
      return {to_endo(t, {1, 0, n - 1}), constant(n, t.c)};
    } else if (t.b > 1) {
      return {to_endo(t, {1, 1, n - 2}), to_endo(t, {1, 0, n - 1})};
    } else if (std::size_t{t.c} + 1 < n) {
      return {to_endo(t, {1, n - 2, 1}), to_endo(t, {1, n - 1, 0})};
    }
    return {to_endo(t, {n - 1, 1, 0}), to_endo(t, {n - 2, 2, 0})};
  }

  inline bool are_left_similar(Subset const&    s,
                               ChainEndo const& x,
                               ChainEndo const& y) {
    for (ChainEndo const& g : s) {
      if (mul(g, x) != mul(g, y)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary and interior
  ////////////////////////////////////////////////////////////////////////

  struct IdempotentSumCounterexample {
    ChainEndo lhs;     // a_{a+1} c_{n-a-1}
    ChainEndo rhs;     // b_{b+1} c_{n-b-1}
    ChainEndo sum;     // b_{a+1} c_{n-a-1}
    ChainEndo square;  // c-bar
  };

  inline IdempotentSumCounterexample
  idempotent_sum_counterexample(TriangleSpec const& t) {
    std::size_t const n = t.n;
    ChainEndo lhs = to_endo(t, {t.a + 1u, 0, n - t.a - 1});
    ChainEndo rhs = to_endo(t, {0, t.b + 1u, n - t.b - 1});
    ChainEndo sum = lhs + rhs;
    ChainEndo sq  = sum * sum;
    return {std::move(lhs), std::move(rhs), std::move(sum), std::move(sq)};
  }

  //! Idempotents lying on one of the three sides.
  inline Subset boundary_idempotents(TriangleSpec const& t) {
    return filter(Subset(t.n, boundary(as_simplex(t))),
                  [](ChainEndo const& x) { return is_idempotent(x); });
  }

  //! Closure of the boundary idempotents under *.  This fails in general:
  //! in the cross-string rule the middle case x_k y_{n-k} is idempotent only
  //! when x + 1 <= k <= y.
  inline Verdict boundary_idempotents_closed(TriangleSpec const& t) {
    return is_mul_closed(boundary_idempotents(t));
  }

  //! The squared interior element leaving the interior: a b_b c_{n-b-1} when
  //! a > 0 and 0 b_{b-1} c_{n-b} when a = 0.  Empty when that element is not
  //! interior (a = 0 and b = 1).
  inline std::optional<std::pair<ChainEndo, ChainEndo>>
  interior_square_witness(TriangleSpec const& t) {
    std::size_t const n = t.n;
    TriElem           e{};
    if (t.a > 0) {
      e = {1, t.b, n - t.b - 1};
    } else {
      e = {1, t.b - 1u, n - t.b};
    }
    if (e.l == 0 || e.m == 0) {
      return std::nullopt;
    }
    ChainEndo x = to_endo(t, e);
    ChainEndo y = x * x;
    return std::pair{std::move(x), std::move(y)};
  }

  //! a_k b_l c_m -> a'_k b'_l c'_m between two triangles over the same n.
  inline ChainEndo additive_phi(TriangleSpec const& from,
                                TriangleSpec const& to,
                                ChainEndo const&    x) {
    if (from.n != to.n) {
      throw Error(ErrorKind::SizeMismatch, "triangles over different chains");
    }
    return to_endo(to, to_tri_elem(from, x));
  }

  struct PhiReport {
    bool preserves_add = true;
    bool preserves_mul = true;
  };

  inline PhiReport check_phi(TriangleSpec const& from, TriangleSpec const& to) {
    PhiReport              r;
    std::vector<ChainEndo> xs = enumerate_triangle(from);
    for (ChainEndo const& x : xs) {
      ChainEndo const fx = additive_phi(from, to, x);
      for (ChainEndo const& y : xs) {
        ChainEndo const fy = additive_phi(from, to, y);
        r.preserves_add = r.preserves_add && additive_phi(from, to, x + y) == fx + fy;
        r.preserves_mul = r.preserves_mul && additive_phi(from, to, x * y) == fx * fy;
      }
    }
    return r;
  }

  inline std::vector<TriangleSpec> all_triangles(std::size_t n) {
    std::vector<TriangleSpec> out;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        for (std::size_t c = b + 1; c < n; ++c) {
          out.push_back(make_triangle(n, a, b, c));
        }
      }
    }
    return out;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_TRIANGLE_HPP_
