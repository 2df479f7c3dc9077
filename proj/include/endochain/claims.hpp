#ifndef ENDOCHAIN_CLAIMS_HPP_
#define ENDOCHAIN_CLAIMS_HPP_

// Registry of checkable statements.  Each claim owns a parameter iterator
// and a checker; `run_claims` fans the (claim, params) pairs out over worker
// threads and returns results in registry-then-parameter order.
//
// Three kinds of claim:
//   Statement  must hold on every instance.
//   Erratum    the statement as written fails somewhere; a corrected form is
//              checked alongside and must hold everywhere.
//   Finding    reported per instance, never counted as a violation.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "analysis.hpp"
#include "chain_endo.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "simplex.hpp"
#include "strings.hpp"
#include "triangle.hpp"

namespace endochain {

  enum class ClaimKind { Statement, Erratum, Finding };

  inline char const* to_string(ClaimKind k) noexcept {
    switch (k) {
      case ClaimKind::Statement: return "statement";
      case ClaimKind::Erratum: return "erratum";
      case ClaimKind::Finding: return "finding";
    }
    return "statement";
  }

  struct ClaimParams {
    std::vector<std::size_t> values;
    std::string              label;

    friend bool operator==(ClaimParams const&, ClaimParams const&) = default;
  };

  struct ClaimOutcome {
    bool                       holds = true;
    std::optional<std::string> witness;
    std::optional<bool>        corrected;  // set for errata only
    std::string                note;
  };

  struct ClaimResult {
    std::string                claim;
    ClaimKind                  kind = ClaimKind::Statement;
    ClaimParams                params;
    bool                       holds = true;
    std::optional<std::string> witness;
    std::optional<bool>        corrected;
    std::string                note;
    std::chrono::nanoseconds   elapsed{0};

    //! Whether this instance counts as a violation of the registry.
    [[nodiscard]] bool passed() const noexcept {
      switch (kind) {
        case ClaimKind::Statement: return holds;
        case ClaimKind::Erratum: return corrected.value_or(false);
        case ClaimKind::Finding: return true;
      }
      return holds;
    }
  };

  struct Claim {
    std::string_view id;
    ClaimKind        kind;
    std::string_view statement;
    std::size_t      n_min;
    std::size_t      n_cap;  // exhaustive checks stop here whatever n_max is
    std::vector<ClaimParams> (*params)(std::size_t n_lo, std::size_t n_hi);
    ClaimOutcome (*check)(ClaimParams const& p);
  };

  namespace claims_detail {

    //! Records the first failure.  `why` is only evaluated on failure.
    template <class F>
    bool need(ClaimOutcome& o, bool cond, F&& why) {
      if (!cond && o.holds) {
        o.holds   = false;
        o.witness = why();
      }
      return cond;
    }

    inline bool need_verdict(ClaimOutcome& o, Verdict const& v, std::string_view what) {
      return need(o, v.holds, [&] {
        return std::string(what) + ": " + (v.witness ? to_string(*v.witness) : "");
      });
    }

    inline std::string show(ChainEndo const& x) {
      return format_compact(x);
    }

    inline std::string list(std::vector<std::size_t> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s;
    }

    // Parameter iterators.

    inline std::vector<ClaimParams> per_n(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = lo; n <= hi; ++n) {
        out.push_back({{n}, "n=" + std::to_string(n)});
      }
      return out;
    }

    inline std::vector<ClaimParams> nilpotent_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = lo; n <= hi; ++n) {
        for (std::size_t a = 0; a < n; ++a) {
          out.push_back({{n, a}, "n=" + std::to_string(n) + " a=" + std::to_string(a)});
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> fixed_set_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = lo; n <= hi; ++n) {
        for (std::size_t s = 1; s + 1 <= n; ++s) {
          for (auto const& v : vertex_sets(n, s)) {
            std::vector<std::size_t> p{n};
            p.insert(p.end(), v.begin(), v.end());
            std::vector<std::size_t> const ks(v.begin(), v.end());
            out.push_back({std::move(p), "n=" + std::to_string(n) + " K=" + list(ks)});
          }
        }
      }
      return out;
    }

    inline ClaimParams simplex_param(SimplexSpec const& s) {
      std::vector<std::size_t> p{s.n};
      p.insert(p.end(), s.vertices.begin(), s.vertices.end());
      return {std::move(p), to_string(s)};
    }

    inline SimplexSpec simplex_of(ClaimParams const& p) {
      std::vector<Point> v;
      for (std::size_t i = 1; i < p.values.size(); ++i) {
        v.push_back(static_cast<Point>(p.values[i]));
      }
      return make_simplex(p.values[0], v);
    }

    inline std::vector<ClaimParams> simplex_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = lo; n <= hi; ++n) {
        for (auto const& s : all_simplices(n)) {
          out.push_back(simplex_param(s));
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> internal_simplex_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (auto& p : simplex_params(lo, hi)) {
        if (is_internal(simplex_of(p))) {
          out.push_back(std::move(p));
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> face_simplex_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (auto& p : simplex_params(lo, hi)) {
        if (p.values.size() >= 3) {
          out.push_back(std::move(p));
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> middle_simplex_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (auto& p : simplex_params(lo, hi)) {
        if (p.values.size() >= 4) {
          out.push_back(std::move(p));
        }
      }
      return out;
    }

    inline StringSpec string_of(ClaimParams const& p, std::size_t at = 1) {
      return make_string(p.values[0], p.values[at], p.values[at + 1]);
    }

    inline std::vector<ClaimParams> string_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        for (auto const& v : vertex_sets(n, 2)) {
          StringSpec const s = make_string(n, v[0], v[1]);
          out.push_back({{n, s.a, s.b}, to_string(s)});
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> string_pair_params(std::size_t lo, std::size_t hi,
                                                       bool distinct) {
      std::vector<ClaimParams> out;
      for (std::size_t n = std::max<std::size_t>(lo, 2); n <= hi; ++n) {
        auto const vs = vertex_sets(n, 2);
        for (auto const& v : vs) {
          for (auto const& w : vs) {
            if (distinct && v == w) {
              continue;
            }
            StringSpec const s = make_string(n, v[0], v[1]), t = make_string(n, w[0], w[1]);
            out.push_back({{n, s.a, s.b, t.a, t.b}, to_string(s) + " | " + to_string(t)});
          }
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> all_string_pairs(std::size_t lo, std::size_t hi) {
      return string_pair_params(lo, hi, false);
    }

    inline std::vector<ClaimParams> distinct_string_pairs(std::size_t lo, std::size_t hi) {
      return string_pair_params(lo, hi, true);
    }

    inline TriangleSpec triangle_of(ClaimParams const& p, std::size_t at = 1) {
      return make_triangle(p.values[0], p.values[at], p.values[at + 1], p.values[at + 2]);
    }

    inline std::vector<ClaimParams> triangle_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) {
        for (auto const& t : all_triangles(n)) {
          out.push_back({{n, t.a, t.b, t.c}, to_string(t)});
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> consecutive_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (auto& p : triangle_params(lo, hi)) {
        TriangleSpec const t = triangle_of(p);
        p.label = "n=" + std::to_string(t.n) + " a=" + std::to_string(t.a)
                  + " b=" + std::to_string(t.b) + " c=" + std::to_string(t.c);
        out.push_back(std::move(p));
      }
      return out;
    }

    inline std::vector<ClaimParams> triangle_pair_params(std::size_t lo, std::size_t hi) {
      std::vector<ClaimParams> out;
      for (std::size_t n = std::max<std::size_t>(lo, 3); n <= hi; ++n) {
        auto const ts = all_triangles(n);
        for (auto const& s : ts) {
          for (auto const& t : ts) {
            if (s == t) {
              continue;
            }
            out.push_back({{n, s.a, s.b, s.c, t.a, t.b, t.c},
                           to_string(s) + " | " + to_string(t)});
          }
        }
      }
      return out;
    }

    inline std::vector<ClaimParams> example_n4_params(std::size_t lo, std::size_t hi) {
      if (lo <= 4 && 4 <= hi) {
        return {{{4, 1, 2, 3}, to_string(make_triangle(4, 1, 2, 3))}};
      }
      return {};
    }

    inline std::vector<ClaimParams> example_n6_params(std::size_t lo, std::size_t hi) {
      if (lo <= 6 && 6 <= hi) {
        return {{{6, 1, 3, 4}, to_string(make_triangle(6, 1, 3, 4))}};
      }
      return {};
    }

    // Checkers.

    inline ClaimOutcome semiring_axioms(ClaimParams const& p) {
      ClaimOutcome o;
      auto const   all = all_endomorphisms(p.values[0]);
      for (auto const& x : all) {
        need(o, x + x == x, [&] { return "x + x != x for x = " + show(x); });
        for (auto const& y : all) {
          need(o, x + y == y + x, [&] { return "+ not commutative at " + show(x) + ", " + show(y); });
          for (auto const& z : all) {
            need(o, (x + y) + z == x + (y + z), [&] { return "+ not associative at " + show(x); });
            need(o, (x * y) * z == x * (y * z), [&] { return "* not associative at " + show(x); });
            need(o, x * (y + z) == x * y + x * z,
                 [&] { return "left distributivity fails at " + show(x); });
            need(o, (y + z) * x == y * x + z * x,
                 [&] { return "right distributivity fails at " + show(x); });
          }
          if (!o.holds) {
            return o;
          }
        }
      }
      return o;
    }

    inline ClaimOutcome catalan_count(ClaimParams const& p) {
      ClaimOutcome      o;
      std::size_t const n = p.values[0], a = p.values[1];
      Subset const      nil = filter(Subset(n, all_endomorphisms(n)), [&](ChainEndo const& x) {
        return is_nilpotent_to(x, static_cast<Point>(a));
      });
      Count const want = evaluate(FormulaId::CatalanNilpotent, {n, a});
      need(o, nil.size() == want, [&] {
        return std::to_string(nil.size()) + " nilpotents, formula gives " + std::to_string(want);
      });
      need_verdict(o, is_subsemiring(nil), "nilpotents not closed");
      o.note = "count " + std::to_string(nil.size());
      return o;
    }

    inline ClaimOutcome idempotent_count(ClaimParams const& p) {
      ClaimOutcome             o;
      std::size_t const        n = p.values[0];
      std::vector<Point> const ks(p.values.begin() + 1, p.values.end());
      Subset const             s = filter(Subset(n, all_endomorphisms(n)), [&](ChainEndo const& x) {
        return is_idempotent(x) && fixed_points(x) == ks;
      });
      Count const want = evaluate(FormulaId::IdempotentFixedPoints, p.values);
      need(o, s.size() == want, [&] {
        return std::to_string(s.size()) + " idempotents, formula gives " + std::to_string(want);
      });
      need_verdict(o, is_subsemiring(s), "idempotents with these fixed points not closed");
      return o;
    }

    inline ClaimOutcome simplex_subsemiring(ClaimParams const& p) {
      ClaimOutcome o;
      need_verdict(o, is_subsemiring(simplex_set(simplex_of(p))), "simplex not closed");
      return o;
    }

    inline ClaimOutcome simplex_faces(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      Subset            faces(s.n, {});
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        faces = set_union(faces, simplex_set(facet(s, m)));
      }
      need(o, faces == Subset(s.n, boundary(s)), [] { return std::string("boundary != union of facets"); });
      for (auto const& x : interior(s)) {
        need(o, image(x) == s.vertices, [&] { return "interior element " + show(x) + " misses a vertex"; });
      }
      need(o, boundary(s).size() + interior(s).size() == enumerate_simplex(s).size(),
           [] { return std::string("boundary and interior do not partition"); });
      return o;
    }

    inline ClaimOutcome layer_partition(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      std::size_t const total = enumerate_simplex(s).size();
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        std::size_t count = 0;
        for (std::size_t k = 0; k <= s.n; ++k) {
          for (auto const& x : layer({s, m, k})) {
            ++count;
            need(o, multiplicity(x, s.vertices[m]) == k,
                 [&] { return show(x) + " in the wrong layer"; });
          }
        }
        need(o, count == total, [&] { return "layers of vertex " + std::to_string(m) + " miss elements"; });
      }
      return o;
    }

    inline ClaimOutcome dn1_subsemiring(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        need_verdict(o, is_subsemiring(Subset(s.n, discrete_neighborhood(s, m, 1))),
                     "DN^1 of vertex " + std::to_string(m));
      }
      return o;
    }

    inline ClaimOutcome dn1_internal_nilpotent(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        Subset const dn(s.n, discrete_neighborhood(s, m, 1));
        need(o, is_commutative(dn), [&] { return "DN^1 of vertex " + std::to_string(m) + " not commutative"; });
        for (auto const& x : dn) {
          need(o, is_nilpotent_to(x, s.vertices[m]), [&] { return show(x) + " not nilpotent"; });
        }
      }
      return o;
    }

    inline ClaimOutcome dn2_internal(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      for (std::size_t m = 0; m < s.dimension(); ++m) {
        need_verdict(o, is_subsemiring(Subset(s.n, discrete_neighborhood(s, m, 2))),
                     "DN^2 of vertex " + std::to_string(m));
      }
      return o;
    }

    inline std::vector<ChainEndo> fixing(SimplexSpec const& s, Point v) {
      std::vector<ChainEndo> out;
      for (auto& x : enumerate_simplex(s)) {
        if (x[v] == v) {
          out.push_back(std::move(x));
        }
      }
      return out;
    }

    inline ClaimOutcome dn_fixpoints(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s  = simplex_of(p);
      Point const       a0 = s.vertices.front(), ak = s.vertices.back();
      need(o, discrete_neighborhood(s, 0, s.n - a0 - 1) == fixing(s, a0),
           [] { return std::string("least vertex: DN != fixed-point set"); });
      need(o, discrete_neighborhood(s, s.dimension() - 1, ak) == fixing(s, ak),
           [] { return std::string("greatest vertex: DN != fixed-point set"); });
      return o;
    }

    inline ClaimOutcome nilpotency_condition(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s  = simplex_of(p);
      Point const       a0 = s.vertices.front();
      for (auto const& x : fixing(s, a0)) {
        if (nilpotent_in_neighborhood(s, x)) {
          need(o, is_nilpotent_to(x, a0), [&] { return show(x) + " meets the condition but is not nilpotent"; });
        }
      }
      return o;
    }

    inline ClaimOutcome top_layer(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s   = simplex_of(p);
      auto const        top = layer({s, 0, s.vertices.front() + 1u});
      if (!top.empty()) {
        need_verdict(o, is_subsemiring(Subset(s.n, top)), "top layer");
      }
      return o;
    }

    inline ClaimOutcome dn_middle_radius(ClaimParams const& p) {
      ClaimOutcome      o;
      SimplexSpec const s = simplex_of(p);
      std::string       note;
      for (std::size_t m = 1; m + 1 < s.dimension(); ++m) {
        RadiusReport const r = min_semiring_radius(s, m);
        need_verdict(o, is_subsemiring(Subset(s.n, discrete_neighborhood(s, m, 2))),
                     "DN^2 of middle vertex " + std::to_string(m));
        std::vector<std::size_t> const fails(r.failing_radii.begin(), r.failing_radii.end());
        note += (note.empty() ? "" : "; ") + std::string("m=") + std::to_string(m)
                + " closed_through=" + std::to_string(r.closed_through)
                + " failing=[" + list(fails) + "]";
      }
      o.note = note;
      return o;
    }

    inline ClaimOutcome triangle_noniso(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const s = triangle_of(p, 1), t = triangle_of(p, 4);
      PhiReport const    phi = check_phi(s, t);
      need(o, phi.preserves_add, [] { return std::string("additive map does not preserve +"); });
      need(o, !phi.preserves_mul, [] { return std::string("additive map preserves *"); });
      need(o, !iso_check(triangle_set(s), triangle_set(t)).isomorphic,
           [] { return std::string("triangles are isomorphic"); });
      return o;
    }

    inline ClaimOutcome string_partition(ClaimParams const& p) {
      ClaimOutcome           o;
      StringSpec const       s  = string_of(p);
      StringPartition const  pt = partition_string(s);
      std::size_t const      n  = s.n;
      need(o, pt.nil_a.size() == n - s.b && pt.idem.size() == std::size_t{s.b} - s.a
                  && pt.nil_b.size() == s.a + 1u,
           [] { return std::string("part sizes differ from (n-b, b-a, a+1)"); });
      for (auto const& x : pt.nil_a) {
        need(o, is_nilpotent_to(x, s.a), [&] { return show(x) + " not a-nilpotent"; });
      }
      for (auto const& x : pt.idem) {
        need(o, is_idempotent(x) && !is_constant(x), [&] { return show(x) + " not a non-constant idempotent"; });
      }
      for (auto const& x : pt.nil_b) {
        need(o, is_nilpotent_to(x, s.b), [&] { return show(x) + " not b-nilpotent"; });
      }
      for (auto const* part : {&pt.nil_a, &pt.idem, &pt.nil_b}) {
        need_verdict(o, is_subsemiring(Subset(n, *part)), "part not closed");
      }
      return o;
    }

    inline ClaimOutcome string_mul(ClaimParams const& p) {
      ClaimOutcome     o;
      StringSpec const s = string_of(p);
      for (std::size_t k = 0; k <= s.n; ++k) {
        for (std::size_t l = 0; l <= s.n; ++l) {
          need(o, string_mul_cases({s, k}, {s, l}) == string_elem(s, k) * string_elem(s, l),
               [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); });
        }
      }
      return o;
    }

    inline ClaimOutcome string_cross(ClaimParams const& p) {
      ClaimOutcome     o;
      StringSpec const s = string_of(p, 1), t = string_of(p, 3);
      for (std::size_t k = 0; k <= s.n; ++k) {
        for (std::size_t l = 0; l <= s.n; ++l) {
          need(o, string_mul_cases({s, k}, {t, l}) == string_elem(s, k) * string_elem(t, l),
               [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); });
        }
      }
      return o;
    }

    inline ClaimOutcome string_right_identities(ClaimParams const& p) {
      ClaimOutcome     o;
      StringSpec const s   = string_of(p);
      auto const       ids = identities(Subset(s.n, enumerate_string(s)));
      need(o, ids.right == partition_string(s).idem,
           [] { return std::string("right identities differ from the idempotent part"); });
      return o;
    }

    inline ClaimOutcome string_noniso(ClaimParams const& p) {
      ClaimOutcome     o;
      StringSpec const s = string_of(p, 1), t = string_of(p, 3);
      need(o, !string_iso(s, t).isomorphic, [] { return std::string("strings are isomorphic"); });
      return o;
    }

    inline ClaimOutcome consecutive(ClaimParams const& p) {
      ClaimOutcome o;
      auto const   u = consecutive_union(p.values[0], p.values[1], p.values[2], p.values[3]);
      need_verdict(o, u.semiring, "union of consecutive strings");
      need(o, u.elements.size() == 2 * p.values[0] + 1,
           [] { return std::string("union does not have 2n + 1 elements"); });
      need(o, !u.three_strings.holds, [] { return std::string("all three strings together are closed"); });
      if (u.three_strings.witness) {
        o.note = "three strings: " + to_string(*u.three_strings.witness);
      }
      return o;
    }

    inline ClaimOutcome string_trivial(ClaimParams const& p) {
      ClaimOutcome          o;
      StringSpec const      s  = string_of(p);
      StringPartition const pt = partition_string(s);
      auto const            na = triviality(Subset(s.n, pt.nil_a));
      auto const            nb = triviality(Subset(s.n, pt.nil_b));
      need(o, na.is_trivial && na.lower, [] { return std::string("a-nilpotent part not lower trivial"); });
      need(o, nb.is_trivial && nb.upper, [] { return std::string("b-nilpotent part not upper trivial"); });
      return o;
    }

    inline ClaimOutcome string_families(ClaimParams const& p) {
      ClaimOutcome     o;
      StringSpec const s = string_of(p);
      for (std::size_t r = 1; r <= s.n; ++r) {
        need(o, static_cast<bool>(family_A(s, r).semiring) == (r >= s.a + 1u),
             [&] { return "A_" + std::to_string(r) + " verdict"; });
      }
      for (std::size_t q = 0; q < s.n; ++q) {
        need(o, static_cast<bool>(family_B(s, q).semiring) == (q <= s.b),
             [&] { return "B_" + std::to_string(q) + " verdict"; });
      }
      return o;
    }

    inline ClaimOutcome triangle_order_check(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      std::size_t const  k = enumerate_triangle(t).size();
      need(o, k == binomial(t.n + 2, 2), [&] { return std::to_string(k) + " elements"; });
      return o;
    }

    inline ClaimOutcome interior_sum(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t  = triangle_of(p);
      StringSpec const   ab = make_string(t.n, t.a, t.b), ac = make_string(t.n, t.a, t.c);
      auto const         sab = enumerate_string(ab), sac = enumerate_string(ac);
      for (auto const& x : interior(as_simplex(t))) {
        auto const [u0, v0] = interior_decompose(t, x);
        std::size_t count   = 0;
        for (auto const& u : sab) {
          if (is_constant(u)) {
            continue;
          }
          for (auto const& v : sac) {
            if (!is_constant(v) && u + v == x) {
              ++count;
              need(o, u == u0 && v == v0, [&] { return "second decomposition of " + show(x); });
            }
          }
        }
        need(o, count == 1, [&] { return show(x) + " has " + std::to_string(count) + " decompositions"; });
      }
      return o;
    }

    inline ClaimOutcome boundary_semigroup(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      Subset const       bd(t.n, boundary(as_simplex(t)));
      need_verdict(o, is_mul_closed(bd), "boundary not closed under *");
      Verdict const add = is_add_closed(bd);
      need(o, !add.holds, [] { return std::string("boundary closed under +"); });
      if (add.witness) {
        o.note = to_string(*add.witness);
      }
      return o;
    }

    inline ClaimOutcome interior_semigroup(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      Subset const       in(t.n, interior(as_simplex(t)));
      need_verdict(o, is_add_closed(in), "interior not closed under +");
      Verdict const mul = is_mul_closed(in);
      need(o, !mul.holds, [] { return std::string("interior closed under *"); });
      if (auto w = interior_square_witness(t)) {
        need(o, in.contains(w->first) && !in.contains(w->second),
             [&] { return "closed-form witness " + show(w->first) + " fails"; });
        o.note = "(" + show(w->first) + ")^2 = " + show(w->second);
      } else if (mul.witness) {
        o.note = to_string(*mul.witness);
      }
      return o;
    }

    inline ClaimOutcome right_identity_exists(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t   = triangle_of(p);
      auto const         ids = identities(triangle_set(t));
      need(o, !ids.right.empty(), [] { return std::string("no right identity"); });
      need(o, ids.left.empty(), [&] { return "left identity " + show(ids.left.front()); });
      need(o, ids.right == right_identities(t), [] { return std::string("right identities differ from the closed form"); });
      return o;
    }

    inline ClaimOutcome right_similar_none(ClaimParams const& p) {
      ClaimOutcome o;
      auto const   pairs = find_similar_pairs(triangle_of(p), Side::Right);
      need(o, pairs.empty(), [&] {
        return "right-similar " + show(pairs.front().first) + " ~ " + show(pairs.front().second);
      });
      return o;
    }

    inline ClaimOutcome identity_least_triangle(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t   = triangle_of(p);
      auto const         ids = identities(triangle_set(t));
      if (t.n == 3) {
        need(o, ids.two_sided == std::vector<ChainEndo>{identity(3)},
             [] { return std::string("identity missing from the least triangle"); });
      } else {
        need(o, ids.two_sided.empty(), [&] { return "identity " + show(ids.two_sided.front()); });
      }
      return o;
    }

    inline ClaimOutcome basic_layers_closed(ClaimParams const& p, BasicVertex v) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      for (auto const& l : basic_layers(t, v)) {
        auto const el = l.elements();
        need_verdict(o, is_subsemiring(Subset(t.n, el)), "basic layer k=" + std::to_string(l.k));
        need(o, is_idempotent(el.front()) && is_idempotent(el.back()),
             [&] { return "ends of layer k=" + std::to_string(l.k) + " not idempotent"; });
      }
      return o;
    }

    inline ClaimOutcome basic_layers_a(ClaimParams const& p) {
      return basic_layers_closed(p, BasicVertex::A);
    }

    inline ClaimOutcome basic_layers_c(ClaimParams const& p) {
      return basic_layers_closed(p, BasicVertex::C);
    }

    inline ClaimOutcome layer_iso(ClaimParams const& p, BasicVertex v) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto [lo, hi]        = basic_range(t, v);
      for (std::size_t k = lo; k <= hi; ++k) {
        LayerIso const li = layer_string_iso(t, v, k);
        need(o, li.iso.isomorphic, [&] { return "layer k=" + std::to_string(k) + " vs " + to_string(li.target); });
      }
      return o;
    }

    inline ClaimOutcome layer_iso_a(ClaimParams const& p) {
      return layer_iso(p, BasicVertex::A);
    }

    inline ClaimOutcome layer_iso_c(ClaimParams const& p) {
      return layer_iso(p, BasicVertex::C);
    }

    inline ClaimOutcome left_similar(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t      = triangle_of(p);
      Subset const       s      = triangle_set(t);
      auto const [x, y]         = left_similar_witness(t);
      auto const         ri     = right_identities(t);
      auto const         is_ri  = [&](ChainEndo const& z) {
        return std::find(ri.begin(), ri.end(), z) != ri.end();
      };
      need(o, s.contains(x) && s.contains(y) && x != y, [] { return std::string("witness pair malformed"); });
      need(o, are_left_similar(s, x, y), [&] { return show(x) + " and " + show(y) + " not left-similar"; });
      need(o, !is_ri(x) && !is_ri(y), [] { return std::string("witness contains a right identity"); });
      o.note = show(x) + " ~ " + show(y);
      return o;
    }

    inline ClaimOutcome interior_idempotents(ClaimParams const& p) {
      ClaimOutcome           o;
      TriangleSpec const     t = triangle_of(p);
      std::vector<ChainEndo> idem;
      for (auto const& x : interior(as_simplex(t))) {
        if (is_idempotent(x)) {
          idem.push_back(x);
        }
      }
      need(o, idem == identities(triangle_set(t)).right,
           [] { return std::string("interior idempotents differ from right identities"); });
      return o;
    }

    inline Subset fixing_both(TriangleSpec const& t, Point u, Point v) {
      return filter(triangle_set(t), [&](ChainEndo const& x) { return fixes(x, u) && fixes(x, v); });
    }

    inline ClaimOutcome it_order(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t  = triangle_of(p);
      auto const         r  = idempotent_triangle(t);
      std::size_t const  n  = t.n;
      need(o, r.it.size() == r.it_formula, [&] { return "|IT| = " + std::to_string(r.it.size()); });
      for (TriElem const e : {TriElem{t.c, 0, n - t.c}, TriElem{t.a + 1u, t.c - t.a - 1u, n - t.c},
                              TriElem{t.a + 1u, 0, n - t.a - 1u}}) {
        need(o, r.it.contains(to_endo(t, e)), [&] { return "vertex " + show(to_endo(t, e)) + " missing"; });
      }
      for (auto const& x : r.it) {
        need(o, is_idempotent(x) || r.id_ac.contains(x * x),
             [&] { return show(x) + " is neither idempotent nor a root of Id(STR{a,c})"; });
      }
      return o;
    }

    inline ClaimOutcome it_fixed_points(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t  = triangle_of(p);
      auto const         r  = idempotent_triangle(t);
      Subset const       ab = fixing_both(t, t.a, t.b);
      ChainEndo const    v  = to_endo(t, {t.c, 0, t.n - t.c});
      need(o, ab == r.it, [&] { return show(v) + " is a vertex of IT but does not fix b"; });
      o.corrected = r.it == fixing_both(t, t.a, t.c) && r.it.size() == r.it_formula;
      o.note      = "{a,b} reading has " + std::to_string(ab.size()) + " elements, IT has "
               + std::to_string(r.it.size());
      return o;
    }

    inline ClaimOutcome ri_order(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         r = idempotent_triangle(t);
      need_verdict(o, r.ri_closed, "RI not closed");
      need(o, r.ri.size() == r.ri_as_stated, [&] {
        return "|RI| = " + std::to_string(r.ri.size()) + ", stated order "
               + std::to_string(r.ri_as_stated);
      });
      o.corrected = r.ri_closed.holds && r.ri.size() == r.ri_formula;
      return o;
    }

    inline ClaimOutcome it_minus_ri(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         r = idempotent_triangle(t);
      need_verdict(o, r.rest_closed, "IT minus RI not closed");
      need(o, r.it_minus_ri.size() == r.rest_formula,
           [&] { return "|IT minus RI| = " + std::to_string(r.it_minus_ri.size()); });
      return o;
    }

    inline ClaimOutcome it_ideals(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         r = idempotent_triangle(t);
      need_verdict(o, r.id_ac_ideal, "Id(STR{a,c}) not an ideal");
      need_verdict(o, r.rest_ideal, "IT minus RI not an ideal");
      need(o, r.id_ac_left_zeroes, [] { return std::string("Id(STR{a,c}) has a non-left-zero"); });
      return o;
    }

    inline ClaimOutcome it_disjoint_union(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         r = idempotent_triangle(t);
      need(o, set_union(r.ri, r.it_minus_ri) == r.it && set_intersection(r.ri, r.it_minus_ri).empty(),
           [] { return std::string("RI and IT minus RI do not partition IT"); });
      need_verdict(o, r.ri_closed, "RI not closed");
      need_verdict(o, r.rest_closed, "IT minus RI not closed");
      return o;
    }

    inline ClaimOutcome lr_triangles(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         r = idempotent_triangle(t);
      need_verdict(o, r.l_tri_closed, "L-triangle not closed");
      need_verdict(o, r.r_tri_closed, "R-triangle not closed");
      need(o, set_union(r.l_tri, r.r_tri) == r.it_minus_ri,
           [] { return std::string("L and R triangles do not cover IT minus RI"); });
      need(o, r.l_below_r, [] { return std::string("some L element is not below every R element"); });
      return o;
    }

    inline ClaimOutcome nil_regions(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t   = triangle_of(p);
      RegionReport const rep = decompose(t);
      for (auto [g, v] : {std::pair{Region::NilA, t.a}, std::pair{Region::NilB, t.b},
                          std::pair{Region::NilC, t.c}}) {
        RegionEntry const& e = rep.at(g);
        need(o, e.closed.holds, [&] { return std::string(to_string(g)) + " not closed"; });
        need(o, e.elements.size() == e.formula, [&] { return std::string(to_string(g)) + " order"; });
        for (auto const& x : e.elements) {
          need(o, is_nilpotent_to(x, v), [&] { return show(x) + " in " + to_string(g) + " not nilpotent"; });
        }
      }
      return o;
    }

    inline ClaimOutcome nil_trivial(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t   = triangle_of(p);
      RegionReport const rep = decompose(t);
      auto trivial = [&](Region g) { return rep.at(g).triviality->is_trivial; };
      for (Region g : {Region::NilA, Region::NilB, Region::NilC}) {
        need(o, trivial(g), [&] {
          auto const& el = rep.at(g).elements;
          for (auto const& x : el) {
            for (auto const& y : el) {
              if (x * y != el[0] * el[0]) {
                return std::string(to_string(g)) + ": (" + show(el[0]) + ")^2 = "
                       + show(el[0] * el[0]) + " but " + show(x) + " * " + show(y)
                       + " = " + show(x * y);
              }
            }
          }
          return std::string(to_string(g)) + " not trivial";
        });
      }
      o.corrected = trivial(Region::NilB) && trivial(Region::NilA) == (t.c + 1u == t.n)
                    && trivial(Region::NilC) == (t.a == 0);
      return o;
    }

    inline ClaimOutcome parallelograms(ClaimParams const& p) {
      ClaimOutcome       o;
      RegionReport const rep = decompose(triangle_of(p));
      for (Region g : {Region::LPar, Region::RPar}) {
        RegionEntry const& e = rep.at(g);
        need(o, e.closed.holds, [&] { return std::string(to_string(g)) + " not closed"; });
        need(o, e.elements.size() == e.formula, [&] { return std::string(to_string(g)) + " order"; });
      }
      return o;
    }

    inline ClaimOutcome type_triples(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t     = triangle_of(p);
      auto const         types = all_type_triples();
      for (auto const& x : enumerate_triangle(t)) {
        TypeTriple const tt = elem_type(t, x);
        need(o, std::count(types.begin(), types.end(), tt) == 1,
             [&] { return show(x) + " has type " + to_string(tt); });
        need(o, in_region_intrinsic(t, region_of(tt), x),
             [&] { return show(x) + " type region disagrees with the intrinsic one"; });
      }
      return o;
    }

    inline ClaimOutcome eight_regions(ClaimParams const& p) {
      ClaimOutcome       o;
      RegionReport const rep = decompose(triangle_of(p));
      need(o, rep.disjoint && rep.cover, [] { return std::string("regions do not partition"); });
      for (auto const& e : rep.regions) {
        need(o, e.closed.holds, [&] {
          return std::string(to_string(e.region)) + " not closed: " + to_string(*e.closed.witness);
        });
        need(o, e.elements.size() == e.formula, [&] {
          return std::string(to_string(e.region)) + " has " + std::to_string(e.elements.size())
                 + " elements, formula " + std::to_string(e.formula);
        });
        need(o, e.matches_intrinsic, [&] { return std::string(to_string(e.region)) + " intrinsic mismatch"; });
      }
      need(o, rep.total == binomial(rep.spec.n + 2, 2), [] { return std::string("total"); });
      return o;
    }

    inline ClaimOutcome fix_b_union(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t   = triangle_of(p);
      RegionReport const rep = decompose(t);
      Subset const       fb  = filter(triangle_set(t), [&](ChainEndo const& x) { return fixes(x, t.b); });
      auto union_with = [&](Region first) {
        Subset u = rep.at(first).elements;
        for (Region g : {Region::LPar, Region::RPar, Region::RightIdentities}) {
          u = set_union(u, rep.at(g).elements);
        }
        return u;
      };
      need(o, union_with(Region::NilA) == fb, [&] {
        return show(rep.at(Region::NilA).elements[0]) + " is a-nilpotent and does not fix b";
      });
      o.corrected = union_with(Region::NilB) == fb;
      return o;
    }

    inline ClaimOutcome boundary_idempotents(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      Subset const       bi = endochain::boundary_idempotents(t);
      need_verdict(o, is_mul_closed(bi), "boundary idempotents");
      Subset const bd(t.n, boundary(as_simplex(t)));
      bool         inside = true;
      for (auto const& x : bi) {
        for (auto const& y : bi) {
          inside = inside && bd.contains(x * y);
        }
      }
      o.corrected = inside;
      return o;
    }

    inline ClaimOutcome idempotent_sum(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      auto const         w = idempotent_sum_counterexample(t);
      need(o, is_idempotent(w.lhs) && is_idempotent(w.rhs),
           [] { return std::string("summands not idempotent"); });
      need(o, w.sum == to_endo(t, {0, t.a + 1u, t.n - t.a - 1u}),
           [&] { return "sum is " + show(w.sum); });
      need(o, w.square == constant(t.n, t.c) && !is_idempotent(w.sum),
           [&] { return "square of the sum is " + show(w.square); });
      o.note = show(w.lhs) + " + " + show(w.rhs) + " = " + show(w.sum);
      return o;
    }

    inline ClaimOutcome example_n4(ClaimParams const& p) {
      ClaimOutcome       o;
      TriangleSpec const t = triangle_of(p);
      std::size_t const  n = t.n;
      auto const         E = [n](std::string_view s) { return parse_compact(s, n); };
      need(o, enumerate_triangle(t).size() == 15, [] { return std::string("order"); });
      Subset const want(n, {E("1_2 2 3"), E("1 2_2 3"), E("1 2 3_2")});
      need(o, Subset(n, interior(as_simplex(t))) == want, [] { return std::string("interior"); });
      need(o, E("1 2 3_2") * E("1 2 3_2") == E("2 3_3"), [] { return std::string("square"); });
      for (auto const& x : interior(as_simplex(t))) {
        auto const [u, v] = interior_decompose(t, x);
        need(o, u + v == x, [&] { return "decomposition of " + show(x); });
      }
      need(o, E("1_2 2_2") + E("1_3 3") == E("1_2 2 3") && E("1 2_3") + E("1_3 3") == E("1 2_2 3")
                  && E("1 2_3") + E("1_2 3_2") == E("1 2 3_2"),
           [] { return std::string("interior sums"); });
      return o;
    }

    inline ClaimOutcome example_n6(ClaimParams const& p) {
      ClaimOutcome       o;
      RegionReport const rep = decompose(triangle_of(p));
      std::vector<std::size_t> got;
      for (auto const& e : rep.regions) {
        got.push_back(e.elements.size());
      }
      std::vector<std::size_t> const want{5, 4, 7, 4, 2, 1, 3, 2};
      need(o, got == want, [&] { return "region sizes " + list(got); });
      need(o, rep.total == 28, [] { return std::string("total"); });
      return o;
    }

  }  // namespace claims_detail

  inline std::vector<Claim> const& claim_registry() {
    namespace d = claims_detail;
    using K     = ClaimKind;
    static std::vector<Claim> const registry{
        {"semiring-axioms", K::Statement, "monotone self-maps of C_n form an idempotent semiring under max and composition", 1, 5, d::per_n, d::semiring_axioms},
        {"catalan-count", K::Statement, "the a-nilpotents form a subsemiring of order C_a * C_(n-a-1)", 2, 9, d::nilpotent_params, d::catalan_count},
        {"idempotent-count", K::Statement, "idempotents with fixed points k_1..k_s form a semiring of order prod (k_(m+1) - k_m)", 3, 7, d::fixed_set_params, d::idempotent_count},
        {"simplex-subsemiring", K::Statement, "every k-simplex is a subsemiring", 1, 6, d::simplex_params, d::simplex_subsemiring},
        {"simplex-faces", K::Statement, "boundary is the union of the facets and interior is the set with full image", 2, 6, d::face_simplex_params, d::simplex_faces},
        {"layer-partition", K::Statement, "the layers of each vertex partition the simplex", 1, 6, d::simplex_params, d::layer_partition},
        {"dn1-subsemiring", K::Statement, "DN^1 of every vertex is a subsemiring", 1, 7, d::simplex_params, d::dn1_subsemiring},
        {"dn1-internal-nilpotent", K::Statement, "on internal simplices DN^1 is commutative and nilpotent to its vertex", 3, 7, d::internal_simplex_params, d::dn1_internal_nilpotent},
        {"dn2-internal-subsemiring", K::Statement, "on internal simplices DN^2 of every vertex is a subsemiring", 3, 7, d::internal_simplex_params, d::dn2_internal},
        {"thm5-dn-fixpoints", K::Statement, "DN^(n-a_0-1) of the least vertex and DN^(a_(k-1)) of the greatest are their fixed-point sets", 1, 7, d::simplex_params, d::dn_fixpoints},
        {"nilpotency-condition", K::Statement, "the neighbourhood condition on alpha implies alpha is a_0-nilpotent", 1, 7, d::simplex_params, d::nilpotency_condition},
        {"top-layer-subsemiring", K::Statement, "layer a_0 + 1 of the least vertex is a subsemiring", 1, 7, d::simplex_params, d::top_layer},
        {"dn-middle-radius", K::Finding, "DN^2 of a middle vertex is a subsemiring", 3, 6, d::middle_simplex_params, d::dn_middle_radius},
        {"triangle-noniso", K::Statement, "distinct triangles over C_n share their additive structure but are not isomorphic", 3, 5, d::triangle_pair_params, d::triangle_noniso},
        {"string-partition", K::Statement, "a string splits into a-nilpotent, idempotent and b-nilpotent subsemirings of orders n-b, b-a, a+1", 2, 8, d::string_params, d::string_partition},
        {"string-mul-cases", K::Statement, "products inside a string follow the three-case rule", 2, 8, d::string_params, d::string_mul},
        {"string-cross-product", K::Statement, "products across two strings follow the three-case rule", 2, 6, d::all_string_pairs, d::string_cross},
        {"string-right-identities", K::Statement, "the non-constant idempotents of a string are exactly its right identities", 2, 8, d::string_params, d::string_right_identities},
        {"string-noniso", K::Statement, "distinct strings over the same chain are not isomorphic", 3, 6, d::distinct_string_pairs, d::string_noniso},
        {"consecutive-union", K::Statement, "STR{a,b} U STR{b,c} is a semiring, adding STR{a,c} breaks closure", 3, 7, d::consecutive_params, d::consecutive},
        {"string-trivial-parts", K::Statement, "the a-nilpotent part is lower trivial and the b-nilpotent part upper trivial", 2, 8, d::string_params, d::string_trivial},
        {"string-families", K::Statement, "A_r is a semiring iff r >= a+1 and B_s iff s <= b", 2, 8, d::string_params, d::string_families},
        {"triangle-order", K::Statement, "a triangle has binom(n+2, 2) elements", 3, 10, d::triangle_params, d::triangle_order_check},
        {"interior-sum", K::Statement, "each interior element is a unique sum of non-vertex elements of STR{a,b} and STR{a,c}", 3, 7, d::triangle_params, d::interior_sum},
        {"boundary-semigroup", K::Statement, "the boundary is closed under * but not under +", 3, 7, d::triangle_params, d::boundary_semigroup},
        {"interior-semigroup", K::Statement, "for n >= 4 the interior is closed under + but not under *", 4, 7, d::triangle_params, d::interior_semigroup},
        {"right-identity-exists", K::Statement, "for n > 3 a triangle has right identities and no left identity", 4, 7, d::triangle_params, d::right_identity_exists},
        {"right-similar-none", K::Statement, "for n > 3 no two triangle elements are right-similar", 4, 7, d::triangle_params, d::right_similar_none},
        {"identity-least-triangle", K::Statement, "only the triangle {0,1,2} over C_3 has an identity", 3, 7, d::triangle_params, d::identity_least_triangle},
        {"basic-layer-a", K::Statement, "basic layers of a-bar are subsemirings with idempotent ends", 3, 7, d::triangle_params, d::basic_layers_a},
        {"basic-layer-c", K::Statement, "basic layers of c-bar are subsemirings with idempotent ends", 3, 7, d::triangle_params, d::basic_layers_c},
        {"layer-string-iso-a", K::Statement, "basic layer k of a-bar is isomorphic to STR^(n-k){b-k, c-k}", 3, 7, d::triangle_params, d::layer_iso_a},
        {"layer-string-iso-c", K::Statement, "basic layer k of c-bar is isomorphic to STR^(n-k){a, b}", 3, 7, d::triangle_params, d::layer_iso_c},
        {"left-similar-exists", K::Statement, "for n > 3 there is a left-similar pair of non-right-identities", 4, 7, d::triangle_params, d::left_similar},
        {"interior-idempotents-ri", K::Statement, "the interior idempotents are exactly the right identities", 3, 8, d::triangle_params, d::interior_idempotents},
        {"it-order", K::Statement, "IT has (c-a)(c-a+1)/2 elements spanned by its three vertices", 3, 8, d::triangle_params, d::it_order},
        {"it-fixed-points-as-stated", K::Erratum, "IT is the set fixing a and b (corrected: fixing a and c)", 3, 8, d::triangle_params, d::it_fixed_points},
        {"ri-order-as-stated", K::Erratum, "RI is a subsemiring of order (b-a)(c-a) (corrected: (b-a)(c-b))", 3, 8, d::triangle_params, d::ri_order},
        {"it-minus-ri", K::Statement, "IT minus RI is a subsemiring of order ((c-b)^2 + (b-a)^2 + c-a)/2", 3, 8, d::triangle_params, d::it_minus_ri},
        {"it-ideals", K::Statement, "Id(STR{a,c}) and IT minus RI are ideals of IT, Id(STR{a,c}) are left zeroes", 3, 8, d::triangle_params, d::it_ideals},
        {"it-disjoint-union", K::Statement, "IT is the disjoint union of the subsemirings RI and IT minus RI", 3, 8, d::triangle_params, d::it_disjoint_union},
        {"lr-triangles", K::Statement, "the L and R triangles are subsemirings covering IT minus RI with L below R", 3, 8, d::triangle_params, d::lr_triangles},
        {"nil-region-semirings", K::Statement, "the a-, b- and c-nilpotent regions are subsemirings of the stated orders", 3, 8, d::triangle_params, d::nil_regions},
        {"nil-region-trivial", K::Erratum, "the three nilpotent regions are trivial (corrected: NilB always, NilA iff c = n-1, NilC iff a = 0)", 3, 8, d::triangle_params, d::nil_trivial},
        {"parallelograms", K::Statement, "L_par and R_par are subsemirings of orders (b-a)(n-c) and (a+1)(c-b)", 3, 8, d::triangle_params, d::parallelograms},
        {"type-triples", K::Statement, "every element has exactly one of the ten types, matching its region", 3, 8, d::triangle_params, d::type_triples},
        {"eight-region-partition", K::Statement, "a triangle is the disjoint union of eight subsemirings of the stated orders", 3, 8, d::triangle_params, d::eight_regions},
        {"fix-b-union", K::Erratum, "elements fixing b are NilA U L_par U R_par U RI (corrected: NilB in place of NilA)", 3, 8, d::triangle_params, d::fix_b_union},
        {"boundary-idempotents-closed", K::Erratum, "boundary idempotents are closed under * (corrected: their products stay on the boundary)", 3, 7, d::triangle_params, d::boundary_idempotents},
        {"idempotent-sum", K::Statement, "a_(a+1) c_(n-a-1) + b_(b+1) c_(n-b-1) = b_(a+1) c_(n-a-1), whose square is c-bar", 3, 8, d::triangle_params, d::idempotent_sum},
        {"example-n4-123", K::Statement, "triangle {1,2,3} over C_4: order, interior, and its sums", 4, 4, d::example_n4_params, d::example_n4},
        {"example-n6-134", K::Statement, "triangle {1,3,4} over C_6: region sizes 5 4 7 4 2 1 3 2", 6, 6, d::example_n6_params, d::example_n6},
    };
    return registry;
  }

  inline Claim const& find_claim(std::string_view id) {
    for (auto const& c : claim_registry()) {
      if (c.id == id) {
        return c;
      }
    }
    throw Error(ErrorKind::UnknownClaim, "no claim named " + std::string(id));
  }

  inline std::vector<ClaimParams> claim_params(Claim const& c, std::size_t n_max) {
    std::size_t const hi = std::min(n_max, c.n_cap);
    if (hi < c.n_min) {
      return {};
    }
    return c.params(c.n_min, hi);
  }

  inline ClaimResult run_claim(Claim const& c, ClaimParams const& p) {
    auto const         start = std::chrono::steady_clock::now();
    ClaimOutcome const o     = c.check(p);
    auto const         stop  = std::chrono::steady_clock::now();
    return ClaimResult{std::string(c.id), c.kind, p,          o.holds,
                       o.witness,         o.corrected, o.note, stop - start};
  }

  //! Runs the named claims (registry order if `ids` is empty) for every
  //! admissible parameter tuple with n <= n_max.
  inline std::vector<ClaimResult> run_claims(std::vector<std::string> const& ids,
                                             std::size_t                     n_max,
                                             std::size_t                     jobs = 1) {
    std::vector<Claim const*> chosen;
    if (ids.empty()) {
      for (auto const& c : claim_registry()) {
        chosen.push_back(&c);
      }
    } else {
      for (auto const& id : ids) {
        chosen.push_back(&find_claim(id));
      }
    }
    std::vector<std::pair<Claim const*, ClaimParams>> work;
    for (Claim const* c : chosen) {
      for (auto& p : claim_params(*c, n_max)) {
        work.emplace_back(c, std::move(p));
      }
    }
    return parallel_map<ClaimResult>(work.size(), jobs, [&](std::size_t i) {
      return run_claim(*work[i].first, work[i].second);
    });
  }

}  // namespace endochain

#endif  // ENDOCHAIN_CLAIMS_HPP_
