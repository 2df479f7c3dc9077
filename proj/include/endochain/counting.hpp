#ifndef ENDOCHAIN_COUNTING_HPP_
#define ENDOCHAIN_COUNTING_HPP_

// Closed-form counts and the enumerations they are audited against.  All
// arithmetic is exact: results are uint64 and overflow raises DomainError.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chain_endo.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "simplex.hpp"
#include "strings.hpp"
#include "triangle.hpp"

namespace endochain {

  using Count = std::uint64_t;

  namespace detail {

    __extension__ typedef unsigned __int128 Wide;

    inline Count checked_narrow(Wide v) {
      if (v > static_cast<Wide>(UINT64_MAX)) {
        throw Error(ErrorKind::DomainError, "count overflows 64 bits");
      }
      return static_cast<Count>(v);
    }

  }  // namespace detail

  inline Count binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    detail::Wide r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      r = r * (n - i) / (i + 1);
      detail::checked_narrow(r);
    }
    return detail::checked_narrow(r);
  }

  //! C_k via C_{k+1} = C_k * 2(2k + 1) / (k + 2).
  inline Count catalan(std::uint64_t k) {
    detail::Wide c = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
      c = c * (2 * (2 * i + 1)) / (i + 2);
      detail::checked_narrow(c);
    }
    return detail::checked_narrow(c);
  }

  enum class FormulaId {
    CatalanNilpotent,
    IdempotentFixedPoints,
    SimplexOrder,
    StringNilA,
    StringIdem,
    StringNilB,
    RiOrder,
    RiOrderAsStated,
    ItOrder,
    ItMinusRi,
    NilATri,
    NilBTri,
    NilCTri,
    LPar,
    RPar,
    LTri,
    RTri,
    RegionSum
  };

  struct FormulaInfo {
    FormulaId        id;
    std::string_view name;
    std::string_view arity;
    std::string_view closed_form;
    bool             expect_agreement;  // false for the stated RI order
  };

  inline constexpr std::array<FormulaInfo, 18> kFormulas{{
      {FormulaId::CatalanNilpotent, "catalan_nilpotent", "n k", "C_k * C_(n-k-1)", true},
      {FormulaId::IdempotentFixedPoints, "idempotent_fixed_points", "n k_1..k_s",
       "prod (k_(m+1) - k_m)", true},
      {FormulaId::SimplexOrder, "simplex_order", "n k", "binom(n+k-1, k-1)", true},
      {FormulaId::StringNilA, "string_nil_a", "n a b", "n-b", true},
      {FormulaId::StringIdem, "string_idem", "n a b", "b-a", true},
      {FormulaId::StringNilB, "string_nil_b", "n a b", "a+1", true},
      {FormulaId::RiOrder, "ri_order", "n a b c", "(b-a)(c-b)", true},
      {FormulaId::RiOrderAsStated, "ri_order_as_stated", "n a b c", "(b-a)(c-a)", false},
      {FormulaId::ItOrder, "it_order", "n a b c", "(c-a)(c-a+1)/2", true},
      {FormulaId::ItMinusRi, "it_minus_ri", "n a b c", "((c-b)^2+(b-a)^2+c-a)/2", true},
      {FormulaId::NilATri, "nil_a_tri", "n a b c", "(n-c)(n+c-2b+1)/2", true},
      {FormulaId::NilBTri, "nil_b_tri", "n a b c", "(a+1)(n-c)", true},
      {FormulaId::NilCTri, "nil_c_tri", "n a b c", "(a+1)(2b-a+2)/2", true},
      {FormulaId::LPar, "l_par", "n a b c", "(b-a)(n-c)", true},
      {FormulaId::RPar, "r_par", "n a b c", "(a+1)(c-b)", true},
      {FormulaId::LTri, "l_tri", "n a b c", "(c-b)(c-b+1)/2", true},
      {FormulaId::RTri, "r_tri", "n a b c", "(b-a)(b-a+1)/2", true},
      {FormulaId::RegionSum, "region_sum", "n a b c", "sum of the eight regions", true},
  }};

  inline FormulaInfo const& info(FormulaId id) {
    return kFormulas[static_cast<std::size_t>(id)];
  }

  inline std::string_view to_string(FormulaId id) {
    return info(id).name;
  }

  inline FormulaId parse_formula(std::string_view name) {
    for (auto const& f : kFormulas) {
      if (f.name == name) {
        return f.id;
      }
    }
    throw Error(ErrorKind::DomainError, "unknown formula " + std::string(name));
  }

  namespace detail {

    [[noreturn]] inline void bad_params(FormulaId id, std::string const& why) {
      throw Error(ErrorKind::DomainError,
                  std::string(to_string(id)) + "(" + std::string(info(id).arity) + "): " + why);
    }

    inline void need_arity(FormulaId id, std::span<std::size_t const> p, std::size_t k) {
      if (p.size() != k) {
        bad_params(id, "expects " + std::to_string(k) + " parameters, got "
                           + std::to_string(p.size()));
      }
    }

    inline void need_chain(FormulaId id, std::span<std::size_t const> p, std::size_t min_n) {
      if (p[0] < min_n || p[0] > kMaxChainSize) {
        bad_params(id, "n out of range");
      }
      for (std::size_t i = 2; i < p.size(); ++i) {
        if (p[i - 1] >= p[i]) {
          bad_params(id, "points must be strictly increasing");
        }
      }
      if (p.size() > 1 && p.back() >= p[0]) {
        bad_params(id, "points must lie below n");
      }
    }

    inline bool is_string_formula(FormulaId id) {
      return id >= FormulaId::StringNilA && id <= FormulaId::StringNilB;
    }

  }  // namespace detail

  //! Closed-form value.  Parameters follow the arity string of each formula;
  //! triangle formulas all take (n, a, b, c).
  inline Count evaluate(FormulaId id, std::span<std::size_t const> p) {
    using detail::need_arity;
    using detail::need_chain;
    if (p.empty()) {
      detail::bad_params(id, "missing n");
    }
    if (id == FormulaId::CatalanNilpotent || id == FormulaId::SimplexOrder) {
      need_arity(id, p, 2);
      std::size_t const n = p[0], k = p[1];
      if (n == 0 || n > kMaxChainSize) {
        detail::bad_params(id, "n out of range");
      }
      if (id == FormulaId::CatalanNilpotent) {
        if (k >= n) {
          detail::bad_params(id, "needs k < n");
        }
        detail::Wide const v = static_cast<detail::Wide>(catalan(k)) * catalan(n - k - 1);
        return detail::checked_narrow(v);
      }
      if (k == 0 || k > n) {
        detail::bad_params(id, "needs 1 <= k <= n");
      }
      return binomial(n + k - 1, k - 1);
    }
    if (id == FormulaId::IdempotentFixedPoints) {
      if (p.size() < 2) {
        detail::bad_params(id, "needs at least one fixed point");
      }
      need_chain(id, p, 1);
      detail::Wide v = 1;
      for (std::size_t i = 2; i < p.size(); ++i) {
        v *= p[i] - p[i - 1];
        detail::checked_narrow(v);
      }
      return detail::checked_narrow(v);
    }
    if (detail::is_string_formula(id)) {
      need_arity(id, p, 3);
      need_chain(id, p, 2);
      std::size_t const n = p[0], a = p[1], b = p[2];
      switch (id) {
        case FormulaId::StringNilA: return n - b;
        case FormulaId::StringIdem: return b - a;
        default: return a + 1;
      }
    }
    need_arity(id, p, 4);
    need_chain(id, p, 3);
    Count const n = p[0], a = p[1], b = p[2], c = p[3];
    Count const ltri = (c - b) * (c - b + 1) / 2, rtri = (b - a) * (b - a + 1) / 2;
    Count const nila = (n - c) * (n + c - 2 * b + 1) / 2, nilb = (a + 1) * (n - c),
                nilc = (a + 1) * (2 * b - a + 2) / 2, lpar = (b - a) * (n - c),
                rpar = (a + 1) * (c - b), ri = (b - a) * (c - b);
    switch (id) {
      case FormulaId::RiOrder: return ri;
      case FormulaId::RiOrderAsStated: return (b - a) * (c - a);
      case FormulaId::ItOrder: return (c - a) * (c - a + 1) / 2;
      case FormulaId::ItMinusRi: return ((c - b) * (c - b) + (b - a) * (b - a) + c - a) / 2;
      case FormulaId::NilATri: return nila;
      case FormulaId::NilBTri: return nilb;
      case FormulaId::NilCTri: return nilc;
      case FormulaId::LPar: return lpar;
      case FormulaId::RPar: return rpar;
      case FormulaId::LTri: return ltri;
      case FormulaId::RTri: return rtri;
      default: return nila + nilb + nilc + lpar + rpar + ltri + rtri + ri;
    }
  }

  inline Count evaluate(FormulaId id, std::initializer_list<std::size_t> p) {
    return evaluate(id, std::span<std::size_t const>(p.begin(), p.size()));
  }

  //! Cardinality of the set the formula counts, by enumeration.
  inline Count enumerate_count(FormulaId id, std::span<std::size_t const> p) {
    evaluate(id, p);  // validates the parameters
    std::size_t const n = p[0];
    switch (id) {
      case FormulaId::CatalanNilpotent: {
        Count k = 0;
        for (auto const& x : all_endomorphisms(n)) {
          k += is_nilpotent_to(x, static_cast<Point>(p[1])) ? 1 : 0;
        }
        return k;
      }
      case FormulaId::IdempotentFixedPoints: {
        std::vector<Point> want(p.begin() + 1, p.end());
        Count              k = 0;
        for (auto const& x : all_endomorphisms(n)) {
          k += (is_idempotent(x) && fixed_points(x) == want) ? 1 : 0;
        }
        return k;
      }
      case FormulaId::SimplexOrder: {
        std::vector<Point> verts;
        for (std::size_t i = 0; i < p[1]; ++i) {
          verts.push_back(static_cast<Point>(i));
        }
        return enumerate_simplex(make_simplex(n, verts)).size();
      }
      default: break;
    }
    if (detail::is_string_formula(id)) {
      StringSpec const s    = make_string(n, p[1], p[2]);
      Point const      pick = id == FormulaId::StringNilB ? s.b : s.a;
      Count            k    = 0;
      for (auto const& x : enumerate_string(s)) {
        bool const hit = id == FormulaId::StringIdem ? is_idempotent(x) && !is_constant(x)
                                                      : is_nilpotent_to(x, pick);
        k += hit ? 1 : 0;
      }
      return k;
    }
    TriangleSpec const t = make_triangle(n, p[1], p[2], p[3]);
    auto count_region = [&](Region r) -> Count {
      Count k = 0;
      for (auto const& x : enumerate_triangle(t)) {
        k += in_region_intrinsic(t, r, x) ? 1 : 0;
      }
      return k;
    };
    auto count_if = [&](auto&& pred) -> Count {
      Count k = 0;
      for (auto const& x : enumerate_triangle(t)) {
        k += pred(x) ? 1 : 0;
      }
      return k;
    };
    switch (id) {
      case FormulaId::RiOrder:
      case FormulaId::RiOrderAsStated:
        return identities(triangle_set(t)).right.size();
      case FormulaId::ItOrder:
        return count_if([&](ChainEndo const& x) { return fixes(x, t.a) && fixes(x, t.c); });
      case FormulaId::ItMinusRi:
        return count_if([&](ChainEndo const& x) {
          return fixes(x, t.a) && fixes(x, t.c) && !fixes(x, t.b);
        });
      case FormulaId::NilATri: return count_region(Region::NilA);
      case FormulaId::NilBTri: return count_region(Region::NilB);
      case FormulaId::NilCTri: return count_region(Region::NilC);
      case FormulaId::LPar: return count_region(Region::LPar);
      case FormulaId::RPar: return count_region(Region::RPar);
      case FormulaId::LTri: return count_region(Region::LTri);
      case FormulaId::RTri: return count_region(Region::RTri);
      default: return enumerate_triangle(t).size();
    }
  }

  inline Count enumerate_count(FormulaId id, std::initializer_list<std::size_t> p) {
    return enumerate_count(id, std::span<std::size_t const>(p.begin(), p.size()));
  }

  //! Every admissible parameter tuple with n <= n_max.
  inline std::vector<std::vector<std::size_t>> admissible(FormulaId id, std::size_t n_max) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
      switch (id) {
        case FormulaId::CatalanNilpotent:
          for (std::size_t k = 0; k < n; ++k) {
            out.push_back({n, k});
          }
          break;
        case FormulaId::SimplexOrder:
          for (std::size_t k = 1; k <= n; ++k) {
            out.push_back({n, k});
          }
          break;
        case FormulaId::IdempotentFixedPoints:
          for (std::size_t k = 1; k <= n; ++k) {
            for (auto const& v : vertex_sets(n, k)) {
              std::vector<std::size_t> t{n};
              t.insert(t.end(), v.begin(), v.end());
              out.push_back(std::move(t));
            }
          }
          break;
        default:
          if (detail::is_string_formula(id)) {
            if (n >= 2) {
              for (auto const& v : vertex_sets(n, 2)) {
                out.push_back({n, v[0], v[1]});
              }
            }
          } else if (n >= 3) {
            for (auto const& t : all_triangles(n)) {
              out.push_back({n, t.a, t.b, t.c});
            }
          }
      }
    }
    return out;
  }

  struct CountRow {
    FormulaId                id;
    std::vector<std::size_t> params;
    Count                    closed;
    Count                    enumerated;

    [[nodiscard]] bool agrees() const noexcept {
      return closed == enumerated;
    }

    //! Agreement where expected, disagreement for the stated RI order.
    [[nodiscard]] bool as_expected() const noexcept {
      return agrees() == info(id).expect_agreement;
    }
  };

  struct FormulaAudit {
    FormulaId               id;
    std::size_t             tuples = 0;
    std::size_t             agreements = 0;
    std::optional<CountRow> first_unexpected;

    [[nodiscard]] bool passed() const noexcept {
      return !first_unexpected.has_value();
    }
  };

  struct AuditReport {
    std::size_t               n_max;
    std::vector<CountRow>     rows;
    std::vector<FormulaAudit> formulas;

    [[nodiscard]] bool passed() const noexcept {
      return std::all_of(formulas.begin(), formulas.end(),
                         [](FormulaAudit const& f) { return f.passed(); });
    }
  };

  inline constexpr std::size_t kMaxAuditN = 10;

  inline AuditReport audit(std::size_t n_max, std::size_t jobs = 1) {
    if (n_max > kMaxAuditN) {
      throw Error(ErrorKind::DomainError,
                  "audit is bounded by n <= " + std::to_string(kMaxAuditN));
    }
    std::vector<std::pair<FormulaId, std::vector<std::size_t>>> work;
    for (auto const& f : kFormulas) {
      for (auto& p : admissible(f.id, n_max)) {
        work.emplace_back(f.id, std::move(p));
      }
    }
    AuditReport report{n_max, {}, {}};
    report.rows = parallel_map<CountRow>(work.size(), jobs, [&](std::size_t i) {
      auto const& [id, p] = work[i];
      return CountRow{id, p, evaluate(id, p), enumerate_count(id, p)};
    });
    for (auto const& f : kFormulas) {
      report.formulas.push_back(FormulaAudit{f.id, 0, 0, std::nullopt});
    }
    for (auto const& row : report.rows) {
      FormulaAudit& fa = report.formulas[static_cast<std::size_t>(row.id)];
      ++fa.tuples;
      fa.agreements += row.agrees() ? 1 : 0;
      if (!row.as_expected() && !fa.first_unexpected) {
        fa.first_unexpected = row;
      }
    }
    return report;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_COUNTING_HPP_
