#ifndef ENDOCHAIN_SIMPLEX_HPP_
#define ENDOCHAIN_SIMPLEX_HPP_

// k-simplices of the endomorphism semiring of C_n: all endomorphisms whose
// image lies in a fixed k-element set A = {a_0 < ... < a_{k-1}}.  Vertices
// are the constant maps; a string is a 1-simplex (|A| = 2) and a triangle a
// 2-simplex (|A| = 3).
//
// Element sets are recomputed on demand and always returned in lexicographic
// order of value tuples.

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

namespace endochain {

  struct SimplexSpec {
    std::size_t        n;
    std::vector<Point> vertices;

    [[nodiscard]] std::size_t dimension() const noexcept {
      return vertices.size();
    }

    friend bool operator==(SimplexSpec const&, SimplexSpec const&) = default;
    friend auto operator<=>(SimplexSpec const&, SimplexSpec const&) = default;
  };

  inline SimplexSpec make_simplex(std::size_t n, std::vector<Point> vertices) {
    if (n == 0 || n > kMaxChainSize) {
      throw Error(ErrorKind::RangeError, "bad chain size " + std::to_string(n));
    }
    if (vertices.empty() || vertices.size() > n) {
      throw Error(ErrorKind::RangeError,
                  "simplex needs between 1 and n vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] >= n) {
        throw Error(ErrorKind::RangeError,
                    "vertex " + std::to_string(vertices[i]) + " not in C_"
                        + std::to_string(n));
      }
      if (i > 0 && vertices[i - 1] >= vertices[i]) {
        throw Error(ErrorKind::RangeError,
                    "vertices must be strictly increasing");
      }
    }
    return SimplexSpec{n, std::move(vertices)};
  }

  inline std::string to_string(SimplexSpec const& spec) {
    std::string out = "n=" + std::to_string(spec.n) + " A=";
    for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
      out += (i > 0 ? "," : "") + std::to_string(spec.vertices[i]);
    }
    return out;
  }

  //! Parses "n=6 A=1,3,4".
  inline SimplexSpec parse_simplex(std::string_view text) {
    std::istringstream          in{std::string(text)};
    std::string                 token;
    std::optional<std::size_t>  n;
    std::optional<std::vector<Point>> verts;
    while (in >> token) {
      if (token.starts_with("n=")) {
        n = detail::parse_uint(std::string_view(token).substr(2), "chain size");
      } else if (token.starts_with("A=")) {
        std::vector<Point> v;
        std::string_view   rest = std::string_view(token).substr(2);
        while (true) {
          std::size_t const comma = rest.find(',');
          std::size_t const x
              = detail::parse_uint(rest.substr(0, comma), "vertex");
          if (x >= kMaxChainSize) {
            throw Error(ErrorKind::RangeError, "vertex too large");
          }
          v.push_back(static_cast<Point>(x));
          if (comma == std::string_view::npos) {
            break;
          }
          rest = rest.substr(comma + 1);
        }
        verts = std::move(v);
      } else {
        throw Error(ErrorKind::ParseError,
                    "unexpected token \"" + token + "\" in simplex literal");
      }
    }
    if (!n || !verts) {
      throw Error(ErrorKind::ParseError,
                  "simplex literal needs n=<size> and A=<v,...>");
    }
    return make_simplex(*n, std::move(*verts));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename F>
    void for_each_monotone(std::size_t               n,
                           std::vector<Point> const& alphabet,
                           F&&                       f) {
      std::vector<std::size_t> idx(n, 0);
      std::vector<Point>       v(n, alphabet[0]);
      while (true) {
        f(ChainEndo::from_trusted(v));
        // Next weakly increasing index sequence in lexicographic order.
        std::size_t i = n;
        while (i > 0 && idx[i - 1] + 1 == alphabet.size()) {
          --i;
        }
        if (i == 0) {
          return;
        }
        std::size_t const next = idx[i - 1] + 1;
        for (std::size_t j = i - 1; j < n; ++j) {
          idx[j] = next;
          v[j]   = alphabet[next];
        }
      }
    }
  }  // namespace detail

  inline std::vector<ChainEndo> enumerate_simplex(SimplexSpec const& spec) {
    std::vector<ChainEndo> out;
    detail::for_each_monotone(
        spec.n, spec.vertices, [&out](ChainEndo x) { out.push_back(std::move(x)); });
    return out;
  }

  inline Subset simplex_set(SimplexSpec const& spec) {
    return Subset(spec.n, enumerate_simplex(spec));
  }

  //! The whole semiring of C_n, i.e. the n-simplex on every point.
  inline SimplexSpec full_simplex(std::size_t n) {
    std::vector<Point> all(n);
    for (std::size_t i = 0; i < n; ++i) {
      all[i] = static_cast<Point>(i);
    }
    return make_simplex(n, std::move(all));
  }

  inline std::vector<ChainEndo> all_endomorphisms(std::size_t n) {
    return enumerate_simplex(full_simplex(n));
  }

  inline bool in_simplex(SimplexSpec const& spec, ChainEndo const& x) {
    if (x.size() != spec.n) {
      return false;
    }
    for (Point p : x.values()) {
      if (!std::binary_search(spec.vertices.begin(), spec.vertices.end(), p)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Faces, boundary, interior
  ////////////////////////////////////////////////////////////////////////

  //! The (k-1)-face obtained by dropping vertex m.
  inline SimplexSpec facet(SimplexSpec const& spec, std::size_t m) {
    if (m >= spec.dimension() || spec.dimension() == 1) {
      throw Error(ErrorKind::RangeError, "no such facet");
    }
    std::vector<Point> v = spec.vertices;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(m));
    return SimplexSpec{spec.n, std::move(v)};
  }

  //! Elements whose image is exactly A.
  inline std::vector<ChainEndo> interior(SimplexSpec const& spec) {
    std::vector<ChainEndo> out;
    for (ChainEndo& x : enumerate_simplex(spec)) {
      if (image(x) == spec.vertices) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  //! Union of the proper faces.
  inline std::vector<ChainEndo> boundary(SimplexSpec const& spec) {
    std::vector<ChainEndo> out;
    for (ChainEndo& x : enumerate_simplex(spec)) {
      if (image(x) != spec.vertices) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  //! A simplex avoiding both 0 and n - 1.
  inline bool is_internal(SimplexSpec const& spec) {
    return spec.vertices.front() != 0
           && spec.vertices.back() + 1 != static_cast<int>(spec.n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Layers and discrete neighbourhoods
  ////////////////////////////////////////////////////////////////////////

  struct LayerId {
    SimplexSpec spec;
    std::size_t m;  // vertex index
    std::size_t s;  // multiplicity of a_m
  };

  inline void check_vertex_index(SimplexSpec const& spec, std::size_t m) {
    if (m >= spec.dimension()) {
      throw Error(ErrorKind::RangeError,
                  "vertex index " + std::to_string(m) + " out of range");
    }
  }

  //! Elements in which a_m occurs exactly s times.  The 0-layer is the face
  //! opposite a_m.
  inline std::vector<ChainEndo> layer(LayerId const& id) {
    check_vertex_index(id.spec, id.m);
    if (id.s > id.spec.n) {
      throw Error(ErrorKind::RangeError, "layer index exceeds n");
    }
    Point const            v = id.spec.vertices[id.m];
    std::vector<ChainEndo> out;
    for (ChainEndo& x : enumerate_simplex(id.spec)) {
      if (multiplicity(x, v) == id.s) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  //! DN^t_m: the vertex a_m together with the layers n - t, ..., n - 1 with
  //! respect to it.  Radius 0 is admitted and gives the vertex alone.
  inline std::vector<ChainEndo> discrete_neighborhood(SimplexSpec const& spec,
                                                      std::size_t        m,
                                                      std::size_t        t) {
    check_vertex_index(spec, m);
    if (t > spec.n) {
      throw Error(ErrorKind::RangeError, "radius exceeds n");
    }
    Point const            v = spec.vertices[m];
    std::vector<ChainEndo> out;
    for (ChainEndo& x : enumerate_simplex(spec)) {
      if (multiplicity(x, v) + t >= spec.n) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  struct RadiusReport {
    //! Least t in 1..n with DN^t a subsemiring.
    std::size_t least_semiring_radius;
    //! Largest t such that every DN^1..DN^t is a subsemiring; n when no
    //! radius fails.
    std::size_t closed_through;
    //! Every radius in 1..n whose neighbourhood is not closed.
    std::vector<std::size_t> failing_radii;
  };

  inline RadiusReport min_semiring_radius(SimplexSpec const& spec,
                                          std::size_t        m) {
    check_vertex_index(spec, m);
    RadiusReport report{spec.n, spec.n, {}};
    std::optional<std::size_t> least;
    for (std::size_t t = 1; t <= spec.n; ++t) {
      bool const closed = static_cast<bool>(
          is_subsemiring(Subset(spec.n, discrete_neighborhood(spec, m, t))));
      if (closed && !least) {
        least = t;
      }
      if (!closed) {
        if (report.failing_radii.empty()) {
          report.closed_through = t - 1;
        }
        report.failing_radii.push_back(t);
      }
    }
    report.least_semiring_radius = least.value_or(spec.n);
    return report;
  }

  //! The sufficient condition for a_0-nilpotency inside DN^{n-a_0-1}_0:
  //! x(0) = ... = x(a_1) = a_0 and x(i) < i for a_1 < i <= n - 1.  For a
  //! 0-simplex the bound a_1 is taken to be n - 1.
  inline bool nilpotent_in_neighborhood(SimplexSpec const& spec,
                                        ChainEndo const&   x) {
    Point const a0 = spec.vertices[0];
    if (!in_simplex(spec, x) || x[a0] != a0) {
      throw Error(ErrorKind::DomainError,
                  format_compact(x)
                      + " is not in the fixed-point neighbourhood of the least "
                        "vertex");
    }
    std::size_t const a1 = spec.dimension() >= 2
                               ? spec.vertices[1]
                               : spec.n - 1;
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (i <= a1 ? x[i] != a0 : x[i] >= i) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parameter iteration
  ////////////////////////////////////////////////////////////////////////

  //! Every k-element subset of C_n, in lexicographic order.
  inline std::vector<std::vector<Point>> vertex_sets(std::size_t n,
                                                     std::size_t k) {
    std::vector<std::vector<Point>> out;
    if (k == 0 || k > n) {
      return out;
    }
    std::vector<Point> cur(k);
    for (std::size_t i = 0; i < k; ++i) {
      cur[i] = static_cast<Point>(i);
    }
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i > 0 && cur[i - 1] == n - k + (i - 1)) {
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++cur[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        cur[j] = static_cast<Point>(cur[j - 1] + 1);
      }
    }
  }

  //! Every simplex of every dimension over C_n.
  inline std::vector<SimplexSpec> all_simplices(std::size_t n) {
    std::vector<SimplexSpec> out;
    for (std::size_t k = 1; k <= n; ++k) {
      for (auto& v : vertex_sets(n, k)) {
        out.push_back(SimplexSpec{n, std::move(v)});
      }
    }
    return out;
  }

}  // namespace endochain

#endif  // ENDOCHAIN_SIMPLEX_HPP_
