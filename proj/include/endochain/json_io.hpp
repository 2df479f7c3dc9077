#ifndef ENDOCHAIN_JSON_IO_HPP_
#define ENDOCHAIN_JSON_IO_HPP_

// JSON shapes used by the command-line tool.  Keys keep insertion order so
// that documents are stable byte for byte.

#include <string>
#include <vector>

#include <json.hpp>

#include "analysis.hpp"
#include "chain_endo.hpp"
#include "claims.hpp"
#include "counting.hpp"
#include "error.hpp"
#include "simplex.hpp"
#include "triangle.hpp"

namespace endochain {

  using Json = nlohmann::ordered_json;

  inline Json to_json(ChainEndo const& x) {
    Json a = Json::array();
    for (Point v : x.values()) {
      a.push_back(static_cast<int>(v));
    }
    return a;
  }

  inline Json to_json(std::vector<ChainEndo> const& xs) {
    Json a = Json::array();
    for (auto const& x : xs) {
      a.push_back(to_json(x));
    }
    return a;
  }

  inline Json to_json(Witness const& w) {
    return Json{{"op", to_string(w.op)},
                {"lhs", to_json(w.lhs)},
                {"rhs", to_json(w.rhs)},
                {"result", to_json(w.result)}};
  }

  inline Json to_json(Verdict const& v) {
    return Json{{"holds", v.holds}, {"witness", v.witness ? to_json(*v.witness) : Json()}};
  }

  //! {"n":..., "A":[...], "elements":[[...],...]}
  inline Json element_set_json(SimplexSpec const& s, std::vector<ChainEndo> const& elements) {
    Json a = Json::array();
    for (Point v : s.vertices) {
      a.push_back(static_cast<int>(v));
    }
    return Json{{"n", s.n}, {"A", std::move(a)}, {"elements", to_json(elements)}};
  }

  struct ElementSet {
    SimplexSpec            spec;
    std::vector<ChainEndo> elements;
  };

  inline ElementSet parse_element_set(std::string const& text) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    try {
      auto const         n = j.at("n").get<std::size_t>();
      std::vector<Point> verts;
      for (auto const& v : j.at("A")) {
        verts.push_back(static_cast<Point>(v.get<std::size_t>()));
      }
      ElementSet out{make_simplex(n, std::move(verts)), {}};
      for (auto const& e : j.at("elements")) {
        out.elements.push_back(make_endo(n, e.get<std::vector<int>>()));
      }
      return out;
    } catch (nlohmann::json::exception const& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }

  inline Json to_json(RegionReport const& r) {
    Json regions = Json::object();
    for (auto const& e : r.regions) {
      regions[to_string(e.region)] = Json{{"count", e.elements.size()},
                                          {"closed", e.closed.holds},
                                          {"formula", e.formula},
                                          {"elements", to_json(e.elements.elements())}};
    }
    return Json{{"regions", std::move(regions)}, {"disjoint", r.disjoint}, {"cover", r.cover}};
  }

  //! `elapsed` is left out when `timing` is false so that output is stable.
  inline Json to_json(ClaimResult const& r, bool timing = true) {
    Json j{{"claim", r.claim},
           {"kind", to_string(r.kind)},
           {"params", r.params.values},
           {"label", r.params.label},
           {"holds", r.holds},
           {"witness", r.witness ? Json(*r.witness) : Json()}};
    if (r.corrected) {
      j["corrected"] = *r.corrected;
    }
    if (!r.note.empty()) {
      j["note"] = r.note;
    }
    j["passed"] = r.passed();
    if (timing) {
      j["elapsed_us"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed).count();
    }
    return j;
  }

  inline Json to_json(CountRow const& r) {
    return Json{{"formula", to_string(r.id)},
                {"params", r.params},
                {"closed_form", r.closed},
                {"enumerated", r.enumerated},
                {"agrees", r.agrees()},
                {"expected", r.as_expected()}};
  }

  inline Json to_json(AuditReport const& a) {
    Json rows = Json::array(), formulas = Json::array();
    for (auto const& r : a.rows) {
      rows.push_back(to_json(r));
    }
    for (auto const& f : a.formulas) {
      formulas.push_back(Json{{"formula", to_string(f.id)},
                              {"closed_form", info(f.id).closed_form},
                              {"tuples", f.tuples},
                              {"agreements", f.agreements},
                              {"passed", f.passed()}});
    }
    return Json{{"n_max", a.n_max}, {"rows", std::move(rows)}, {"formulas", std::move(formulas)},
                {"passed", a.passed()}};
  }

  inline Json to_json(Classification const& c) {
    return Json{{"class", to_string(c.kind)},
                {"exponent", c.exponent},
                {"idempotent", to_json(c.idempotent)},
                {"vertex", c.vertex ? Json(static_cast<int>(*c.vertex)) : Json()}};
  }

  inline Json to_json(IsoResult const& r) {
    Json m = Json::array();
    for (auto const& [x, y] : r.mapping) {
      m.push_back(Json::array({to_json(x), to_json(y)}));
    }
    return Json{{"isomorphic", r.isomorphic}, {"mapping", std::move(m)}};
  }

  inline std::string dump(Json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace endochain

#endif  // ENDOCHAIN_JSON_IO_HPP_
