#ifndef ENDOCHAIN_CLI_HPP_
#define ENDOCHAIN_CLI_HPP_

// The `endochain` command.  `run` takes the arguments after the program
// name and writes results to `out`, diagnostics to `err`.
//
// Exit codes: 0 everything requested holds, 1 a check was violated,
// 2 usage or parse error.

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "analysis.hpp"
#include "chain_endo.hpp"
#include "claims.hpp"
#include "counting.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "simplex.hpp"
#include "strings.hpp"
#include "triangle.hpp"

namespace endochain::cli {

  inline constexpr int kExitOk        = 0;
  inline constexpr int kExitViolation = 1;
  inline constexpr int kExitUsage     = 2;

  //! Any of the three literal forms; strings and triangles are also simplices.
  struct SpecLiteral {
    SimplexSpec                 simplex;
    std::optional<StringSpec>   str;
    std::optional<TriangleSpec> tri;

    [[nodiscard]] std::string label() const {
      if (tri) {
        return to_string(*tri);
      }
      if (str) {
        return to_string(*str);
      }
      return to_string(simplex);
    }
  };

  inline SpecLiteral parse_spec_literal(std::string_view text) {
    std::string_view t = text.substr(std::min(text.find_first_not_of(' '), text.size()));
    SpecLiteral      out;
    if (t.starts_with("str ")) {
      out.str     = parse_string_spec(t);
      out.simplex = as_simplex(*out.str);
    } else if (t.starts_with("tri ")) {
      out.tri     = parse_triangle(t);
      out.simplex = as_simplex(*out.tri);
    } else {
      out.simplex = parse_simplex(t);
      auto const& v = out.simplex.vertices;
      if (v.size() == 2) {
        out.str = make_string(out.simplex.n, v[0], v[1]);
      } else if (v.size() == 3) {
        out.tri = make_triangle(out.simplex.n, v[0], v[1], v[2]);
      }
    }
    return out;
  }

  namespace detail {

    inline std::string pad(std::string s, std::size_t w) {
      if (s.size() < w) {
        s.append(w - s.size(), ' ');
      }
      return s;
    }

    inline std::string rpad(std::string const& s, std::size_t w) {
      return s.size() < w ? std::string(w - s.size(), ' ') + s : s;
    }

    inline std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    inline std::vector<ChainEndo> sorted_elements(SpecLiteral const& s) {
      return Subset(s.simplex.n, enumerate_simplex(s.simplex)).elements();
    }

    inline int elements(SpecLiteral const& s, bool json, std::ostream& out) {
      auto const el = sorted_elements(s);
      if (json) {
        out << dump(element_set_json(s.simplex, el));
        return kExitOk;
      }
      for (auto const& x : el) {
        out << format_compact(x) << '\n';
      }
      return kExitOk;
    }

    inline int table(SpecLiteral const& s, Operation op, bool json, std::ostream& out) {
      Subset const      set(s.simplex.n, enumerate_simplex(s.simplex));
      auto const&       el = set.elements();
      std::size_t const k  = el.size();
      std::vector<std::vector<std::optional<std::size_t>>> cells(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          ChainEndo const r = op == Operation::Add ? el[i] + el[j] : el[i] * el[j];
          std::size_t const at = set.index_of(r);
          cells[i].push_back(at < k ? std::optional(at) : std::nullopt);
        }
      }
      if (json) {
        Json t = Json::array();
        for (auto const& row : cells) {
          Json r = Json::array();
          for (auto const& c : row) {
            r.push_back(c ? Json(*c) : Json());
          }
          t.push_back(std::move(r));
        }
        Json j = element_set_json(s.simplex, el);
        j["op"]    = to_string(op);
        j["table"] = std::move(t);
        out << dump(j);
        return kExitOk;
      }
      std::size_t const w = std::to_string(k).size();
      out << s.label() << ' ' << to_string(op) << '\n';
      for (std::size_t i = 0; i < k; ++i) {
        out << rpad(std::to_string(i), w) << "  " << format_compact(el[i]) << '\n';
      }
      out << '\n' << std::string(w, ' ') << " |";
      for (std::size_t j = 0; j < k; ++j) {
        out << ' ' << rpad(std::to_string(j), w);
      }
      out << '\n' << std::string(w + 2 + k * (w + 1), '-') << '\n';
      for (std::size_t i = 0; i < k; ++i) {
        out << rpad(std::to_string(i), w) << " |";
        for (auto const& c : cells[i]) {
          out << ' ' << rpad(c ? std::to_string(*c) : "-", w);
        }
        out << '\n';
      }
      return kExitOk;
    }

    inline std::optional<std::string> part_label(SpecLiteral const& s, ChainEndo const& x) {
      if (s.str) {
        auto const l = static_cast<std::size_t>(
            std::count(x.values().begin(), x.values().end(), s.str->a));
        return std::string("part=") + to_string(part_of_index(*s.str, l));
      }
      if (s.tri) {
        return std::string("region=") + to_string(region_of(*s.tri, x));
      }
      return std::nullopt;
    }

    inline int classify(SpecLiteral const& s, bool json, std::ostream& out) {
      Subset const  set(s.simplex.n, enumerate_simplex(s.simplex));
      Verdict const closed = is_subsemiring(set);
      if (json) {
        Json el = Json::array();
        for (auto const& x : set) {
          Json e = to_json(classify_element(x));
          e["element"] = to_json(x);
          if (s.str) {
            auto const l = static_cast<std::size_t>(
                std::count(x.values().begin(), x.values().end(), s.str->a));
            e["part"] = to_string(part_of_index(*s.str, l));
          } else if (s.tri) {
            e["region"] = to_string(region_of(*s.tri, x));
          }
          el.push_back(std::move(e));
        }
        out << dump(Json{{"spec", s.label()}, {"subsemiring", to_json(closed)}, {"elements", std::move(el)}});
        return kExitOk;
      }
      std::size_t w = 0;
      for (auto const& x : set) {
        w = std::max(w, format_compact(x).size());
      }
      out << s.label() << '\n';
      out << "subsemiring: " << yes_no(closed.holds) << '\n';
      for (auto const& x : set) {
        Classification const c = classify_element(x);
        std::string line = pad(format_compact(x), w) + "  " + pad(to_string(c.kind), 18);
        if (c.kind != ElementClass::Idempotent) {
          line += "  t=" + std::to_string(c.exponent) + " -> " + format_compact(c.idempotent);
        }
        if (auto p = part_label(s, x)) {
          line += "  " + *p;
        }
        out << line.substr(0, line.find_last_not_of(' ') + 1) << '\n';
      }
      return kExitOk;
    }

    inline std::string join(std::vector<ChainEndo> const& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i ? ", " : "") + format_compact(xs[i]);
      }
      return s;
    }

    inline int decompose_cmd(SpecLiteral const& s, bool json, std::ostream& out) {
      if (!s.tri) {
        throw Error(ErrorKind::ParseError, "decompose needs a triangle");
      }
      RegionReport const r = decompose(*s.tri);
      if (json) {
        out << dump(to_json(r));
        return r.holds() ? kExitOk : kExitViolation;
      }
      out << s.label() << '\n';
      for (auto const& e : r.regions) {
        out << pad(to_string(e.region), 6) << "  count=" << e.elements.size()
            << " formula=" << e.formula << " closed=" << yes_no(e.closed.holds);
        if (!e.closed.holds) {
          out << " (" << to_string(*e.closed.witness) << ')';
        }
        out << '\n' << "        " << join(e.elements.elements()) << '\n';
      }
      out << "disjoint=" << yes_no(r.disjoint) << " cover=" << yes_no(r.cover)
          << " total=" << r.total << '\n';
      return r.holds() ? kExitOk : kExitViolation;
    }

    inline std::string describe(ClaimResult const& r) {
      std::string s = r.claim + "  " + r.params.label + "  ";
      switch (r.kind) {
        case ClaimKind::Statement:
          s += r.holds ? "holds" : "VIOLATED: " + r.witness.value_or("");
          break;
        case ClaimKind::Erratum:
          s += r.holds ? "stated form holds" : "stated form fails: " + r.witness.value_or("");
          s += r.corrected.value_or(false) ? "; corrected form holds" : "; corrected form VIOLATED";
          break;
        case ClaimKind::Finding:
          s += r.holds ? "observed to hold" : "observed to fail: " + r.witness.value_or("");
          break;
      }
      if (!r.note.empty()) {
        s += "  [" + r.note + "]";
      }
      return s;
    }

    struct CheckOptions {
      std::string claim = "all";
      std::size_t n_max = 6;
      std::size_t jobs  = 1;
      bool        list  = false;
      bool        json  = false;
    };

    inline int check(CheckOptions const& o, std::ostream& out, std::ostream& err) {
      if (o.list) {
        Json arr = Json::array();
        for (auto const& c : claim_registry()) {
          if (o.json) {
            arr.push_back(Json{{"id", c.id}, {"kind", to_string(c.kind)}, {"n_min", c.n_min},
                               {"n_cap", c.n_cap}, {"statement", c.statement}});
          } else {
            out << pad(std::string(c.id), 28) << ' ' << pad(to_string(c.kind), 9) << ' '
                << pad("n=" + std::to_string(c.n_min) + ".." + std::to_string(c.n_cap), 7) << ' '
                << c.statement << '\n';
          }
        }
        if (o.json) {
          out << dump(arr);
        }
        return kExitOk;
      }
      std::vector<std::string> ids;
      if (o.claim != "all") {
        ids.push_back(find_claim(o.claim).id.data());
      }
      for (auto const& c : claim_registry()) {
        if ((ids.empty() || ids.front() == c.id) && c.n_min < c.n_cap && o.n_max > c.n_cap) {
          err << "note: " << c.id << " is checked up to n=" << c.n_cap << '\n';
        }
      }
      auto const  results    = run_claims(ids, o.n_max, o.jobs);
      std::size_t violations = 0, stated_failures = 0;
      for (auto const& r : results) {
        violations += r.passed() ? 0 : 1;
        stated_failures += r.holds ? 0 : 1;
      }
      if (o.json) {
        Json arr = Json::array();
        for (auto const& r : results) {
          arr.push_back(to_json(r));
        }
        out << dump(Json{{"n_max", o.n_max},
                         {"results", std::move(arr)},
                         {"violations", violations}});
      } else {
        for (auto const& r : results) {
          out << describe(r) << '\n';
        }
        out << results.size() << " results, " << violations << " violations, "
            << stated_failures << " stated-form failures\n";
      }
      return violations == 0 ? kExitOk : kExitViolation;
    }

    inline std::string verdict_word(CountRow const& r) {
      if (r.agrees()) {
        return r.as_expected() ? "agree" : "AGREE (unexpected)";
      }
      return r.as_expected() ? "disagree (expected)" : "DISAGREE";
    }

    inline int counts(std::size_t n_max, std::size_t jobs, bool json, std::ostream& out) {
      AuditReport const a = audit(n_max, jobs);
      if (json) {
        out << dump(to_json(a));
        return a.passed() ? kExitOk : kExitViolation;
      }
      out << pad("formula", 22) << pad("params", 14) << pad("closed", 12) << pad("enumerated", 12)
          << "verdict\n";
      for (auto const& r : a.rows) {
        std::string p;
        for (std::size_t i = 0; i < r.params.size(); ++i) {
          p += (i ? "," : "") + std::to_string(r.params[i]);
        }
        out << pad(std::string(to_string(r.id)), 22) << pad(p, 14) << pad(std::to_string(r.closed), 12)
            << pad(std::to_string(r.enumerated), 12) << verdict_word(r) << '\n';
      }
      out << '\n';
      for (auto const& f : a.formulas) {
        out << pad(std::string(to_string(f.id)), 22) << f.agreements << '/' << f.tuples << " agree  "
            << info(f.id).closed_form << (f.passed() ? "" : "  UNEXPECTED") << '\n';
      }
      return a.passed() ? kExitOk : kExitViolation;
    }

    inline int iso(SpecLiteral const& s, SpecLiteral const& t, bool json, std::ostream& out) {
      IsoResult r;
      if (s.simplex.n == t.simplex.n) {
        r = iso_check(Subset(s.simplex.n, enumerate_simplex(s.simplex)),
                      Subset(t.simplex.n, enumerate_simplex(t.simplex)));
      }
      if (json) {
        out << dump(to_json(r));
      } else if (s.simplex.n != t.simplex.n) {
        out << "not isomorphic: chains of different size\n";
      } else if (r.isomorphic) {
        out << "isomorphic\n";
        for (auto const& [x, y] : r.mapping) {
          out << format_compact(x) << " -> " << format_compact(y) << '\n';
        }
      } else {
        out << "not isomorphic\n";
      }
      return r.isomorphic ? kExitOk : kExitViolation;
    }

  }  // namespace detail

  inline int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Endomorphism semirings of finite chains", "endochain"};
    app.require_subcommand(1);

    std::string spec_text, other_text, op_text = "mul", mode_text = "ascii", color_text = "none";
    bool        json = false;
    detail::CheckOptions check_opts;
    std::size_t counts_n = 6, counts_jobs = 1;

    auto* elements = app.add_subcommand("elements", "list the elements of a simplex");
    elements->add_option("spec", spec_text, "spec literal")->required();
    elements->add_flag("--json", json);

    auto* table = app.add_subcommand("table", "Cayley table of + or *");
    table->add_option("spec", spec_text, "spec literal")->required();
    table->add_option("--op", op_text)->check(CLI::IsMember({"add", "mul"}));
    table->add_flag("--json", json);

    auto* classify = app.add_subcommand("classify", "classify every element by its powers");
    classify->add_option("spec", spec_text, "spec literal")->required();
    classify->add_flag("--json", json);

    auto* decompose = app.add_subcommand("decompose", "eight-region decomposition of a triangle");
    decompose->add_option("spec", spec_text, "triangle literal")->required();
    decompose->add_flag("--json", json);

    auto* check = app.add_subcommand("check", "run registered claims");
    check->add_option("claim", check_opts.claim, "claim id or all");
    check->add_option("--n-max", check_opts.n_max)->check(CLI::Range(1, 255));
    check->add_option("--jobs", check_opts.jobs)->check(CLI::PositiveNumber);
    check->add_flag("--list", check_opts.list);
    check->add_flag("--json", check_opts.json);

    auto* counts = app.add_subcommand("counts", "closed forms against enumeration");
    counts->add_option("--n-max", counts_n)->check(CLI::Range(1, 255));
    counts->add_option("--jobs", counts_jobs)->check(CLI::PositiveNumber);
    counts->add_flag("--json", json);

    auto* render = app.add_subcommand("render", "draw a triangle");
    render->add_option("spec", spec_text, "triangle literal")->required();
    render->add_option("--mode", mode_text)->check(CLI::IsMember({"ascii", "svg"}));
    render->add_option("--color-by", color_text)->check(CLI::IsMember({"none", "region"}));

    auto* iso = app.add_subcommand("iso", "semiring isomorphism between two simplices");
    iso->add_option("left", spec_text, "spec literal")->required();
    iso->add_option("right", other_text, "spec literal")->required();
    iso->add_flag("--json", json);

    std::vector<char const*> argv{"endochain"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitUsage;
    }

    try {
      if (*elements) {
        return detail::elements(parse_spec_literal(spec_text), json, out);
      }
      if (*table) {
        Operation const op = op_text == "add" ? Operation::Add : Operation::Mul;
        return detail::table(parse_spec_literal(spec_text), op, json, out);
      }
      if (*classify) {
        return detail::classify(parse_spec_literal(spec_text), json, out);
      }
      if (*decompose) {
        return detail::decompose_cmd(parse_spec_literal(spec_text), json, out);
      }
      if (*check) {
        return detail::check(check_opts, out, err);
      }
      if (*counts) {
        return detail::counts(counts_n, counts_jobs, json, out);
      }
      if (*render) {
        SpecLiteral const s = parse_spec_literal(spec_text);
        if (!s.tri) {
          throw Error(ErrorKind::ParseError, "render needs a triangle");
        }
        Rendering const r = endochain::render(*s.tri, parse_render_mode(mode_text),
                                              parse_color_by(color_text));
        for (auto const& w : r.warnings) {
          err << "warning: " << w << '\n';
        }
        out << r.document;
        return kExitOk;
      }
      if (*iso) {
        return detail::iso(parse_spec_literal(spec_text), parse_spec_literal(other_text), json, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    return kExitUsage;
  }

}  // namespace endochain::cli

#endif  // ENDOCHAIN_CLI_HPP_
