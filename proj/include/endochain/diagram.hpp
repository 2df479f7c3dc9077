#ifndef ENDOCHAIN_DIAGRAM_HPP_
#define ENDOCHAIN_DIAGRAM_HPP_

// Pictures of a triangle's element grid.  Row r holds the elements with
// c-multiplicity n - r, so the apex is c̄ and the base runs from ā on the
// left to b̄ on the right; within a row the a-multiplicity decreases left to
// right.  Output is a pure function of its arguments.

#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chain_endo.hpp"
#include "error.hpp"
#include "triangle.hpp"

namespace endochain {

  enum class RenderMode { Ascii, Svg };
  enum class ColorBy { None, Region };

  inline constexpr std::size_t kAsciiSoftLimit = 30;
  inline constexpr std::size_t kSvgHardLimit   = 200;

  struct Cell {
    TriElem     elem;
    ChainEndo   value;
    std::size_t offset;  // horizontal position in half-cell units
  };

  struct Layout {
    TriangleSpec                   spec;
    std::vector<std::vector<Cell>> rows;  // rows[r] has c-multiplicity n - r

    [[nodiscard]] std::size_t cell_count() const noexcept {
      std::size_t k = 0;
      for (auto const& r : rows) {
        k += r.size();
      }
      return k;
    }
  };

  inline Layout layout(TriangleSpec const& t) {
    Layout out{t, {}};
    for (std::size_t r = 0; r <= t.n; ++r) {
      std::size_t const m = t.n - r;
      std::vector<Cell> row;
      for (std::size_t i = 0; i <= r; ++i) {
        TriElem const e{r - i, i, m};
        row.push_back(Cell{e, to_endo(t, e), (t.n - r) + 2 * i});
      }
      out.rows.push_back(std::move(row));
    }
    return out;
  }

  struct Rendering {
    std::string              document;
    std::vector<std::string> warnings;
  };

  //! Fill colours indexed like kRegions (Okabe-Ito, with grey for RI).
  inline constexpr std::array<std::string_view, 8> kPalette = {
      "#E69F00", "#56B4E9", "#009E73", "#F0E442",
      "#0072B2", "#D55E00", "#CC79A7", "#999999"};

  namespace detail {

    inline std::string rstrip(std::string s) {
      while (!s.empty() && s.back() == ' ') {
        s.pop_back();
      }
      return s;
    }

    inline std::string cell_label(TriangleSpec const& t, Cell const& c, ColorBy color) {
      std::string label = format_compact(c.value);
      if (color == ColorBy::Region) {
        label = std::string(1, region_letter(region_of(t, c.value))) + ":" + label;
      }
      return label;
    }

    inline void legend(std::ostream& os, Layout const& lay) {
      std::array<std::size_t, 8> sizes{};
      for (auto const& row : lay.rows) {
        for (auto const& c : row) {
          ++sizes[static_cast<std::size_t>(region_of(lay.spec, c.value))];
        }
      }
      for (Region g : kRegions) {
        os << region_letter(g) << ' ' << to_string(g) << ' '
           << sizes[static_cast<std::size_t>(g)] << '\n';
      }
    }

    inline std::string render_ascii(Layout const& lay, ColorBy color) {
      TriangleSpec const&      t = lay.spec;
      std::size_t              width = 0;
      std::vector<std::string> labels;
      for (auto const& row : lay.rows) {
        for (auto const& c : row) {
          labels.push_back(cell_label(t, c, color));
          width = std::max(width, labels.back().size());
        }
      }
      // Neighbours in a row are two half-cells apart, leaving a gap of at
      // least three spaces between the widest labels.
      std::size_t const  half = (width + 4) / 2;
      std::ostringstream os;
      os << to_string(t) << '\n';
      std::size_t idx = 0;
      for (auto const& row : lay.rows) {
        std::string line;
        for (auto const& c : row) {
          std::string const& s   = labels[idx++];
          std::size_t const  mid = c.offset * half + half;
          std::size_t const  at  = mid - std::min(mid, (s.size() + 1) / 2);
          if (line.size() < at) {
            line.append(at - line.size(), ' ');
          }
          line += s;
          line += ' ';
        }
        os << rstrip(std::move(line)) << '\n';
      }
      if (color == ColorBy::Region) {
        legend(os, lay);
      }
      return os.str();
    }

    inline std::string render_svg(Layout const& lay, ColorBy color) {
      TriangleSpec const& t      = lay.spec;
      std::size_t         width  = 1;
      for (auto const& row : lay.rows) {
        for (auto const& c : row) {
          width = std::max(width, cell_label(t, c, ColorBy::None).size());
        }
      }
      std::size_t const cw = 8 * width + 16, ch = 36, margin = 20;
      std::size_t const w = (t.n + 1) * cw + 2 * margin, h = (t.n + 1) * ch + 2 * margin;
      auto const        half = cw / 2;
      std::ostringstream os;
      os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
         << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
      os << "<polygon points=\"" << margin + t.n * half + half << ',' << margin << ' '
         << margin << ',' << h - margin << ' ' << w - margin << ',' << h - margin
         << "\" fill=\"none\" stroke=\"#000000\"/>\n";
      for (std::size_t r = 0; r < lay.rows.size(); ++r) {
        for (auto const& c : lay.rows[r]) {
          std::size_t const x = margin + c.offset * half, y = margin + r * ch;
          std::string_view  fill = "#FFFFFF";
          char              letter = 0;
          if (color == ColorBy::Region) {
            Region const g = region_of(t, c.value);
            fill           = kPalette[static_cast<std::size_t>(g)];
            letter         = region_letter(g);
          }
          os << "<rect x=\"" << x + 2 << "\" y=\"" << y + 2 << "\" width=\"" << cw - 4
             << "\" height=\"" << ch - 4 << "\" fill=\"" << fill
             << "\" stroke=\"#333333\"/>\n";
          os << "<text x=\"" << x + half << "\" y=\"" << y + 16
             << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">"
             << format_compact(c.value) << "</text>\n";
          if (letter != 0) {
            os << "<text x=\"" << x + half << "\" y=\"" << y + 30
               << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">"
               << letter << "</text>\n";
          }
        }
      }
      os << "</svg>\n";
      return os.str();
    }

  }  // namespace detail

  inline Rendering render(TriangleSpec const& t, RenderMode mode, ColorBy color = ColorBy::None) {
    Rendering out;
    if (mode == RenderMode::Svg) {
      if (t.n > kSvgHardLimit) {
        throw Error(ErrorKind::UnsupportedSize,
                    "svg rendering is capped at n=" + std::to_string(kSvgHardLimit));
      }
      out.document = detail::render_svg(layout(t), color);
      return out;
    }
    if (t.n > kAsciiSoftLimit) {
      out.warnings.push_back("ascii diagram for n=" + std::to_string(t.n)
                             + " exceeds the legible size of "
                             + std::to_string(kAsciiSoftLimit));
    }
    out.document = detail::render_ascii(layout(t), color);
    return out;
  }

  inline RenderMode parse_render_mode(std::string_view s) {
    if (s == "ascii") {
      return RenderMode::Ascii;
    }
    if (s == "svg") {
      return RenderMode::Svg;
    }
    throw Error(ErrorKind::ParseError, "unknown render mode " + std::string(s));
  }

  inline ColorBy parse_color_by(std::string_view s) {
    if (s == "none") {
      return ColorBy::None;
    }
    if (s == "region") {
      return ColorBy::Region;
    }
    throw Error(ErrorKind::ParseError, "unknown colouring " + std::string(s));
  }

}  // namespace endochain

#endif  // ENDOCHAIN_DIAGRAM_HPP_
