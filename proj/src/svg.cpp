#include <algorithm>
#include <fstream>
#include <string>

#include "tanglekit/cli.hpp"
#include "tanglekit/errors.hpp"

namespace tanglekit {

  namespace {
    constexpr int kBoxWidth  = 56;
    constexpr int kBoxHeight = 36;
    constexpr int kBoxGap    = 12;
    constexpr int kMargin    = 40;
    constexpr int kMinRadius = 110;

    std::string num(long v) {
      return std::to_string(v);
    }

    std::string signed_label(Int e) {
      return (e > 0 ? "+" : "") + std::to_string(e);
    }

    std::string xml_escape(std::string const& s) {
      std::string out;
      for (char ch : s) {
        switch (ch) {
          case '<':
            out += "&lt;";
            break;
          case '>':
            out += "&gt;";
            break;
          case '&':
            out += "&amp;";
            break;
          default:
            out += ch;
        }
      }
      return out;
    }

    struct Point {
      long x;
      long y;
    };
  }  // namespace

  std::string render_svg(TangleExpr const& t) {
    ProjRat    v     = fraction_of(t);
    TangleExpr canon = alternating_form(v);
    GenWord    word  = reduce_moves(TangleExpr{Base::Horizontal, canon.moves});

    long n   = static_cast<long>(word.size());
    long row = n == 0 ? 0 : n * kBoxWidth + (n - 1) * kBoxGap;
    long r   = std::max<long>(kMinRadius, row / 2 + kMargin);
    long c   = r + kMargin;
    long sz  = 2 * c;
    // r / sqrt(2), rounded
    long diag = (r * 70711 + 50000) / 100000;

    // Endpoints 1..4 clockwise from the upper right.
    Point const ends[4] = {{c + diag, c - diag},
                           {c + diag, c + diag},
                           {c - diag, c + diag},
                           {c - diag, c - diag}};
    Point const labels[4] = {{ends[0].x + 10, ends[0].y - 8},
                             {ends[1].x + 10, ends[1].y + 18},
                             {ends[2].x - 18, ends[2].y + 18},
                             {ends[3].x - 18, ends[3].y - 8}};

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
         + num(sz) + "\" height=\"" + num(sz) + "\" viewBox=\"0 0 " + num(sz)
         + " " + num(sz) + "\">\n";
    s += "  <title>" + xml_escape(to_string(canon)) + " (" + to_string(v)
         + ")</title>\n";
    s += "  <circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" + num(r)
         + "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    // Base arcs: G= joins 4-1 and 3-2, G|| joins 1-2 and 4-3.
    auto line = [&s](Point a, Point b) {
      s += "    <line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\""
           + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
    };
    s += "  <g class=\"base\" stroke=\"#bbbbbb\" stroke-width=\"2\" "
         "stroke-dasharray=\"6 4\">\n";
    if (canon.base == Base::Horizontal) {
      line(ends[3], ends[0]);
      line(ends[2], ends[1]);
    } else {
      line(ends[0], ends[1]);
      line(ends[3], ends[2]);
    }
    s += "  </g>\n";

    s += "  <g class=\"endpoints\" font-family=\"sans-serif\" "
         "font-size=\"14\">\n";
    for (int i = 0; i < 4; ++i) {
      s += "    <circle cx=\"" + num(ends[i].x) + "\" cy=\"" + num(ends[i].y)
           + "\" r=\"4\" fill=\"#000000\"/>\n";
      s += "    <text x=\"" + num(labels[i].x) + "\" y=\"" + num(labels[i].y)
           + "\">" + num(i + 1) + "</text>\n";
    }
    s += "  </g>\n";

    s += "  <g class=\"twists\" font-family=\"sans-serif\" "
         "text-anchor=\"middle\">\n";
    long x = c - row / 2;
    long y = c - kBoxHeight / 2;
    for (auto const& syl : word.syllables()) {
      bool        is_a = syl.gen == Letter::A;
      std::string name = is_a ? "A" : "B";
      s += "    <g class=\"twist\" data-letter=\"" + name
           + "\" data-exponent=\"" + std::to_string(syl.exponent) + "\">\n";
      s += "      <rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\""
           + num(kBoxWidth) + "\" height=\"" + num(kBoxHeight) + "\" fill=\""
           + (is_a ? "#dbe9f6" : "#f6e3db")
           + "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
      s += "      <text x=\"" + num(x + kBoxWidth / 2) + "\" y=\""
           + num(y + 23) + "\" font-size=\"16\">" + signed_label(syl.exponent)
           + "</text>\n";
      s += "      <text x=\"" + num(x + kBoxWidth / 2) + "\" y=\""
           + num(y + kBoxHeight + 14) + "\" font-size=\"11\">" + name
           + "</text>\n";
      s += "    </g>\n";
      x += kBoxWidth + kBoxGap;
    }
    s += "  </g>\n";
    s += "</svg>\n";
    return s;
  }

  void emit_svg(TangleExpr const& t, std::filesystem::path const& path) {
    std::string   doc = render_svg(t);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open " + path.string() + " for writing");
    }
    f << doc;
    f.close();
    if (!f) {
      throw IoError("failed writing " + path.string());
    }
  }

}  // namespace tanglekit
