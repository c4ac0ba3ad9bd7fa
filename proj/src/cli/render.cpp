#include <cmath>
#include <iomanip>
#include <sstream>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"

namespace arrangeproj::cli {

namespace {

constexpr double kSize = 600;
constexpr double kCenter = kSize / 2;
constexpr double kRadius = 250;

struct Vec2 {
  double x, y;
};

// Orthonormal basis of the plane x1 + x2 + x3 = 0: (1,-1,0)/sqrt2, (1,1,-2)/sqrt6.
Vec2 section(double x1, double x2, double x3) {
  return {(x1 - x2) / std::sqrt(2.0), (x1 + x2 - 2 * x3) / std::sqrt(6.0)};
}

Vec2 section(const RationalPoint& p) { return section(p.at(1).get_d(), p.at(2).get_d(), p.at(3).get_d()); }

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

class SvgDocument {
public:
  SvgDocument() {
    out_ << std::fixed << std::setprecision(2);
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
         << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  // Canvas y grows downward.
  static Vec2 canvas(Vec2 p) { return {kCenter + p.x, kCenter - p.y}; }

  void line(Vec2 a, Vec2 b, const std::string& cls, const std::string& style) {
    a = canvas(a);
    b = canvas(b);
    out_ << "<line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
         << "\" y2=\"" << b.y << "\" " << style << "/>\n";
  }

  void circle(Vec2 c, double r, const std::string& cls, const std::string& fill) {
    c = canvas(c);
    out_ << "<circle class=\"" << cls << "\" cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << r
         << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(Vec2 p, const std::string& body, const std::string& cls, const std::string& fill) {
    p = canvas(p);
    out_ << "<text class=\"" << cls << "\" x=\"" << p.x << "\" y=\"" << p.y
         << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" fill=\"" << fill << "\">"
         << escape(body) << "</text>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

private:
  static std::string escape(const std::string& s) {
    std::string r;
    for (char c : s) {
      if (c == '<') r += "&lt;";
      else if (c == '>') r += "&gt;";
      else if (c == '&') r += "&amp;";
      else r += c;
    }
    return r;
  }

  std::ostringstream out_;
};

}  // namespace

std::string cmd_render(const Graph& g, const std::optional<RationalPoint>& point) {
  if (g.vertex_count() != 3)
    throw UnsupportedDimension("render draws rank-2 sections and needs n = 3, got n = " +
                               std::to_string(g.vertex_count()));
  RationalPoint v = graphical_generic_point(3);
  if (point) {
    if (point->dimension() != 3 || !validate_point_graphical(*point, 3))
      throw InvalidPoint("point " + point->to_string() + " violates v_i > (6n^2+1) v_{i+1}, v_n > 0");
    v = *point;
  }
  const bool braid = g.edge_count() == 3;

  struct RegionView {
    std::string label;
    Vec2 direction;
    Vec2 projection;
    std::size_t pd;
  };
  std::vector<RegionView> regions;
  const Vec2 v2 = section(v);
  double extent = norm(v2);
  for (const auto& gamma : enumerate_acyclic_orientations(g)) {
    // Mean of the rank vectors of the region's linear extensions points into its interior.
    const auto extensions = linear_extensions(gamma);
    double x[3] = {0, 0, 0};
    for (const auto& sigma : extensions)
      for (std::size_t k = 0; k < 3; ++k) x[sigma[k] - 1] += static_cast<double>(2 - k);
    const Vec2 dir = section(x[0], x[1], x[2]);
    const auto r = project_onto_region_closed_form(g, gamma, v);
    const Vec2 p = section(r.point);
    extent = std::max(extent, norm(p));
    regions.push_back({braid ? extensions.front().to_string() : gamma.to_string(), dir, p, r.pd});
  }
  const double scale = extent > 0 ? 0.7 * kRadius / extent : 1.0;
  const auto scaled = [&](Vec2 p) { return Vec2{p.x * scale, p.y * scale}; };

  SvgDocument svg;
  for (auto [i, j] : g.edges()) {
    // Points with x_i = x_j = 1 and the third coordinate -2 span the line.
    double x[3] = {-2, -2, -2};
    x[i - 1] = x[j - 1] = 1;
    Vec2 d = section(x[0], x[1], x[2]);
    const double len = norm(d);
    d = {d.x / len * kRadius * 1.15, d.y / len * kRadius * 1.15};
    svg.line({-d.x, -d.y}, d, "hyperplane", "stroke=\"black\" stroke-width=\"1.5\"");
    svg.text({d.x * 1.05, d.y * 1.05}, "x" + std::to_string(i) + "=x" + std::to_string(j), "hyperplane-label",
             "black");
  }
  const Vec2 vs = scaled(v2);
  for (const auto& r : regions) {
    const double len = norm(r.direction);
    const Vec2 at = len > 1e-12 ? Vec2{r.direction.x / len * kRadius, r.direction.y / len * kRadius}
                                : Vec2{0, kRadius};
    svg.text(at, r.label, "region-label", "blue");
    const Vec2 p = scaled(r.projection);
    svg.line(vs, p, "projection-ray", "stroke=\"gray\" stroke-dasharray=\"4 3\"");
    svg.circle(p, 4, "projection-point", "green");
    svg.text({p.x, p.y - 14}, "pd=" + std::to_string(r.pd), "pd-label", "green");
  }
  svg.circle(vs, 5, "source-point", "red");
  svg.text({vs.x, vs.y + 10}, "v", "source-label", "red");
  return svg.finish();
}

}  // namespace arrangeproj::cli
