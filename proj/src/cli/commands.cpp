#include <sstream>
#include <stdexcept>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"
#include "arrangeproj/nui.hpp"

namespace arrangeproj::cli {

Method parse_method(const std::string& name) {
  if (name == "chromatic") return Method::chromatic;
  if (name == "mobius") return Method::mobius;
  if (name == "projection") return Method::projection;
  if (name == "product") return Method::product;
  throw std::invalid_argument("unknown method '" + name + "' (chromatic|mobius|projection|product)");
}

namespace {

RationalPoint checked_point(const Graph& g, const std::optional<RationalPoint>& point) {
  if (!point) return graphical_generic_point(g.vertex_count());
  if (point->dimension() != g.vertex_count())
    throw InvalidPoint("point has " + std::to_string(point->dimension()) + " coordinates, graph has " +
                       std::to_string(g.vertex_count()) + " vertices");
  if (!validate_point_graphical(*point, g.vertex_count()))
    throw InvalidPoint("point " + point->to_string() + " violates v_i > (6n^2+1) v_{i+1}, v_n > 0");
  return *point;
}

}  // namespace

std::string cmd_charpoly(const Graph& g, Method method, const std::optional<RationalPoint>& point) {
  switch (method) {
    case Method::chromatic:
      return emit_polynomial(chromatic_deletion_contraction(g));
    case Method::mobius:
      return emit_polynomial(mobius_char_poly(g));
    case Method::projection:
      return emit_polynomial(char_poly_via_projection(g, checked_point(g, point)));
    case Method::product:
      return emit_polynomial(product_char_poly(c_vector(g)));
  }
  throw std::logic_error("unhandled method");
}

std::string cmd_regions(const Graph& g, const std::optional<RationalPoint>& point) {
  const auto v = checked_point(g, point);
  const bool nui = is_nui(g);
  std::ostringstream out;
  out << "# graph " << describe_graph(g) << "\n";
  out << "# point " << v.to_string() << "\n";
  out << "region | source_components | pd | projection" << (nui ? " | lex_min" : "") << "\n";
  for (const auto& gamma : enumerate_acyclic_orientations(g)) {
    const auto r = project_onto_region_closed_form(g, gamma, v);
    out << gamma.to_string() << " | " << source_components(gamma).to_string() << " | " << r.pd << " | "
        << r.point.to_string();
    if (nui) out << " | " << lex_min_extension(gamma).to_string();
    out << "\n";
  }
  return out.str();
}

}  // namespace arrangeproj::cli
