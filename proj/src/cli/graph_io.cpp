#include <fstream>
#include <set>
#include <sstream>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"

namespace arrangeproj::cli {

namespace {

bool parse_int(const std::string& token, long& out) {
  if (token.empty()) return false;
  std::size_t used = 0;
  try {
    out = std::stol(token, &used);
  } catch (const std::exception&) {
    return false;
  }
  return used == token.size();
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  long n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (tok[0] == "n") {
      if (n != -1) throw ParseError(line_no, "repeated 'n' line");
      if (tok.size() != 2 || !parse_int(tok[1], n) || n < 1)
        throw ParseError(line_no, "expected 'n <N>' with N >= 1");
      if (n > 64) throw RangeError(line_no, "at most 64 vertices supported");
    } else if (tok[0] == "e") {
      if (n == -1) throw ParseError(line_no, "'e' line before 'n' line");
      long i = 0, j = 0;
      if (tok.size() != 3 || !parse_int(tok[1], i) || !parse_int(tok[2], j))
        throw ParseError(line_no, "expected 'e <i> <j>'");
      if (i < 1 || j < 1 || i > n || j > n)
        throw RangeError(line_no, "endpoint outside [1, " + std::to_string(n) + "]");
      if (i >= j) throw ParseError(line_no, "expected i < j");
      const Edge e{static_cast<Vertex>(i), static_cast<Vertex>(j)};
      if (!seen.insert(e).second)
        throw DuplicateEdge(line_no, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  if (n == -1) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n' line");
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string serialize_graph(const Graph& g) {
  std::string s = "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [i, j] : g.edges()) s += "e " + std::to_string(i) + " " + std::to_string(j) + "\n";
  return s;
}

std::string describe_graph(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " e=";
  if (g.edges().empty()) return s + "-";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(g.edges()[k].first) + "-" + std::to_string(g.edges()[k].second);
  }
  return s;
}

std::string emit_polynomial(const IntPolynomial& p) {
  return p.to_string('q') + "\ncoeffs_ascending=" + p.coeff_list() + "\n";
}

RationalPoint parse_point(const std::string& csv) {
  std::vector<Rational> coords;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const auto comma = std::min(csv.find(',', pos), csv.size());
    std::string field = csv.substr(pos, comma - pos);
    const auto b = field.find_first_not_of(' '), e = field.find_last_not_of(' ');
    field = b == std::string::npos ? "" : field.substr(b, e - b + 1);
    Rational q;
    if (field.empty() || field.find_first_not_of("+-0123456789/") != std::string::npos ||
        q.set_str(field, 10) != 0 || q.get_den() == 0)
      throw InvalidPoint("malformed coordinate '" + field + "' in point '" + csv + "'");
    q.canonicalize();
    coords.push_back(q);
    pos = comma + 1;
  }
  return RationalPoint(std::move(coords));
}

}  // namespace arrangeproj::cli
