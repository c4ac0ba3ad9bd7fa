#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"
#include "arrangeproj/nui.hpp"

using namespace arrangeproj;
namespace fs = std::filesystem;

namespace {

const fs::path kData = ARRANGEPROJ_TEST_DATA;

std::vector<fs::path> corpus() {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(kData))
    if (entry.path().extension() == ".graph") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string machine_line(const std::string& emitted) {
  const auto at = emitted.find("coeffs_ascending=");
  REQUIRE(at != std::string::npos);
  return emitted.substr(at, emitted.find('\n', at) - at);
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos; at = haystack.find(needle, at + 1)) ++n;
  return n;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// pd column of a regions table, sorted.
std::vector<int> pd_column(const std::string& table) {
  std::vector<int> pds;
  for (const auto& l : lines(table)) {
    if (l.empty() || l[0] == '#' || l.rfind("region ", 0) == 0) continue;
    std::istringstream cells(l);
    std::string cell;
    for (int k = 0; k < 3; ++k) std::getline(cells, cell, '|');
    pds.push_back(std::stoi(cell));
  }
  std::sort(pds.begin(), pds.end());
  return pds;
}

template <class E>
std::size_t failing_line(const std::string& text) {
  try {
    cli::parse_graph(text);
  } catch (const E& e) {
    return e.line();
  }
  FAIL("no error raised");
  return 0;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string("\"") + ARRANGEPROJ_TOOL + "\" " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class ScopedEnv {
public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

private:
  const char* name_;
};

}  // namespace

TEST_CASE("parse_graph accepts the documented format") {
  CHECK(cli::parse_graph("n 3\ne 1 2\ne 2 3") == Graph(3, {{1, 2}, {2, 3}}));
  CHECK(cli::parse_graph("# comment\n\nn 3\n  # indented comment\ne 2 3\r\ne 1 2\n") == Graph(3, {{1, 2}, {2, 3}}));
  CHECK(cli::parse_graph("n 4\n") == Graph::edgeless(4));
}

TEST_CASE("parse_graph errors carry line numbers") {
  CHECK(failing_line<DuplicateEdge>("n 3\ne 1 2\ne 1 2") == 3);
  CHECK(failing_line<RangeError>("n 3\ne 1 4") == 2);
  CHECK(failing_line<RangeError>("n 3\ne 0 2") == 2);
  CHECK(failing_line<ParseError>("e 1 2\nn 3") == 1);
  CHECK(failing_line<ParseError>("n 3\ne 2 1") == 2);
  CHECK(failing_line<ParseError>("n 3\ne 1") == 2);
  CHECK(failing_line<ParseError>("n 3\nn 3") == 2);
  CHECK(failing_line<ParseError>("n three") == 1);
  CHECK(failing_line<ParseError>("n 3\n\nx 1 2") == 3);
  CHECK(failing_line<ParseError>("# only a comment\n") == 1);
  CHECK(failing_line<RangeError>("n 65") == 1);
}

TEST_CASE("invalid corpus files are rejected") {
  CHECK_THROWS_AS(cli::parse_graph_file(kData / "invalid" / "duplicate.graph"), DuplicateEdge);
  CHECK_THROWS_AS(cli::parse_graph_file(kData / "invalid" / "range.graph"), RangeError);
  for (const auto& entry : fs::directory_iterator(kData / "invalid"))
    CHECK_THROWS_AS(cli::parse_graph_file(entry.path()), ParseError);
  CHECK_THROWS(cli::parse_graph_file(kData / "missing.graph"));
}

TEST_CASE("serialize then parse is the identity") {
  for (const auto& path : corpus()) {
    const Graph g = cli::parse_graph_file(path);
    const auto text = cli::serialize_graph(g);
    CHECK(cli::parse_graph(text) == g);
    CHECK(cli::serialize_graph(cli::parse_graph(text)) == text);
  }
  for (const auto& g : all_graphs(4)) CHECK(cli::parse_graph(cli::serialize_graph(g)) == g);
}

TEST_CASE("emit_polynomial") {
  CHECK(cli::emit_polynomial(IntPolynomial()) == "0\ncoeffs_ascending=[0]\n");
  CHECK(cli::emit_polynomial(IntPolynomial{0, 2, -3, 1}) == "q^3 - 3q^2 + 2q\ncoeffs_ascending=[0,2,-3,1]\n");
  CHECK(cli::emit_polynomial(IntPolynomial::monomial(3)) == "q^3\ncoeffs_ascending=[0,0,0,1]\n");
}

TEST_CASE("parse_point") {
  CHECK(cli::parse_point("3136,56,1") == RationalPoint::from_integers({3136, 56, 1}));
  CHECK(cli::parse_point("1/2, -3/6,4") == RationalPoint({Rational(1, 2), Rational(-1, 2), Rational(4)}));
  CHECK_THROWS_AS(cli::parse_point(""), InvalidPoint);
  CHECK_THROWS_AS(cli::parse_point("1,,2"), InvalidPoint);
  CHECK_THROWS_AS(cli::parse_point("1,x"), InvalidPoint);
  CHECK_THROWS_AS(cli::parse_point("1/0"), InvalidPoint);
  CHECK_THROWS_AS(cli::parse_point("1.5"), InvalidPoint);
}

TEST_CASE("cmd_charpoly examples on P3") {
  const Graph p3 = cli::parse_graph_file(kData / "p3.graph");
  const std::string expected = "q^3 - 2q^2 + q\ncoeffs_ascending=[0,1,-2,1]\n";
  for (auto m : {cli::Method::chromatic, cli::Method::mobius, cli::Method::projection, cli::Method::product})
    CHECK(cli::cmd_charpoly(p3, m) == expected);
  CHECK(cli::cmd_charpoly(p3, cli::Method::projection, RationalPoint::from_integers({9000, 60, 1})) == expected);
  CHECK_THROWS_AS(cli::cmd_charpoly(p3, cli::Method::projection, RationalPoint::from_integers({16, 4, 1})),
                  InvalidPoint);
  CHECK_THROWS_AS(cli::parse_method("bogus"), std::invalid_argument);
}

TEST_CASE("all applicable methods agree byte for byte over the corpus") {
  for (const auto& path : corpus()) {
    CAPTURE(path.filename().string());
    const Graph g = cli::parse_graph_file(path);
    const auto reference = cli::cmd_charpoly(g, cli::Method::chromatic);
    CHECK(machine_line(cli::cmd_charpoly(g, cli::Method::mobius)) == machine_line(reference));
    CHECK(machine_line(cli::cmd_charpoly(g, cli::Method::projection)) == machine_line(reference));
    if (is_nui(g))
      CHECK(machine_line(cli::cmd_charpoly(g, cli::Method::product)) == machine_line(reference));
    else
      CHECK_THROWS_AS(cli::cmd_charpoly(g, cli::Method::product), NotNUI);
  }
}

TEST_CASE("cmd_regions tables") {
  const auto e2 = cli::cmd_regions(Graph::edgeless(2));
  CHECK(pd_column(e2) == std::vector<int>{2});

  const auto p3 = cli::cmd_regions(cli::parse_graph_file(kData / "p3.graph"));
  CHECK(pd_column(p3) == std::vector<int>{1, 2, 2, 3});
  CHECK(p3.find("region | source_components | pd | projection | lex_min\n") != std::string::npos);
  CHECK(p3.find("# point (3136,56,1)\n") != std::string::npos);
  CHECK(p3.find(" | 2 | (1596,1596,1) | 213") != std::string::npos);
  CHECK(p3.find("3193/3") != std::string::npos);

  CHECK(pd_column(cli::cmd_regions(Graph::complete(3))) == std::vector<int>{1, 1, 2, 2, 2, 3});

  const auto c4 = cli::cmd_regions(cli::parse_graph_file(kData / "c4.graph"));
  CHECK(pd_column(c4).size() == 14);
  CHECK(c4.find("lex_min") == std::string::npos);
  CHECK_THROWS_AS(cli::cmd_regions(Graph::complete(3), RationalPoint::from_integers({1, 1})), InvalidPoint);
}

TEST_CASE("cmd_verify examples") {
  cli::VerifyOptions braid{cli::Family::braid, 4, 1, 3};
  const auto b = cli::cmd_verify(braid);
  CHECK(b.passed());
  std::size_t regions = 0;
  for (const auto& note : b.notes) regions += std::stoul(note.substr(note.find("regions=") + 8));
  CHECK(regions == 24 + 6 + 2 + 1);

  const auto all = cli::cmd_verify({cli::Family::all_graphs, 3, 1, 0});
  CHECK(all.passed());
  CHECK(std::find(all.notes.begin(), all.notes.end(), "n=3 graphs=8") != all.notes.end());

  const auto nui = cli::cmd_verify({cli::Family::nui, 5, 1, 0});
  CHECK(nui.passed());
  CHECK(std::find(nui.notes.begin(), nui.notes.end(), "n=5 c-vectors=42") != nui.notes.end());
  for (const auto& c : nui.checks) {
    CHECK(c.instances > 0);
    CHECK_FALSE(c.counterexample.has_value());
  }
}

TEST_CASE("cmd_verify is deterministic for a fixed seed") {
  for (auto family : {cli::Family::braid, cli::Family::all_graphs, cli::Family::nui}) {
    const cli::VerifyOptions opt{family, 3, 42, 4};
    CHECK(cli::cmd_verify(opt).to_text() == cli::cmd_verify(opt).to_text());
  }
}

TEST_CASE("cmd_verify refuses sizes above the ceiling") {
  CHECK(cli::max_n_ceiling(cli::Family::all_graphs) == 5);
  CHECK(cli::max_n_ceiling(cli::Family::braid) == 6);
  CHECK_THROWS_AS(cli::cmd_verify({cli::Family::all_graphs, 6, 1, 0}), CeilingExceeded);
  CHECK_THROWS_AS(cli::cmd_verify({cli::Family::braid, 7, 1, 0}), CeilingExceeded);
  {
    ScopedEnv env("ARRANGEPROJ_MAX_N", "2");
    CHECK(cli::max_n_ceiling(cli::Family::braid) == 2);
    CHECK_THROWS_AS(cli::cmd_verify({cli::Family::braid, 3, 1, 0}), CeilingExceeded);
    CHECK(cli::cmd_verify({cli::Family::braid, 2, 1, 0}).passed());
  }
  {
    ScopedEnv env("ARRANGEPROJ_MAX_N", "8");
    CHECK(cli::max_n_ceiling(cli::Family::all_graphs) == 8);
  }
}

TEST_CASE("cmd_render structure") {
  const auto k3 = cli::cmd_render(Graph::complete(3));
  CHECK(count(k3, "class=\"hyperplane\"") == 3);
  CHECK(count(k3, "class=\"region-label\"") == 6);
  CHECK(count(k3, "class=\"source-point\"") == 1);
  CHECK(count(k3, "class=\"projection-point\"") == 6);
  std::vector<std::string> pd_labels;
  for (const auto& l : lines(k3))
    if (l.find("class=\"pd-label\"") != std::string::npos)
      pd_labels.push_back(l.substr(l.find("pd="), 4));
  std::sort(pd_labels.begin(), pd_labels.end());
  CHECK(pd_labels == std::vector<std::string>{"pd=1", "pd=1", "pd=2", "pd=2", "pd=2", "pd=3"});
  for (const char* sigma : {">123<", ">132<", ">213<", ">231<", ">312<", ">321<"}) CHECK(count(k3, sigma) == 1);

  const auto p3 = cli::cmd_render(cli::parse_graph_file(kData / "p3.graph"));
  CHECK(count(p3, "class=\"hyperplane\"") == 2);
  CHECK(count(p3, "class=\"region-label\"") == 4);

  const auto e3 = cli::cmd_render(Graph::edgeless(3));
  CHECK(count(e3, "class=\"hyperplane\"") == 0);
  CHECK(count(e3, "class=\"region-label\"") == 1);

  CHECK(k3.rfind("<svg", 0) == 0);
  CHECK(k3.find("</svg>") != std::string::npos);
  CHECK_THROWS_AS(cli::cmd_render(Graph::complete(4)), UnsupportedDimension);
  CHECK_THROWS_AS(cli::cmd_render(Graph::edgeless(2)), UnsupportedDimension);
}

TEST_CASE("tool exit codes") {
  const std::string p3 = "--graph \"" + (kData / "p3.graph").string() + "\"";
  CHECK(run_tool("charpoly " + p3) == 0);
  CHECK(run_tool("charpoly --cvector 0,1,1 --method product") == 0);
  CHECK(run_tool("regions " + p3) == 0);
  CHECK(run_tool("verify --family braid --max-n 3") == 0);
  CHECK(run_tool("render " + p3) == 0);
  CHECK(run_tool("charpoly --graph \"" + (kData / "invalid" / "duplicate.graph").string() + "\"") == 2);
  CHECK(run_tool("charpoly --graph \"" + (kData / "c4.graph").string() + "\" --method product") == 2);
  CHECK(run_tool("charpoly " + p3 + " --method nonsense") == 2);
  CHECK(run_tool("verify --family all-graphs --max-n 6") == 2);
  CHECK(run_tool("render --graph \"" + (kData / "k4.graph").string() + "\"") == 2);
  CHECK(run_tool("--no-such-flag") == 2);
  CHECK(run_tool("charpoly --cvector 0,2,1") == 2);
}
