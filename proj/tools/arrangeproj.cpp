// arrangeproj: characteristic polynomials of graphical arrangements and the
// projection statistic. Exit codes: 0 pass, 1 verification failure, 2 usage
// or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"
#include "arrangeproj/nui.hpp"

namespace cli = arrangeproj::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string graph_file;
  std::string cvector;
};

arrangeproj::Graph load_graph(const GraphSource& src) {
  if (!src.graph_file.empty() && !src.cvector.empty())
    throw std::invalid_argument("give either --graph or --cvector, not both");
  if (!src.cvector.empty()) return arrangeproj::nui_from_c_vector(arrangeproj::CVector::parse(src.cvector));
  if (src.graph_file.empty()) throw std::invalid_argument("one of --graph or --cvector is required");
  return cli::parse_graph_file(src.graph_file);
}

std::optional<arrangeproj::RationalPoint> load_point(const std::string& csv) {
  if (csv.empty()) return std::nullopt;
  return cli::parse_point(csv);
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.graph_file, "graph file ('n N' then 'e i j' lines)");
  cmd->add_option("--cvector", src.cvector, "natural unit interval graph by c-vector, e.g. 0,1,1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characteristic polynomials of graphical hyperplane arrangements"};
  app.require_subcommand(1);

  GraphSource src;
  std::string method = "chromatic", family = "braid", point_csv, out_path;
  cli::VerifyOptions verify;

  auto* charpoly = app.add_subcommand("charpoly", "emit the characteristic polynomial");
  add_graph_source(charpoly, src);
  charpoly->add_option("--method", method, "chromatic|mobius|projection|product");
  charpoly->add_option("--point", point_csv, "comma-separated rationals for the projection method");

  auto* regions = app.add_subcommand("regions", "tabulate regions with their projections");
  add_graph_source(regions, src);
  regions->add_option("--point", point_csv, "comma-separated rationals");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--family", family, "all-graphs|nui|braid");
  verify_cmd->add_option("--max-n", verify.max_n, "largest vertex count");
  verify_cmd->add_option("--seed", verify.seed, "seed for sampled instances");
  verify_cmd->add_option("--samples", verify.samples, "random extra instances");

  auto* render = app.add_subcommand("render", "draw the n = 3 arrangement section as SVG");
  add_graph_source(render, src);
  render->add_option("--point", point_csv, "comma-separated rationals");
  render->add_option("--out", out_path, "output SVG path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*charpoly) {
      std::cout << cli::cmd_charpoly(load_graph(src), cli::parse_method(method), load_point(point_csv));
    } else if (*regions) {
      std::cout << cli::cmd_regions(load_graph(src), load_point(point_csv));
    } else if (*verify_cmd) {
      verify.family = cli::parse_family(family);
      const auto report = cli::cmd_verify(verify);
      std::cout << report.to_text();
      for (const auto& c : report.checks) std::cerr << c.name << ": " << c.seconds << "s\n";
      return report.passed() ? 0 : kExitFail;
    } else if (*render) {
      const auto svg = cli::cmd_render(load_graph(src), load_point(point_csv));
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path);
        if (!(out << svg)) throw std::runtime_error("cannot write " + out_path);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "arrangeproj: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
