#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "arrangeproj/cli.hpp"
#include "arrangeproj/errors.hpp"
#include "arrangeproj/nui.hpp"

namespace arrangeproj::cli {

Family parse_family(const std::string& name) {
  if (name == "all-graphs") return Family::all_graphs;
  if (name == "nui") return Family::nui;
  if (name == "braid") return Family::braid;
  throw std::invalid_argument("unknown family '" + name + "' (all-graphs|nui|braid)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::all_graphs: return "all-graphs";
    case Family::nui: return "nui";
    case Family::braid: return "braid";
  }
  return "?";
}

int max_n_ceiling(Family family) {
  if (const char* env = std::getenv("ARRANGEPROJ_MAX_N"); env && *env) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("ARRANGEPROJ_MAX_N is not an integer: ") + env);
    }
  }
  return family == Family::all_graphs ? 5 : 6;
}

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "verify family=" << family_name(options.family) << " max_n=" << options.max_n
      << " seed=" << options.seed << " samples=" << options.samples << "\n";
  for (const auto& note : notes) out << "# " << note << "\n";
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " instances=" << c.instances;
    if (with_timing) out << " seconds=" << c.seconds;
    out << "\n";
    if (c.counterexample) out << "  counterexample: " << *c.counterexample << "\n";
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates one named check; keeps only the first counterexample.
class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (ok || !result_.passed) {
      if (!ok) result_.passed = false;
      return;
    }
    result_.passed = false;
    result_.counterexample = describe();
  }

  // An exception inside an instance counts as that instance failing.
  void run(const std::function<bool()>& body, const std::function<std::string()>& describe) {
    bool ok = false;
    std::string error;
    const auto start = Clock::now();
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    elapsed_ += Clock::now() - start;
    record(ok, [&] { return error.empty() ? describe() : describe() + " (error: " + error + ")"; });
  }

  CheckResult finish() {
    result_.seconds = std::chrono::duration<double>(elapsed_).count();
    return std::move(result_);
  }

private:
  CheckResult result_;
  Clock::duration elapsed_{};
};

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng() >> 63) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

RationalPoint random_point(int n, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) {
    const long num = static_cast<long>(rng() % 201) - 100;
    const long den = static_cast<long>(rng() % 9) + 1;
    c.emplace_back(num, den);
  }
  return RationalPoint(std::move(c));
}

std::string where(const Graph& g, const AcyclicOrientation& gamma) {
  return "graph " + describe_graph(g) + " region " + gamma.to_string();
}

void verify_braid(const VerifyOptions& opt, VerificationReport& report) {
  std::mt19937_64 rng(opt.seed);
  Check rlmin("braid-rlmin"), pava("braid-pava"), rlminsc("rlmin-source-components"),
      criterion("good-face-criterion"), lrmax("lrmax");
  for (int n = 1; n <= opt.max_n; ++n) {
    const Graph kn = Graph::complete(n);
    const auto lattice = bond_lattice(kn);
    const auto v = braid_generic_point(n);
    const auto w = lrmax_generic_point(n);
    std::vector<RationalPoint> random_points;
    for (std::size_t s = 0; s < opt.samples; ++s) random_points.push_back(random_point(n, rng));
    std::size_t regions = 0;
    for (const auto& sigma : all_permutations(n)) {
      ++regions;
      const auto gamma = orientation_of_permutation(kn, sigma);
      const auto label = "sigma=" + sigma.to_string();
      rlmin.run(
          [&] {
            const auto r = project_onto_region_oracle(gamma, v, lattice);
            return r.pd == rl_min(sigma).count &&
                   r.face == face_from_ordered_partition(kn, partition_at_rl_minima(sigma));
          },
          [&] { return label; });
      pava.run([&] { return pava_chain_projection(v, sigma) == project_onto_region_oracle(gamma, v, lattice).point; },
               [&] { return label + " point=" + v.to_string(); });
      for (const auto& p : random_points)
        pava.run(
            [&] { return pava_chain_projection(p, sigma) == project_onto_region_oracle(gamma, p, lattice).point; },
            [&] { return label + " point=" + p.to_string(); });
      rlminsc.run([&] { return source_components(gamma).block_count() == rl_min(sigma).count; },
                  [&] { return label; });
      lrmax.run([&] { return project_onto_region_oracle(gamma, w, lattice).pd == lr_max(sigma); },
                [&] { return label; });
    }
    for (const auto& pi : all_ordered_set_partitions(n))
      criterion.run([&] { return good_face_min_criterion(pi) == is_good_face(kn, v, face_from_ordered_partition(kn, pi)); },
                    [&] { return "n=" + std::to_string(n) + " face=" + pi.to_string(); });
    report.notes.push_back("n=" + std::to_string(n) + " regions=" + std::to_string(regions));
  }
  for (Check* c : {&rlmin, &pava, &rlminsc, &criterion, &lrmax}) report.checks.push_back(c->finish());
}

void verify_graph_family(const VerifyOptions& opt, VerificationReport& report) {
  std::mt19937_64 rng(opt.seed);
  std::vector<Graph> graphs;
  for (int n = 1; n <= opt.max_n; ++n) {
    auto all = all_graphs(n);
    report.notes.push_back("n=" + std::to_string(n) + " graphs=" + std::to_string(all.size()));
    for (auto& g : all) graphs.push_back(std::move(g));
  }
  if (opt.samples > 0) {
    const int n = opt.max_n + 1;
    for (std::size_t s = 0; s < opt.samples; ++s) graphs.push_back(random_graph(n, rng));
    report.notes.push_back("n=" + std::to_string(n) + " random graphs=" + std::to_string(opt.samples));
  }

  Check agreement("method-agreement"), counting("chromatic-counting"), graph_sc("graph-sc"),
      gz("gz-coefficients"), zaslavsky("region-count"), bounds("good-face-bounds");
  for (const auto& g : graphs) {
    const int n = g.vertex_count();
    const auto v = graphical_generic_point(n);
    const auto lattice = bond_lattice(g);
    const auto chi = chromatic_deletion_contraction(g);
    agreement.run([&] { return chi == mobius_char_poly(g) && chi == char_poly_via_projection(g, v); },
                  [&] { return "graph " + describe_graph(g); });
    counting.run(
        [&] {
          for (unsigned q = 0; q <= static_cast<unsigned>(n) + 1; ++q)
            if (chi.eval(q) != chromatic_by_counting(g, q)) return false;
          return true;
        },
        [&] { return "graph " + describe_graph(g); });
    gz.run([&] { return gz_coefficient_check(g).holds; }, [&] { return "graph " + describe_graph(g); });
    zaslavsky.run([&] { return region_count_check(g); }, [&] { return "graph " + describe_graph(g); });

    for (const auto& gamma : enumerate_acyclic_orientations(g)) {
      graph_sc.run(
          [&] {
            const auto closed = project_onto_region_closed_form(g, gamma, v);
            const auto oracle = project_onto_region_oracle(gamma, v, lattice);
            return closed == oracle && closed.pd == source_components(gamma).block_count();
          },
          [&] { return where(g, gamma); });
      bounds.run(
          [&] {
            const auto k = source_components(gamma).block_count();
            const auto closed = project_onto_region_closed_form(g, gamma, v);
            const auto source_distance = squared_distance(v, closed.point);
            bool found_source_face = false;
            for (const auto& good : good_faces_of_region(gamma, v, lattice)) {
              if (good.face.dimension() > k) return false;
              if (good.face == closed.face)
                found_source_face = true;
              else if (!(source_distance < good.squared_distance))
                return false;
            }
            return found_source_face && prefix_containment_check(gamma, v, lattice);
          },
          [&] { return where(g, gamma); });
    }
  }
  for (Check* c : {&agreement, &counting, &graph_sc, &gz, &zaslavsky, &bounds}) report.checks.push_back(c->finish());
}

void verify_nui(const VerifyOptions& opt, VerificationReport& report) {
  Check roundtrip("nui-roundtrip"), product("nui-product"), generating("nui-generating-sum"),
      locallex("locallex"), projection("nui-projection");
  for (int n = 1; n <= opt.max_n; ++n) {
    const auto cvs = all_c_vectors(n);
    report.notes.push_back("n=" + std::to_string(n) + " c-vectors=" + std::to_string(cvs.size()));
    const auto v = graphical_generic_point(n);
    for (const auto& c : cvs) {
      const auto label = "c=" + c.to_string();
      const Graph g = nui_from_c_vector(c);
      roundtrip.run([&] { return is_nui(g) && c_vector(g) == c; }, [&] { return label; });
      product.run(
          [&] {
            const auto p = product_char_poly(c);
            return p == chromatic_deletion_contraction(g) && p == mobius_char_poly(g);
          },
          [&] { return label; });
      generating.run(
          [&] {
            const auto sum = rlmin_generating_sum(g);
            const auto signed_product = product_char_poly(c).reflected() * mpz_class(n % 2 == 0 ? 1 : -1);
            return sum == rising_product(c) && signed_product == sum;
          },
          [&] { return label; });
      for (const auto& gamma : enumerate_acyclic_orientations(g)) {
        locallex.run(
            [&] {
              std::size_t local_minima = 0;
              std::optional<Permutation> found;
              for (const auto& sigma : linear_extensions(gamma)) {
                if (is_g_local_min(g, sigma)) {
                  ++local_minima;
                  found = sigma;
                }
              }
              return local_minima == 1 && *found == lex_min_extension(gamma);
            },
            [&] { return label + " region " + gamma.to_string(); });
      }
      projection.run([&] { return nui_projection_check(g, v).holds; }, [&] { return label; });
    }
  }
  for (Check* c : {&roundtrip, &product, &generating, &locallex, &projection}) report.checks.push_back(c->finish());
}

}  // namespace

VerificationReport cmd_verify(const VerifyOptions& options) {
  const int ceiling = max_n_ceiling(options.family);
  if (options.max_n > ceiling)
    throw CeilingExceeded("max_n " + std::to_string(options.max_n) + " exceeds the ceiling " +
                          std::to_string(ceiling) + " for family " + family_name(options.family) +
                          " (set ARRANGEPROJ_MAX_N to override)");
  if (options.max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  VerificationReport report{options, {}, {}};
  switch (options.family) {
    case Family::braid: verify_braid(options, report); break;
    case Family::all_graphs: verify_graph_family(options, report); break;
    case Family::nui: verify_nui(options, report); break;
  }
  return report;
}

}  // namespace arrangeproj::cli
