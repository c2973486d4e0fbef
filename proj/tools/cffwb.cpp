// Command-line front end: bound tables, design verification, exact solving,
// constructions, conversions, and enumeration.
//
// Exit codes: 0 success, 1 verification failure (witness printed),
// 2 usage or domain error, 3 budget exhaustion.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cffwb/bounds.hpp"
#include "cffwb/combinatorics.hpp"
#include "cffwb/constructions.hpp"
#include "cffwb/cover.hpp"
#include "cffwb/errors.hpp"
#include "cffwb/graphs.hpp"
#include "cffwb/setsystem.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cffwb::parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// Bipartite 0/1 adjacency matrix: rows = left vertices, columns = right.
cffwb::LabeledGraph parse_adjacency(const std::string& text) {
  cffwb::LabeledGraph g;
  g.bipartite = true;
  g.family = "custom";
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> rows;
  int line_no = 0;
  size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    for (char ch : line)
      if (ch != '0' && ch != '1')
        throw cffwb::parse_error("adjacency line " + std::to_string(line_no) +
                                 ": expected only 0/1");
    if (!rows.empty() && line.size() != width)
      throw cffwb::parse_error("adjacency line " + std::to_string(line_no) +
                               ": ragged row");
    width = line.size();
    rows.push_back(line);
  }
  if (rows.empty()) throw cffwb::parse_error("adjacency matrix: empty input");
  int nl = static_cast<int>(rows.size());
  int nr = static_cast<int>(width);
  g.n_left = nl;
  g.labels.resize(nl + nr);
  g.adj.resize(nl + nr);
  for (int i = 0; i < nl; ++i) g.labels[i] = {i + 1};
  for (int j = 0; j < nr; ++j) g.labels[nl + j] = {j + 1};
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nr; ++j)
      if (rows[i][j] == '1') {
        g.adj[i].push_back(nl + j);
        g.adj[nl + j].push_back(i);
      }
  return g;
}

int run_bounds(int r, int w, int d, int t, std::optional<double> c,
               const std::string& format) {
  cffwb::BoundEngine engine;
  cffwb::BoundReport report = engine.best_bounds(r, w, d, t, c);
  if (format == "structured")
    std::cout << cffwb::emit_report(report);
  else
    std::cout << cffwb::format_report(report);
  return 0;
}

int run_verify_cff(const std::string& file, int r, int w, int d) {
  cffwb::SetSystem sys = cffwb::parse_incidence(slurp(file));
  cffwb::CffResult res = cffwb::is_cff(sys, r, w, d);
  if (res.ok) {
    std::cout << "ok: (" << r << "," << w << ";" << d << ")-CFF("
              << sys.n_points << "," << sys.block_count() << ")\n";
    return 0;
  }
  std::cout << "fail: blocks L={" << join(res.witness->L) << "} M={"
            << join(res.witness->M) << "} shortfall=" << res.witness->shortfall
            << "\n";
  return 1;
}

int run_solve_bc(const std::string& family, const std::string& graph_file,
                 int d, long budget) {
  if (family.empty() == graph_file.empty())
    throw cffwb::domain_error(
        "solve-bc: exactly one of --family / --graph required");
  cffwb::LabeledGraph g = family.empty()
                              ? parse_adjacency(slurp(graph_file))
                              : cffwb::build_graph(family);
  cffwb::SolveResult res =
      cffwb::exact_bcd(g, d, budget, /*max_vertices=*/g.vertex_count());
  if (res.exact) {
    std::cout << "bc_" << d << " = " << res.lower.get_str()
              << " (nodes=" << res.nodes << ")\n";
    if (res.witness) std::cout << cffwb::emit_cover(*res.witness) << "\n";
    return 0;
  }
  std::cout << "budget exhausted: " << res.lower.get_str() << " <= bc_" << d
            << " <= " << res.upper.get_str() << " (nodes=" << res.nodes
            << ")\n";
  return 3;
}

int run_construct_hadamard(int order) {
  std::cout << cffwb::emit_hadamard(cffwb::hadamard_matrix(order));
  return 0;
}

int run_construct_hadamard_cff(int d) {
  cffwb::HadamardMatrix H = cffwb::hadamard_matrix(4 * d);
  cffwb::SetSystem sys = cffwb::cover_to_cff(cffwb::hadamard_cover(H));
  std::cout << cffwb::emit_incidence(sys) << "\n";
  return 0;
}

int run_construct_orbit(int t, int r, int w) {
  std::cout << cffwb::emit_cover(cffwb::orbit_cover(t, r, w)) << "\n";
  return 0;
}

int run_cff_to_cover(const std::string& file, int r, int w, int d) {
  cffwb::SetSystem sys = cffwb::parse_incidence(slurp(file));
  std::cout << cffwb::emit_cover(cffwb::cff_to_cover(sys, r, w, d)) << "\n";
  return 0;
}

int run_cover_to_cff(const std::string& file) {
  cffwb::BicliqueCover c = cffwb::parse_cover(slurp(file));
  std::cout << cffwb::emit_incidence(cffwb::cover_to_cff(c)) << "\n";
  return 0;
}

int run_lattice_paths(int i, int j) {
  auto paths = cffwb::enumerate_lattice_paths(i, j);
  for (const auto& p : paths) std::cout << p.to_string() << "\n";
  std::cout << "count=" << paths.size() << "\n";
  return 0;
}

int run_setpairs_check(const std::string& file, const std::string& mode) {
  cffwb::SetPairFamily f = cffwb::parse_setpairs(slurp(file));
  cffwb::SetPairCheck check;
  if (mode == "weak") {
    check = cffwb::setpairs_weak(f);
  } else if (mode == "cross") {
    check = cffwb::setpairs_cross(f);
  } else if (mode.rfind("rw:", 0) == 0) {
    int r = 0, w = 0;
    char comma = 0;
    std::istringstream in(mode.substr(3));
    if (!(in >> r >> comma >> w) || comma != ',')
      throw cffwb::domain_error("setpairs check: bad mode " + mode);
    check = cffwb::setpairs_rw_system(f, r, w);
  } else {
    throw cffwb::domain_error("setpairs check: unknown mode " + mode);
  }
  if (check.ok) {
    std::cout << "ok: " << f.pairs.size() << " pairs\n";
    return 0;
  }
  std::cout << "fail: pair indices (" << check.witness->first << ","
            << check.witness->second << ")\n";
  return 1;
}

int run_setpairs_dual(const std::string& file) {
  cffwb::SetPairFamily f = cffwb::parse_setpairs(slurp(file));
  std::cout << cffwb::emit_setpairs(cffwb::dual_setpairs(f)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cover-free family and biclique cover workbench"};
  app.require_subcommand(1);

  // bounds
  int b_r = 1, b_w = 1, b_d = 1, b_t = 2;
  double b_c = 0.0;
  std::string b_format = "human";
  auto* bounds = app.add_subcommand("bounds", "Bound report for N((r,w;d),t)");
  bounds->add_option("--r", b_r)->required();
  bounds->add_option("--w", b_w)->required();
  bounds->add_option("--d", b_d)->default_val(1);
  bounds->add_option("--t", b_t)->required();
  auto* c_opt = bounds->add_option("--c", b_c,
                                   "Density constant (enables heuristics; "
                                   "1/8 is the conservative citable choice)");
  bounds->add_option("--format", b_format)
      ->check(CLI::IsMember({"human", "structured"}));

  // verify-cff
  std::string v_file;
  int v_r = 1, v_w = 1, v_d = 1;
  auto* verify = app.add_subcommand("verify-cff", "Check an incidence matrix");
  verify->add_option("file", v_file)->required();
  verify->add_option("--r", v_r)->required();
  verify->add_option("--w", v_w)->required();
  verify->add_option("--d", v_d)->default_val(1);

  // solve-bc
  std::string s_family, s_graph;
  int s_d = 1;
  long s_budget = 10'000'000;
  auto* solve = app.add_subcommand("solve-bc", "Exact d-biclique cover number");
  solve->add_option("--family", s_family,
                    "it:T,R,W | subset:T,A,B | kminus:N | complete:N");
  solve->add_option("--graph", s_graph, "bipartite 0/1 adjacency matrix file");
  solve->add_option("--d", s_d)->default_val(1);
  solve->add_option("--budget", s_budget, "search node limit");

  // construct
  auto* construct = app.add_subcommand("construct", "Emit a design");
  construct->require_subcommand(1);
  int h_order = 2;
  auto* had = construct->add_subcommand("hadamard", "Normalized Hadamard matrix");
  had->add_option("--order", h_order)->required();
  int hc_d = 1;
  auto* hcff = construct->add_subcommand("hadamard-cff",
                                         "(1,1;d)-CFF(4d-1,4d-1) incidence");
  hcff->add_option("--d", hc_d)->required();
  int o_t = 3, o_r = 1, o_w = 1;
  auto* orbit = construct->add_subcommand("orbit-cover",
                                          "Symmetric-group orbit cover");
  orbit->add_option("--t", o_t)->required();
  orbit->add_option("--r", o_r)->required();
  orbit->add_option("--w", o_w)->required();

  // convert
  auto* convert = app.add_subcommand("convert", "Translate between formats");
  convert->require_subcommand(1);
  std::string c2c_file;
  int c2c_r = 1, c2c_w = 1, c2c_d = 1;
  auto* c2c = convert->add_subcommand("cff-to-cover",
                                      "Incidence matrix to biclique cover");
  c2c->add_option("file", c2c_file)->required();
  c2c->add_option("--r", c2c_r)->required();
  c2c->add_option("--w", c2c_w)->required();
  c2c->add_option("--d", c2c_d)->default_val(1);
  std::string cov_file;
  auto* cov2 = convert->add_subcommand("cover-to-cff",
                                       "Biclique cover to incidence matrix");
  cov2->add_option("file", cov_file)->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "List combinatorial objects");
  enumerate->require_subcommand(1);
  int lp_i = 1, lp_j = 1;
  auto* lp = enumerate->add_subcommand("lattice-paths",
                                       "Paths strictly below y = (j/i) x");
  lp->add_option("--i", lp_i)->required();
  lp->add_option("--j", lp_j)->required();

  // setpairs
  auto* setpairs = app.add_subcommand("setpairs", "Set-pair family tools");
  setpairs->require_subcommand(1);
  std::string sp_file, sp_mode = "weak";
  auto* sp_check = setpairs->add_subcommand("check",
                                            "Cross-intersection properties");
  sp_check->add_option("file", sp_file)->required();
  sp_check->add_option("--mode", sp_mode, "weak | cross | rw:R,W");
  std::string spd_file;
  auto* sp_dual = setpairs->add_subcommand("dual", "Dual family");
  sp_dual->add_option("file", spd_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*bounds)
      return run_bounds(b_r, b_w, b_d, b_t,
                        c_opt->count() ? std::optional<double>(b_c)
                                       : std::nullopt,
                        b_format);
    if (*verify) return run_verify_cff(v_file, v_r, v_w, v_d);
    if (*solve) return run_solve_bc(s_family, s_graph, s_d, s_budget);
    if (*had) return run_construct_hadamard(h_order);
    if (*hcff) return run_construct_hadamard_cff(hc_d);
    if (*orbit) return run_construct_orbit(o_t, o_r, o_w);
    if (*c2c) return run_cff_to_cover(c2c_file, c2c_r, c2c_w, c2c_d);
    if (*cov2) return run_cover_to_cff(cov_file);
    if (*lp) return run_lattice_paths(lp_i, lp_j);
    if (*sp_check) return run_setpairs_check(sp_file, sp_mode);
    if (*sp_dual) return run_setpairs_dual(spd_file);
  } catch (const cffwb::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const cffwb::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
