#include "wog/cli.hpp"

#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "wog/error.hpp"
#include "wog/graph.hpp"
#include "wog/graver.hpp"
#include "wog/groebner.hpp"
#include "wog/io.hpp"
#include "wog/markov.hpp"
#include "wog/robustness.hpp"

namespace wog::cli {

using nlohmann::json;

const std::vector<std::string> &commands() {
  static const std::vector<std::string> names{"cycles",    "balance",       "graver",
                                              "circuits",  "groebner",      "markov",
                                              "indispensable", "robustness", "shared-path-report"};
  return names;
}

std::variant<AnalysisRequest, int> parse_arguments(int argc, const char *const *argv,
                                                   std::ostream &out, std::ostream &err) {
  AnalysisRequest req;
  CLI::App app{"Toric ideal invariants of vertex-weighted oriented graphs", "wog-toric"};
  app.add_option("command", req.command, "What to compute")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("graph", req.input, "Graph JSON file")->required();
  app.add_option("--order", req.order, "Degree-lex variable priority, highest first")
      ->delimiter(',');
  app.add_option("--cap-fiber", req.cap_fiber, "Largest fiber to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-graver", req.cap_graver, "Largest Graver completion working set")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", req.json, "Emit JSON");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  return req;
}

namespace {

std::string vec_string(const IntVec &v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i)
    s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> vertex_ids(const WeightedOrientedGraph &g, const std::vector<std::size_t> &vs) {
  std::vector<std::string> out;
  for (auto v : vs)
    out.push_back(g.vertices()[v].id);
  return out;
}

std::vector<std::string> edge_ids(const WeightedOrientedGraph &g, const std::vector<std::size_t> &es) {
  std::vector<std::string> out;
  for (auto e : es)
    out.push_back(g.edges()[e].id);
  return out;
}

TermOrder order_from_request(const AnalysisRequest &req, const WeightedOrientedGraph &g) {
  std::vector<std::size_t> priority;
  for (const auto &id : req.order) {
    auto e = g.find_edge(id);
    if (!e)
      throw InputError("--order names unknown edge '" + id + "'");
    priority.push_back(*e);
  }
  return TermOrder::with_priority(priority, g.num_edges()).with_grading(column_degrees(incidence_matrix(g)));
}

void print_basis(std::ostream &out, const BasisSet &b, const std::vector<std::string> &labels) {
  for (const auto &m : b.elements)
    out << binomial_string(m, labels) << '\n';
}

void print_verdicts(std::ostream &out, const RobustnessReport &r, const std::string &prefix) {
  auto line = [&](const char *name, const PredicateVerdict &p) {
    out << prefix << name << ": " << to_string(p.value) << " (" << to_string(p.method)
        << (p.certified ? "" : ", from universal Groebner bounds") << ")\n";
  };
  line("strongly_robust", r.strongly);
  line("robust", r.robust);
  line("generalized_robust", r.generalized);
  line("weakly_robust", r.weakly);
  for (const auto &w : r.witnesses)
    out << prefix << "witness: " << w << '\n';
}

std::string pairs_string(const SharedPathGraverReport::Pairs &all, const SharedPathGraverReport::Pairs &minimal) {
  std::vector<std::string> parts;
  for (const auto &p : all) {
    bool is_min = std::find(minimal.begin(), minimal.end(), p) != minimal.end();
    parts.push_back("(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")" +
                    (is_min ? "*" : ""));
  }
  return "{" + join(parts, ", ") + "}";
}

std::string mpz_list(const std::vector<mpz_class> &v) {
  std::vector<std::string> parts;
  for (const auto &x : v)
    parts.push_back(x.get_str());
  return join(parts, " ");
}

void run_command(const AnalysisRequest &req, std::ostream &out) {
  WeightedOrientedGraph g = read_graph_file(req.input);
  const auto labels = g.edge_labels();
  IntegerMatrix a = incidence_matrix(g);
  EnumerationLimits fiber_limits;
  fiber_limits.max_points = req.cap_fiber;
  GraverLimits graver_limits;
  graver_limits.max_elements = req.cap_graver;
  const std::string &cmd = req.command;

  if (cmd == "cycles" || cmd == "balance") {
    auto cycles = enumerate_cycles(g);
    json list = json::array();
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto &c = cycles[i];
      auto [sources, sinks] = cycle_sources_sinks(c);
      mpz_class det = determinant(cycle_incidence_matrix(c));
      if (req.json) {
        json item{{"vertices", vertex_ids(g, c.vertices)}, {"edges", edge_ids(g, c.edges)}};
        if (cmd == "balance") {
          item["determinant"] = det.get_str();
          item["balanced"] = det == 0;
          item["sources"] = vertex_ids(g, sources);
          item["sinks"] = vertex_ids(g, sinks);
        }
        list.push_back(item);
      } else if (cmd == "cycles") {
        out << "cycle " << i + 1 << ": vertices " << join(vertex_ids(g, c.vertices), " ")
            << "; edges " << join(edge_ids(g, c.edges), " ") << '\n';
      } else {
        auto names = [&](const std::vector<std::size_t> &vs) {
          return vs.empty() ? std::string("-") : join(vertex_ids(g, vs), " ");
        };
        out << "cycle " << i + 1 << ": edges " << join(edge_ids(g, c.edges), " ") << "; det "
            << det.get_str() << "; " << (det == 0 ? "balanced" : "unbalanced") << "; sources "
            << names(sources) << "; sinks " << names(sinks) << '\n';
      }
    }
    if (req.json)
      out << json{{"cycles", list}}.dump(2) << '\n';
    return;
  }

  if (cmd == "shared-path-report") {
    auto d = shared_path_decomposition(g);
    if (!d)
      throw InputError("graph is not a union of cycles sharing a path");
    auto r = shared_path_two_balanced_graver(g, *d);
    if (req.json) {
      out << shared_path_report_to_json(r, g).dump(2) << '\n';
      return;
    }
    out << "edge order: " << join(edge_ids(g, r.edge_order), " ") << '\n';
    out << "m = " << r.m << ", n = " << r.n << ", k = " << r.k << '\n';
    out << "minors A(C_m)[1|i]: " << mpz_list(r.minors_a) << '\n';
    out << "minors A(C_n)[1|i]: " << mpz_list(r.minors_b) << '\n';
    out << "minors A(C)[1|i]: " << mpz_list(r.minors_c) << '\n';
    out << "d_a = " << r.d_a.get_str() << ", d_b = " << r.d_b.get_str() << ", d_c = " << r.d_c.get_str() << '\n';
    out << "a = " << vec_string(r.a) << '\n';
    out << "b = " << vec_string(r.b) << '\n';
    out << "c = " << vec_string(r.c) << '\n';
    for (int i = 0; i < 6; ++i)
      out << "d_" << i + 1 << " = " << r.d[i] << (i == 5 ? "\n" : ", ");
    out << "E_1 = " << pairs_string(r.e1, r.e1_min) << '\n';
    out << "E_2 = " << pairs_string(r.e2, r.e2_min) << '\n';
    out << "E_3 = " << pairs_string(r.e3, r.e3_min) << '\n';
    const std::vector<IntVec> *sets[] = {&r.s1, &r.s2, &r.s3};
    for (int i = 0; i < 3; ++i)
      for (const auto &v : *sets[i])
        out << "S_" << i + 1 << ": " << vec_string(v) << '\n';
    out << "Gr_D = U_D (" << r.basis.size() << " elements):\n";
    print_basis(out, r.basis, labels);
    return;
  }

  if (cmd == "circuits") {
    auto c = circuits(a);
    if (req.json)
      out << basis_set_to_json(c, a, labels).dump(2) << '\n';
    else
      print_basis(out, c, labels);
    return;
  }

  BasisSet graver = graver_basis(a, graver_limits);
  if (cmd == "graver") {
    if (req.json)
      out << basis_set_to_json(graver, a, labels).dump(2) << '\n';
    else
      print_basis(out, graver, labels);
    return;
  }

  if (cmd == "groebner") {
    TermOrder order = order_from_request(req, g);
    BasisSet gb = reduce_universal(graver, order).as_basis_set();
    if (req.json) {
      out << json{{"order", term_order_to_json(order, labels)},
                  {"basis", basis_set_to_json(gb, a, labels)}}
                 .dump(2)
          << '\n';
    } else {
      std::vector<std::string> names;
      for (auto i : order.priority)
        names.push_back(labels[i]);
      out << "# reduced Groebner basis, deglex " << join(names, " > ") << ", deg e = 1 + w(head)\n";
      print_basis(out, gb, labels);
    }
    return;
  }

  MarkovAnalysis markov = analyze_markov(a, graver, fiber_limits);
  if (cmd == "markov" || cmd == "indispensable") {
    const BasisSet &b = cmd == "markov" ? markov.universal : markov.indispensable;
    if (req.json)
      out << basis_set_to_json(b, a, labels).dump(2) << '\n';
    else
      print_basis(out, b, labels);
    return;
  }

  // robustness
  UniversalGb u = universal_gb(a, graver, structural_hints(g));
  RobustnessReport report = computational_report(markov, u, labels);
  std::optional<RobustnessReport> structural;
  std::string structural_status = "not applicable";
  if (!shared_path_decompositions(g).empty()) {
    structural = structural_classification(g);
    structural_status = structural ? "applied" : "refused (more than two unbalanced cycles)";
  }
  if (req.json) {
    json j{{"computational", report_to_json(report)}, {"structural_status", structural_status}};
    j["structural"] = structural ? report_to_json(*structural) : json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  print_verdicts(out, report, "");
  out << "universal_groebner: " << report.certification << '\n';
  out << "structural: " << structural_status << '\n';
  if (structural)
    print_verdicts(out, *structural, "structural.");
}

} // namespace

int run(const AnalysisRequest &request, std::ostream &out, std::ostream &err) {
  try {
    std::ostringstream buffer;
    run_command(request, buffer);
    out << buffer.str();
    return 0;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const CapExceeded &e) {
    err << "resource cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  auto parsed = parse_arguments(argc, argv, out, err);
  if (auto *code = std::get_if<int>(&parsed))
    return *code;
  return run(std::get<AnalysisRequest>(parsed), out, err);
}

} // namespace wog::cli
