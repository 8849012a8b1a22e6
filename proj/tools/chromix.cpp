// chromix: exact weak/strong chromatic polynomials of mixed graphs,
// order polynomials of labeled posets, and reciprocity verification.
//
// Exit codes: 0 success/verified, 1 verification failed, 2 input or usage
// error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromix/chromix.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw chromix::Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

chromix::MixedGraph load_graph(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  return format == "dot" ? chromix::parse_dot_subset(text)
                         : chromix::parse_lines(text);
}

ordered_json polynomial_json(const chromix::Polynomial& p) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(chromix::to_string(c));
  return coeffs;
}

ordered_json report_json(const chromix::VerificationReport& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({row.k, chromix::to_string(row.lhs),
                    chromix::to_string(row.rhs), row.pass});
  return {{"subject", r.subject},
          {"theorem", r.theorem},
          {"rows", rows},
          {"verdict", r.verdict}};
}

void print_report_rows(const chromix::VerificationReport& r) {
  for (const auto& row : r.rows)
    std::cout << "k=" << row.k << ": lhs=" << chromix::to_string(row.lhs)
              << " rhs=" << chromix::to_string(row.rhs)
              << (row.pass ? " pass" : " FAIL") << "\n";
}

struct PolyOptions {
  std::string file;
  std::string format = "lines";
  bool strong = false;
  bool json = false;
};

int run_poly(const PolyOptions& opt) {
  chromix::MixedGraph g = load_graph(opt.file, opt.format);
  chromix::ChromaticEngine engine;
  chromix::Polynomial chi = opt.strong ? engine.strong(g) : engine.weak(g);
  const long kmax = static_cast<long>(g.vertex_count()) + 1;
  if (opt.json) {
    ordered_json rows = ordered_json::array();
    for (long k = 1; k <= kmax; ++k)
      rows.push_back({k, chromix::to_string(chi.at(k))});
    ordered_json out = {{"command", "poly"},
                        {"input", opt.file},
                        {"polynomial", polynomial_json(chi)},
                        {"rows", rows}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << chromix::to_display_string(chi) << "\n";
  for (long k = 1; k <= kmax; ++k)
    std::cout << "k=" << k << ": " << chromix::to_string(chi.at(k)) << "\n";
  return 0;
}

struct EvalOptions {
  std::string file;
  std::string format = "lines";
  long k = 0;
  bool strong = false;
  bool signed_value = false;
};

int run_eval(const EvalOptions& opt) {
  chromix::MixedGraph g = load_graph(opt.file, opt.format);
  chromix::ChromaticEngine engine;
  chromix::Polynomial chi = opt.strong ? engine.strong(g) : engine.weak(g);
  std::cout << chromix::to_string(chi.at(opt.k)) << "\n";
  if (opt.signed_value) {
    const int sign = g.vertex_count() % 2 == 0 ? 1 : -1;
    std::cout << chromix::to_string(chromix::Rational(sign) * chi.at(opt.k))
              << "\n";
  }
  return 0;
}

struct OrientationsOptions {
  std::string file;
  std::string format = "lines";
  bool acyclic_only = false;
  long k = 0;
  bool with_k = false;
};

int run_orientations(const OrientationsOptions& opt) {
  chromix::MixedGraph g = load_graph(opt.file, opt.format);
  long index = 0;
  chromix::for_each_orientation(g, [&](const chromix::Orientation& o) {
    ++index;
    const bool acyclic = chromix::is_acyclic_orientation(o);
    if (opt.acyclic_only && !acyclic) return;
    std::cout << index << ":";
    for (const auto& p : o.directed_pairs())
      std::cout << " " << p.from
                << (p.origin == chromix::PairOrigin::edge_born ? "~>" : "->")
                << p.to;
    std::cout << (acyclic ? " [acyclic]" : " [cyclic]");
    if (opt.with_k)
      std::cout << " intercompatible(k=" << opt.k
                << ")=" << chromix::count_intercompatible(g, o, opt.k);
    std::cout << "\n";
  });
  return 0;
}

struct ReciprocityOptions {
  std::string file;
  std::string format = "lines";
  int kmax = 3;
  bool strong = false;
  bool force = false;
};

int run_reciprocity(const ReciprocityOptions& opt) {
  chromix::MixedGraph g = load_graph(opt.file, opt.format);
  chromix::ChromaticEngine engine;
  chromix::VerificationReport report =
      opt.strong ? engine.verify_strong_reciprocity(g, opt.kmax)
                 : engine.verify_weak_reciprocity(g, opt.kmax, opt.force);
  std::cout << "theorem: " << report.theorem << "\n";
  std::cout << "subject: " << report.subject << "\n";
  print_report_rows(report);
  std::cout << "verdict: " << (report.verdict ? "PASS" : "FAIL") << "\n";
  return report.verdict ? 0 : 1;
}

struct OrderPolyOptions {
  std::string file;
};

int run_order_poly(const OrderPolyOptions& opt) {
  chromix::PosetDocument doc = chromix::parse_poset(read_input(opt.file));
  chromix::Polynomial direct = chromix::order_polynomial(doc.poset, doc.labeling);
  chromix::Labeling complement = chromix::complementary_labeling(doc.labeling);
  chromix::Polynomial complemented = chromix::order_polynomial(doc.poset, complement);
  std::cout << "labeling:";
  for (std::size_t i = 0; i < doc.poset.size(); ++i)
    std::cout << " " << doc.poset.elements()[i] << "=" << doc.labeling.label(i);
  std::cout << "\n";
  std::cout << "order polynomial: " << chromix::to_display_string(direct) << "\n";
  std::cout << "complementary:    " << chromix::to_display_string(complemented)
            << "\n";
  const int kmax = static_cast<int>(doc.poset.size()) + 1;
  chromix::VerificationReport report =
      chromix::verify_stanley_order(doc.poset, doc.labeling, kmax);
  print_report_rows(report);
  std::cout << "verdict: " << (report.verdict ? "PASS" : "FAIL") << "\n";
  return report.verdict ? 0 : 1;
}

struct VerifyOptions {
  std::string theorem;
  int n = 3;
  int kmax = 3;
  bool json = false;
  bool exhaustive = false;  // sweeps are always exhaustive; kept as the mode name
};

int run_verify(const VerifyOptions& opt) {
  chromix::ChromaticEngine engine;
  chromix::SweepSummary summary =
      engine.exhaustive_verify(opt.n, opt.kmax, chromix::parse_theorem(opt.theorem));
  if (opt.json) {
    ordered_json failures = ordered_json::array();
    for (const auto& f : summary.failures) failures.push_back(report_json(f));
    ordered_json out = {
        {"command", "verify"},
        {"input", "theorem=" + summary.theorem + " n=" + std::to_string(summary.n) +
                      " kmax=" + std::to_string(summary.kmax)},
        {"rows",
         {{"universe", std::to_string(summary.universe)},
          {"checked", std::to_string(summary.checked)},
          {"passed", std::to_string(summary.passed)}}},
        {"verdict", summary.all_passed()},
        {"failures", failures}};
    std::cout << out.dump(2) << "\n";
    return summary.all_passed() ? 0 : 1;
  }
  std::cout << "theorem: " << summary.theorem << " n=" << summary.n
            << " kmax=" << summary.kmax << "\n";
  std::cout << "universe: " << summary.universe << "\n";
  std::cout << "checked: " << summary.checked << "\n";
  std::cout << "passed: " << summary.passed << "\n";
  std::cout << "failures: " << summary.failures.size() << "\n";
  for (const auto& f : summary.failures) {
    std::cout << "--- failing subject: " << f.subject << "\n";
    print_report_rows(f);
  }
  std::cout << "verdict: " << (summary.all_passed() ? "PASS" : "FAIL") << "\n";
  return summary.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact weak/strong chromatic polynomials of mixed graphs"};
  app.require_subcommand(1);

  PolyOptions poly_opt;
  auto* poly = app.add_subcommand("poly", "chromatic polynomial of a graph");
  poly->add_option("file", poly_opt.file, "graph file, or - for stdin")->required();
  poly->add_flag("--strong", poly_opt.strong, "strong instead of weak semantics");
  poly->add_option("--format", poly_opt.format, "input format")
      ->check(CLI::IsMember({"lines", "dot"}));
  poly->add_flag("--json", poly_opt.json, "emit JSON");

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "evaluate the chromatic polynomial");
  eval->add_option("file", eval_opt.file, "graph file, or - for stdin")->required();
  eval->add_option("-k", eval_opt.k, "argument (negative allowed)")->required();
  eval->add_flag("--strong", eval_opt.strong, "strong instead of weak semantics");
  eval->add_flag("--signed", eval_opt.signed_value,
                 "also print (-1)^|V| times the value");
  eval->add_option("--format", eval_opt.format, "input format")
      ->check(CLI::IsMember({"lines", "dot"}));

  OrientationsOptions orient_opt;
  auto* orient = app.add_subcommand("orientations", "list the orientations");
  orient->add_option("file", orient_opt.file, "graph file, or - for stdin")
      ->required();
  orient->add_flag("--acyclic-only", orient_opt.acyclic_only,
                   "only acyclic orientations");
  auto* orient_k = orient->add_option("-k", orient_opt.k,
                                      "add intercompatible-coloring counts");
  orient->add_option("--format", orient_opt.format, "input format")
      ->check(CLI::IsMember({"lines", "dot"}));

  ReciprocityOptions rec_opt;
  auto* rec = app.add_subcommand("reciprocity",
                                 "check reciprocity at negative arguments");
  rec->add_option("file", rec_opt.file, "graph file, or - for stdin")->required();
  rec->add_option("--kmax", rec_opt.kmax, "check k = 1..kmax (default 3)");
  rec->add_flag("--strong", rec_opt.strong, "strong reciprocity");
  rec->add_flag("--force", rec_opt.force,
                "run the weak check even on a cyclic mixed graph");
  rec->add_option("--format", rec_opt.format, "input format")
      ->check(CLI::IsMember({"lines", "dot"}));

  OrderPolyOptions order_opt;
  auto* order = app.add_subcommand("order-poly",
                                   "order polynomials of a labeled poset");
  order->add_option("file", order_opt.file, "poset file, or - for stdin")
      ->required();

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "exhaustive sweep of one theorem");
  verify->add_option("--theorem", verify_opt.theorem,
                     "weak | strong | stanley-graph | stanley-order | edge-dc | "
                     "arc-identity | strongly-connected-collapse | "
                     "scc-contraction | orientation-sum | orientation-labeling")
      ->required();
  verify->add_option("-n", verify_opt.n, "vertex/element count (1..4)");
  verify->add_option("--kmax", verify_opt.kmax, "check k = 1..kmax (default 3)");
  verify->add_flag("--json", verify_opt.json, "emit JSON");
  verify->add_flag("--exhaustive", verify_opt.exhaustive,
                   "sweep the whole labeled universe (the default behavior)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    orient_opt.with_k = orient_k->count() > 0;
    if (poly->parsed()) return run_poly(poly_opt);
    if (eval->parsed()) return run_eval(eval_opt);
    if (orient->parsed()) return run_orientations(orient_opt);
    if (rec->parsed()) return run_reciprocity(rec_opt);
    if (order->parsed()) return run_order_poly(order_opt);
    if (verify->parsed()) return run_verify(verify_opt);
  } catch (const chromix::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
