#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs `body` against --out (when given) or stdout.
template <typename Body>
int with_output(const std::string& out_path, Body body) {
  if (out_path.empty()) return body(std::cout);
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return spectra_chi::cli::kUsageError;
  }
  return body(file);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spectra_chi::cli;

  CLI::App app{"Spectral lower bounds on chromatic and quantum chromatic numbers"};
  app.require_subcommand(1);

  std::string out_path;
  std::size_t cap = spectra_chi::kDefaultBlockCap;

  auto* gen = app.add_subcommand("gen", "Write a generated graph as graph6");
  std::string family;
  std::vector<int> params;
  gen->add_option("family", family,
                  "kneser | cycle | complete | multipartite | barbell | clebsch | hoffman-singleton | omega")
      ->required();
  gen->add_option("params", params, "Integer parameters of the family");
  gen->add_option("--out", out_path, "Output path");
  gen->add_option("--cap", cap, "Vertex cap for omega");

  auto* bounds = app.add_subcommand("bounds", "Spectral lower bounds for graph6 input or SRG parameters");
  std::string input;
  std::vector<int> srg;
  std::string weights_path;
  bool json = false;
  bounds->add_option("input", input, "graph6 file, one graph per line ('-' for stdin)");
  bounds->add_option("--srg", srg, "Strongly regular parameters n k lambda mu")->expected(4);
  bounds->add_option("--weights", weights_path, "Weight matrix JSON; bounds use W o A");
  bounds->add_flag("--json", json, "JSON instead of CSV");
  bounds->add_option("--out", out_path, "Output path");

  auto* spectrum = app.add_subcommand("spectrum", "Grouped adjacency spectra of graph6 input");
  spectrum->add_option("input", input, "graph6 file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify-coloring", "Check a classical or quantum coloring");
  std::string graph_path;
  std::string coloring_path;
  bool quantum = false;
  double tol = spectra_chi::kDefaultVerifyTolerance;
  verify->add_option("graph", graph_path, "graph6 file")->required();
  verify->add_option("coloring", coloring_path, "Coloring JSON")->required();
  verify->add_flag("--quantum", quantum, "Coloring file is a quantum coloring");
  verify->add_option("--tol", tol, "Residual tolerance");
  verify->add_option("--cap", cap, "Cap on n*d for dense cross-checks");

  auto* omega = app.add_subcommand("omega-coloring", "Write the n-color quantum coloring of Omega(n)");
  int omega_n = 0;
  omega->add_option("n", omega_n, "Even vector length")->required();
  omega->add_option("--out", out_path, "Output path");
  omega->add_option("--cap", cap, "Cap on 2^n * n");

  auto* report = app.add_subcommand("paper-report", "Bounds table for the named graph families");
  PaperReportOptions report_options;
  report->add_option("--budget", report_options.budget, "Branch-and-bound node budget");
  report->add_option("--chi-max-n", report_options.chi_max_vertices, "Largest graph for exact chi search");
  report->add_flag("--json", report_options.json, "JSON instead of CSV");
  report->add_option("--out", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen) {
      return with_output(out_path, [&](std::ostream& out) { return cmd_gen(family, params, cap, out, std::cerr); });
    }
    if (*bounds) {
      if (input.empty() && srg.empty()) {
        std::cerr << "error: bounds needs a graph6 input or --srg\n";
        return kUsageError;
      }
      BoundsOptions options;
      options.json = json;
      if (!srg.empty()) options.srg = spectra_chi::SrgParameters{srg[0], srg[1], srg[2], srg[3]};
      if (!weights_path.empty()) options.weights_json = slurp(weights_path);
      std::ifstream file;
      std::istream* in = nullptr;
      if (input == "-") {
        in = &std::cin;
      } else if (!input.empty()) {
        file.open(input);
        if (!file) {
          std::cerr << "error: cannot open " << input << '\n';
          return kInputError;
        }
        in = &file;
      }
      return with_output(out_path, [&](std::ostream& out) { return cmd_bounds(in, options, out, std::cerr); });
    }
    if (*spectrum) {
      if (input == "-") return cmd_spectrum(std::cin, std::cout, std::cerr);
      std::istringstream text(slurp(input));
      return cmd_spectrum(text, std::cout, std::cerr);
    }
    if (*verify) {
      return cmd_verify_coloring(slurp(graph_path), slurp(coloring_path), quantum, tol, cap, std::cout,
                                 std::cerr);
    }
    if (*omega) {
      return with_output(out_path, [&](std::ostream& out) { return cmd_omega_coloring(omega_n, cap, out, std::cerr); });
    }
    if (*report) {
      return with_output(out_path, [&](std::ostream& out) { return cmd_paper_report(report_options, out, std::cerr); });
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsageError;
}
