#include "commands.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

#include "known_chi.hpp"
#include "spectra_chi/error.hpp"
#include "spectra_chi/generators.hpp"
#include "spectra_chi/graph6.hpp"
#include "spectra_chi/io.hpp"
#include "spectra_chi/spectral.hpp"

namespace spectra_chi::cli {
namespace {

void expect_params(const std::string& family, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw UsageError(family + " takes " + std::to_string(count) + " parameter(s), got " +
                     std::to_string(params.size()));
  }
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

std::string optional_real(const std::optional<double>& v) { return v ? format_real(*v) : ""; }

const char* kBoundsHeader = "name,n,mu1,mu2,mun,g,kappa_bound,ratio_bound,mult_bound,best_lower_bound,chi_known";

void write_bounds_csv(std::ostream& out, const BoundReport& r, const std::optional<int>& chi_known) {
  out << csv_field(r.name) << ',' << r.n << ',' << format_real(r.mu1) << ',' << optional_real(r.mu2)
      << ',' << format_real(r.mun) << ',' << r.g << ',' << r.kappa_bound << ',' << r.ratio_bound
      << ',' << optional_int(r.mult_bound) << ',' << r.best_lower_bound << ','
      << optional_int(chi_known);
}

std::string status_of(const ReportRow& row) {
  const int best = row.bounds.best_lower_bound;
  std::optional<int> upper = row.chi_known;
  if (row.chi_computed) upper = upper ? std::min(*upper, *row.chi_computed) : *row.chi_computed;
  if (row.chi_q_witness) upper = upper ? std::min(*upper, *row.chi_q_witness) : *row.chi_q_witness;
  if (!upper) return "unknown";
  return best == *upper ? "tight" : "gap";
}

}  // namespace

std::string format_real(double x) {
  if (std::abs(x) < 5e-7) x = 0.0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

Graph generate(const std::string& family, const std::vector<int>& params, std::size_t max_vertices) {
  try {
    if (family == "kneser") {
      expect_params(family, params, 2);
      return kneser(params[0], params[1]);
    }
    if (family == "cycle") {
      expect_params(family, params, 1);
      return cycle(params[0]);
    }
    if (family == "complete") {
      expect_params(family, params, 1);
      return complete(params[0]);
    }
    if (family == "multipartite") {
      if (params.empty()) throw UsageError("multipartite takes at least one part size");
      return complete_multipartite(params);
    }
    if (family == "barbell") {
      expect_params(family, params, 1);
      return barbell(params[0]);
    }
    if (family == "clebsch") {
      expect_params(family, params, 0);
      return clebsch();
    }
    if (family == "hoffman-singleton") {
      expect_params(family, params, 0);
      return hoffman_singleton();
    }
    if (family == "omega") {
      expect_params(family, params, 1);
      OrthogonalityOptions opts;
      opts.max_vertices = max_vertices;
      opts.notice = [](std::string_view msg) { std::cerr << msg << '\n'; };
      return orthogonality_graph(params[0], opts);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown family '" + family + "'");
}

int cmd_gen(const std::string& family, const std::vector<int>& params, std::size_t cap,
            std::ostream& out, std::ostream& err) {
  try {
    out << write_graph6(generate(family, params, cap)) << '\n';
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_bounds(std::istream* in, const BoundsOptions& options, std::ostream& out, std::ostream& err) {
  std::optional<HermitianMatrix> weights;
  try {
    if (options.weights_json) weights = io::hermitian_from_json(io::parse_json(*options.weights_json));
  } catch (const ParseError& e) {
    err << "error: weights: " << e.what() << '\n';
    return kInputError;
  }

  std::vector<std::pair<BoundReport, std::optional<int>>> rows;
  int status = kSuccess;
  if (options.srg) {
    try {
      const auto known = find_known_chi(*options.srg);
      rows.emplace_back(bounds_from_spectrum(srg_spectrum(*options.srg), to_string(*options.srg)),
                        known ? std::optional<int>(known->chi) : std::nullopt);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }
  }
  if (in != nullptr) {
    for (const auto& record : read_graph6_lines(*in)) {
      try {
        const Graph g = parse_graph6(record.text).with_name("line" + std::to_string(record.line_number));
        rows.emplace_back(bounds_report(g, weights), std::nullopt);
      } catch (const ParseError& e) {
        err << "line " << record.line_number << ": " << e.what() << '\n';
        status = kInputError;
      } catch (const std::invalid_argument& e) {
        err << "line " << record.line_number << ": " << e.what() << '\n';
        status = kInputError;
      }
    }
  }

  if (options.json) {
    io::json doc = io::json::array();
    for (const auto& [report, chi] : rows) {
      io::json row = io::report_to_json(report);
      row["chi_known"] = chi ? io::json(*chi) : io::json(nullptr);
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
  } else {
    out << kBoundsHeader << '\n';
    for (const auto& [report, chi] : rows) {
      write_bounds_csv(out, report, chi);
      out << '\n';
    }
  }
  return status;
}

int cmd_spectrum(std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kSuccess;
  for (const auto& record : read_graph6_lines(in)) {
    try {
      const Spectrum s = spectrum_of(parse_graph6(record.text));
      out << "line" << record.line_number << ':';
      for (const auto& group : s.groups()) {
        out << ' ' << format_real(group.value) << '^' << group.multiplicity;
      }
      out << '\n';
    } catch (const ParseError& e) {
      err << "line " << record.line_number << ": " << e.what() << '\n';
      status = kInputError;
    }
  }
  return status;
}

int cmd_verify_coloring(const std::string& graph6, const std::string& coloring_json, bool quantum,
                        double tol, std::size_t cap, std::ostream& out, std::ostream& err) {
  Graph g;
  QuantumColoring qc;
  try {
    std::istringstream lines(graph6);
    const auto records = read_graph6_lines(lines);
    if (records.empty()) throw ParseError("graph file has no graph6 line");
    g = parse_graph6(records.front().text);
    const io::json doc = io::parse_json(coloring_json);
    if (quantum) {
      qc = io::quantum_coloring_from_json(doc);
    } else {
      const Coloring col = io::coloring_from_json(doc);
      out << "classical_proper: " << (verify_coloring(g, col) ? "yes" : "no") << '\n';
      qc = classical_to_quantum(g, col);
    }
    if (qc.vertices() != g.order()) {
      throw ParseError("coloring covers " + std::to_string(qc.vertices()) + " vertices, graph has " +
                       std::to_string(g.order()));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  const VerificationReport r = verify(g, qc, tol);
  out << "n: " << qc.vertices() << "\nc: " << qc.colors() << "\nd: " << qc.dimension() << '\n';
  out << "projector_residual: " << r.projector_residual << '\n'
      << "completeness_residual: " << r.completeness_residual << '\n'
      << "orthogonality_residual: " << r.orthogonality_residual << '\n'
      << "pinching_residual: " << r.pinching_residual << '\n';
  if (qc.vertices() * qc.dimension() <= std::min<std::size_t>(cap, 64)) {
    out << "pinching_residual_dense: " << pinching_residual_dense(g, qc, cap) << '\n';
  }
  out << "tolerance: " << tol << '\n' << "result: " << (r.pass ? "pass" : "fail") << '\n';
  return r.pass ? kSuccess : kVerificationFailed;
}

int cmd_omega_coloring(int n, std::size_t cap, std::ostream& out, std::ostream& err) {
  try {
    out << io::quantum_coloring_to_json(omega_coloring(n, cap)).dump() << '\n';
    return kSuccess;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

std::vector<ReportRow> paper_report_rows(const PaperReportOptions& options) {
  std::vector<ReportRow> rows;
  const auto finish = [&](ReportRow row) {
    row.status = status_of(row);
    rows.push_back(std::move(row));
  };
  const auto from_parameters = [&](const std::string& name, const SrgParameters& p) {
    ReportRow row;
    row.name = name;
    row.source = "parameters " + to_string(p);
    row.bounds = bounds_from_spectrum(srg_spectrum(p), name);
    if (const auto known = find_known_chi(p)) {
      row.chi_known = known->chi;
      row.chi_provenance = known->provenance;
    }
    finish(std::move(row));
  };
  const auto from_graph = [&](const Graph& g, std::optional<KnownChi> known) {
    ReportRow row;
    row.name = g.name();
    row.source = "construction";
    row.bounds = bounds_report(g);
    if (known) {
      row.chi_known = known->chi;
      row.chi_provenance = known->provenance;
    }
    if (g.order() <= options.chi_max_vertices) {
      const ChromaticResult chi = chromatic_number(g, options.budget);
      if (chi.exact) row.chi_computed = chi.value();
    }
    return row;
  };

  finish(from_graph(clebsch(), find_known_chi("Clebsch")));
  from_parameters("GQ(2,4)", {27, 10, 1, 5});
  for (int p = 4; p <= 12; ++p) finish(from_graph(kneser(p, 2).with_name("Kneser(" + std::to_string(p) + ",2)"),
                                                  kneser_known_chi(p)));
  finish(from_graph(hoffman_singleton(), find_known_chi("Hoffman-Singleton")));
  from_parameters("Gewirtz", {56, 10, 0, 2});
  from_parameters("Higman-Sims", {100, 22, 0, 6});
  from_parameters("M22", {77, 16, 0, 4});
  from_parameters("SRG(15,8,4,4)", {15, 8, 4, 4});
  from_parameters("SRG(25,8,3,2)", {25, 8, 3, 2});
  from_parameters("SRG(21,10,3,6)", {21, 10, 3, 6});
  from_parameters("SRG(25,16,9,12)", {25, 16, 9, 12});
  from_parameters("SRG(49,12,5,2)", {49, 12, 5, 2});
  from_parameters("Schlafli", {27, 16, 10, 8});

  for (int n : {4, 8}) {
    OrthogonalityOptions opts;
    opts.notice = [](std::string_view) {};
    ReportRow row = from_graph(orthogonality_graph(n, opts), std::nullopt);
    const Graph omega = orthogonality_graph(n, opts);
    if (verify(omega, omega_coloring(n)).pass) row.chi_q_witness = n;
    finish(std::move(row));
  }

  for (int m : {4, 5}) finish(from_graph(barbell(m), std::nullopt));
  finish(from_graph(complete_multipartite({1, 2, 3}), std::nullopt));
  finish(from_graph(complete_multipartite({2, 3, 4, 5}), std::nullopt));
  finish(from_graph(cycle(5), std::nullopt));
  return rows;
}

int cmd_paper_report(const PaperReportOptions& options, std::ostream& out, std::ostream&) {
  const auto rows = paper_report_rows(options);
  if (options.json) {
    io::json doc = io::json::array();
    for (const auto& row : rows) {
      io::json j = io::report_to_json(row.bounds);
      j["source"] = row.source;
      j["chi_known"] = row.chi_known ? io::json(*row.chi_known) : io::json(nullptr);
      j["chi_provenance"] = row.chi_provenance;
      j["chi_computed"] = row.chi_computed ? io::json(*row.chi_computed) : io::json(nullptr);
      j["chi_q_witness"] = row.chi_q_witness ? io::json(*row.chi_q_witness) : io::json(nullptr);
      j["status"] = row.status;
      doc.push_back(std::move(j));
    }
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  out << kBoundsHeader << ",chi_computed,chi_q_witness,status\n";
  for (const auto& row : rows) {
    write_bounds_csv(out, row.bounds, row.chi_known);
    out << ',' << optional_int(row.chi_computed) << ',' << optional_int(row.chi_q_witness) << ','
        << row.status << '\n';
  }
  return kSuccess;
}

}  // namespace spectra_chi::cli
