#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectra_chi/bounds.hpp"
#include "spectra_chi/chromatic.hpp"
#include "spectra_chi/quantum.hpp"

namespace spectra_chi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kInputError = 3,
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Families: kneser p t | cycle n | complete n | multipartite s1 s2 ... |
/// barbell m | clebsch | hoffman-singleton | omega n.
Graph generate(const std::string& family, const std::vector<int>& params,
               std::size_t max_vertices = kDefaultBlockCap);

int cmd_gen(const std::string& family, const std::vector<int>& params, std::size_t cap,
            std::ostream& out, std::ostream& err);

struct BoundsOptions {
  std::optional<SrgParameters> srg;
  std::optional<std::string> weights_json;  // matrix document applied to every graph
  bool json = false;
};

/// One row per graph6 line of `in` (or one row for options.srg). Lines that
/// fail to parse are reported on `err` with their line number; the others
/// are still processed and the exit code becomes kInputError.
int cmd_bounds(std::istream* in, const BoundsOptions& options, std::ostream& out, std::ostream& err);

int cmd_spectrum(std::istream& in, std::ostream& out, std::ostream& err);

int cmd_verify_coloring(const std::string& graph6, const std::string& coloring_json, bool quantum,
                        double tol, std::size_t cap, std::ostream& out, std::ostream& err);

int cmd_omega_coloring(int n, std::size_t cap, std::ostream& out, std::ostream& err);

struct ReportRow {
  std::string name;
  std::string source;  // "construction" or "parameters"
  BoundReport bounds;
  std::optional<int> chi_known;
  std::string chi_provenance;
  std::optional<int> chi_computed;
  std::optional<int> chi_q_witness;  // colors of a verified quantum coloring
  std::string status;                // tight / gap / unknown
};

struct PaperReportOptions {
  std::uint64_t budget = kDefaultNodeBudget;
  std::size_t chi_max_vertices = 28;  // exact search only on graphs this small
  bool json = false;
};

std::vector<ReportRow> paper_report_rows(const PaperReportOptions& options);

int cmd_paper_report(const PaperReportOptions& options, std::ostream& out, std::ostream& err);

/// Fixed-format helpers shared by the table writers.
std::string format_real(double x);
std::string csv_field(const std::string& text);

}  // namespace spectra_chi::cli
