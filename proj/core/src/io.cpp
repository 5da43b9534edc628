#include "spectra_chi/io.hpp"

#include <string>

#include "spectra_chi/error.hpp"

namespace spectra_chi::io {
namespace {

json entries_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix entries_from_json(const json& rows, std::size_t order, const std::string& where) {
  if (!rows.is_array() || rows.size() != order) {
    throw ParseError(where + ": expected " + std::to_string(order) + " rows");
  }
  ComplexMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != order) {
      throw ParseError(where + ": row " + std::to_string(i) + " must have " + std::to_string(order) +
                       " entries");
    }
    for (std::size_t j = 0; j < order; ++j) {
      const json& z = row[j];
      if (z.is_number()) {
        m(i, j) = z.get<double>();
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        m(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
      } else {
        throw ParseError(where + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") is not [re, im]");
      }
    }
  }
  return m;
}

std::size_t required_count(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long long>() < 0) {
    throw ParseError(std::string("missing or invalid \"") + key + "\"");
  }
  return doc[key].get<std::size_t>();
}

template <typename T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json matrix_to_json(const ComplexMatrix& m) {
  return {{"order", m.rows()}, {"entries", entries_to_json(m)}};
}

ComplexMatrix matrix_from_json(const json& doc) {
  const std::size_t order = required_count(doc, "order");
  if (!doc.contains("entries")) throw ParseError("matrix: missing \"entries\"");
  return entries_from_json(doc["entries"], order, "matrix");
}

HermitianMatrix hermitian_from_json(const json& doc) {
  try {
    return HermitianMatrix(matrix_from_json(doc));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

json quantum_coloring_to_json(const QuantumColoring& qc) {
  json projectors = json::array();
  for (Vertex v = 0; v < qc.vertices(); ++v) {
    json per_vertex = json::array();
    for (std::size_t k = 0; k < qc.colors(); ++k) per_vertex.push_back(entries_to_json(qc.projector(v, k)));
    projectors.push_back(std::move(per_vertex));
  }
  return {{"n", qc.vertices()}, {"c", qc.colors()}, {"d", qc.dimension()}, {"projectors", std::move(projectors)}};
}

QuantumColoring quantum_coloring_from_json(const json& doc) {
  const std::size_t n = required_count(doc, "n");
  const std::size_t c = required_count(doc, "c");
  const std::size_t d = required_count(doc, "d");
  if (!doc.contains("projectors") || !doc["projectors"].is_array() || doc["projectors"].size() != n) {
    throw ParseError("quantum coloring: \"projectors\" must list " + std::to_string(n) + " vertices");
  }
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(n * c);
  for (std::size_t v = 0; v < n; ++v) {
    const json& per_vertex = doc["projectors"][v];
    if (!per_vertex.is_array() || per_vertex.size() != c) {
      throw ParseError("quantum coloring: vertex " + std::to_string(v) + " must have " +
                       std::to_string(c) + " projectors");
    }
    for (std::size_t k = 0; k < c; ++k) {
      projectors.push_back(entries_from_json(
          per_vertex[k], d, "projector (" + std::to_string(v) + ", " + std::to_string(k) + ")"));
    }
  }
  try {
    return QuantumColoring(n, c, d, std::move(projectors));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("quantum coloring: ") + e.what());
  }
}

json coloring_to_json(const Coloring& col) { return {{"c", col.colors}, {"assignment", col.assignment}}; }

Coloring coloring_from_json(const json& doc) {
  Coloring col;
  col.colors = static_cast<int>(required_count(doc, "c"));
  if (!doc.contains("assignment") || !doc["assignment"].is_array()) {
    throw ParseError("coloring: missing \"assignment\" array");
  }
  for (const json& k : doc["assignment"]) {
    if (!k.is_number_integer()) throw ParseError("coloring: assignment entries must be integers");
    col.assignment.push_back(k.get<int>());
  }
  return col;
}

json report_to_json(const BoundReport& r) {
  json out{
      {"name", r.name},
      {"n", r.n},
      {"mu1", r.mu1},
      {"mu2", optional_json(r.mu2)},
      {"mun", r.mun},
      {"g", r.g},
      {"kappa", r.kappa},
      {"kappa_bound", r.kappa_bound},
      {"ratio_bound_real", r.ratio_bound_real},
      {"ratio_bound", r.ratio_bound},
      {"mult_bound_real", optional_json(r.mult_bound_real)},
      {"mult_bound", optional_json(r.mult_bound)},
      {"mult_ratio_real", optional_json(r.mult_ratio_real)},
      {"mu2_positive", r.mu2_positive},
      {"connected", r.connected},
      {"best_lower_bound", r.best_lower_bound},
  };
  if (!r.mult_reason.empty()) out["mult_undefined_reason"] = r.mult_reason;
  json parts = json::array();
  for (const auto& part : r.per_component) parts.push_back(report_to_json(part));
  out["per_component"] = std::move(parts);
  return out;
}

}  // namespace spectra_chi::io
