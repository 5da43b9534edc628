#pragma once

#include <nlohmann/json.hpp>

#include "spectra_chi/bounds.hpp"
#include "spectra_chi/chromatic.hpp"
#include "spectra_chi/matrix.hpp"
#include "spectra_chi/quantum.hpp"

// JSON document formats. Complex numbers are [re, im] pairs and matrices are
// row-major nested arrays. Readers throw ParseError on malformed documents.

namespace spectra_chi::io {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m);
/// {"order": n, "entries": [[[re, im], ...], ...]}
ComplexMatrix matrix_from_json(const json& doc);

HermitianMatrix hermitian_from_json(const json& doc);

/// {"n": .., "c": .., "d": .., "projectors": [[matrix, ...], ...]} with
/// projectors[v][k] a d x d entries array.
json quantum_coloring_to_json(const QuantumColoring& qc);
QuantumColoring quantum_coloring_from_json(const json& doc);

/// {"c": .., "assignment": [k_0, ..., k_{n-1}]}
json coloring_to_json(const Coloring& col);
Coloring coloring_from_json(const json& doc);

json report_to_json(const BoundReport& r);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse_json(const std::string& text);

}  // namespace spectra_chi::io
