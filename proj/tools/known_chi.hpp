#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra_chi/bounds.hpp"

namespace spectra_chi::cli {

/// A chromatic number taken from the literature rather than computed here.
struct KnownChi {
  std::string name;
  std::optional<SrgParameters> srg;
  int chi = 0;
  std::string provenance;
};

const std::vector<KnownChi>& known_chi_table();

std::optional<KnownChi> find_known_chi(const SrgParameters& p);
std::optional<KnownChi> find_known_chi(const std::string& name);

/// chi(KG(p, 2)) = p - 2 (Lovasz).
KnownChi kneser_known_chi(int p);

}  // namespace spectra_chi::cli
