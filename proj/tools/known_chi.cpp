#include "known_chi.hpp"

namespace spectra_chi::cli {

const std::vector<KnownChi>& known_chi_table() {
  static const std::vector<KnownChi> table{
      {"Clebsch", SrgParameters{16, 5, 0, 2}, 4, "literature; also certified by exact search"},
      {"GQ(2,4)", SrgParameters{27, 10, 1, 5}, 6, "literature (collinearity graph of GQ(2,4))"},
      {"Hoffman-Singleton", SrgParameters{50, 7, 0, 1}, 4, "literature"},
      {"Gewirtz", SrgParameters{56, 10, 0, 2}, 4, "literature"},
      {"Higman-Sims", SrgParameters{100, 22, 0, 6}, 6, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"M22", SrgParameters{77, 16, 0, 4}, 5, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"SRG(15,8,4,4)", SrgParameters{15, 8, 4, 4}, 5, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"SRG(25,8,3,2)", SrgParameters{25, 8, 3, 2}, 5, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"SRG(21,10,3,6)", SrgParameters{21, 10, 3, 6}, 5, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"SRG(25,16,9,12)", SrgParameters{25, 16, 9, 12}, 5, "Fiala-Haemers, 5-chromatic strongly regular graphs"},
      {"SRG(49,12,5,2)", SrgParameters{49, 12, 5, 2}, 7, "Haemers-Tonchev, Hoffman colorings of SRGs"},
      {"Schlafli", SrgParameters{27, 16, 10, 8}, 9, "Haemers-Tonchev, Hoffman colorings of SRGs"},
  };
  return table;
}

std::optional<KnownChi> find_known_chi(const SrgParameters& p) {
  for (const auto& row : known_chi_table()) {
    if (row.srg && row.srg->n == p.n && row.srg->k == p.k && row.srg->lambda == p.lambda &&
        row.srg->mu == p.mu) {
      return row;
    }
  }
  return std::nullopt;
}

std::optional<KnownChi> find_known_chi(const std::string& name) {
  for (const auto& row : known_chi_table()) {
    if (row.name == name) return row;
  }
  return std::nullopt;
}

KnownChi kneser_known_chi(int p) {
  return {"Kneser(" + std::to_string(p) + ",2)", kneser_pair_parameters(p), p - 2,
          "Lovasz, chi(KG(p,2)) = p-2"};
}

}  // namespace spectra_chi::cli
