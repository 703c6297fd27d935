#ifndef BMLAB_KERNELS_HPP
#define BMLAB_KERNELS_HPP

// Data-parallel poset kernels. Each entry point has a serial twin in
// bmlab::reference that the tests and the benchmark compare against.

#include <cstddef>
#include <string>
#include <vector>

#include "bmlab/poset.hpp"

namespace bmlab {

struct DenseScan {
  Cardinal value = Cardinal::finite(2);
  Mask dense = 0;          // a minimiser, lexicographically least
  std::size_t dense_subsets = 0;
};

/// Minimum Noetherian type over all 2^n subsets that are dense (n <= 20).
DenseScan exhaustive_min_noetherian(const FinitePoset& P);

struct SurveyReport {
  std::size_t n = 0;
  std::size_t posets = 0;
  std::size_t separative = 0;
  std::size_t pnt_two = 0;             // pi_noetherian_type == 2
  std::size_t nabla_holds = 0;         // pnt <= S
  std::size_t minimal_dense_nt2 = 0;   // minimal elements dense with nt 2
  std::size_t oracle_checked = 0;
  std::size_t oracle_agree = 0;        // exhaustive scan minimum == 2
  std::size_t violations = 0;
  std::vector<std::string> notes;      // first few violation descriptions

  friend bool operator==(const SurveyReport&, const SurveyReport&) = default;
};

/// Checks every labeled poset on n elements (1..6). With `oracle`, each is
/// also cross-checked by the exhaustive dense-subset scan.
SurveyReport survey_posets(std::size_t n, bool oracle);

namespace reference {

DenseScan exhaustive_min_noetherian(const FinitePoset& P);
SurveyReport survey_posets(std::size_t n, bool oracle);

}  // namespace reference

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace bmlab

#endif  // BMLAB_KERNELS_HPP
