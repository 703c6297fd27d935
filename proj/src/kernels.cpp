#include "bmlab/kernels.hpp"

#include <algorithm>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bmlab/poset_enum.hpp"

namespace bmlab {

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

struct ScanBest {
  int fiber = 65;
  Mask dense = 0;
  std::size_t count = 0;

  void offer(int f, Mask d) {
    ++count;
    if (f < fiber || (f == fiber && lex_less(d, dense))) {
      fiber = f;
      dense = d;
    }
  }
  void merge(const ScanBest& o) {
    count += o.count;
    if (o.fiber < fiber || (o.fiber == fiber && lex_less(o.dense, dense))) {
      fiber = o.fiber;
      dense = o.dense;
    }
  }
};

// Max fiber of D, or -1 if D is not dense.
inline int fiber_if_dense(std::span<const Mask> below, std::span<const Mask> above, Mask D) {
  int fiber = 0;
  for (std::size_t p = 0; p < below.size(); ++p) {
    if ((below[p] & D) == 0) return -1;
    fiber = std::max(fiber, popcount(above[p] & D));
  }
  return fiber;
}

void check_scan_size(const FinitePoset& P) {
  if (P.size() == 0) throw Error("empty poset");
  if (P.size() > kExhaustiveLimit) throw Error("exhaustive dense-subset scan refuses posets above 20 elements");
}

DenseScan to_scan(const ScanBest& best) {
  return {Cardinal::finite(static_cast<std::uint64_t>(best.fiber) + 1), best.dense, best.count};
}

struct Rows {
  std::vector<Mask> below, above;
  explicit Rows(const FinitePoset& P) {
    for (std::size_t i = 0; i < P.size(); ++i) {
      below.push_back(P.below(i));
      above.push_back(P.above(i));
    }
  }
};

// One poset's worth of survey checks; returns a note on violation.
std::optional<std::string> survey_one(const FinitePoset& P, bool oracle, SurveyReport& r,
                                      DenseScan (*scan)(const FinitePoset&)) {
  ++r.posets;
  if (is_separative(P).separative) ++r.separative;
  std::optional<std::string> note;
  const auto two = Cardinal::finite(2);

  const auto pnt = pi_noetherian_type(P, false);
  if (pnt.value == two) ++r.pnt_two;
  else note = "pnt=" + pnt.value.to_string();

  const auto nabla = check_nabla(P);
  if (nabla.holds) ++r.nabla_holds;
  else note = "nabla fails: pnt=" + nabla.pi_noetherian.to_string() + " S=" + nabla.souslin.to_string();

  const Mask minimal = P.minimal_elements();
  if (is_dense(P, minimal) && noetherian_type(P, minimal) == two) ++r.minimal_dense_nt2;
  else note = "minimal elements not dense with nt 2";

  if (oracle) {
    ++r.oracle_checked;
    if (scan(P).value == two) ++r.oracle_agree;
    else note = "exhaustive scan minimum differs from 2";
  }
  if (note) ++r.violations;
  return note;
}

void merge_report(SurveyReport& into, const SurveyReport& part) {
  into.posets += part.posets;
  into.separative += part.separative;
  into.pnt_two += part.pnt_two;
  into.nabla_holds += part.nabla_holds;
  into.minimal_dense_nt2 += part.minimal_dense_nt2;
  into.oracle_checked += part.oracle_checked;
  into.oracle_agree += part.oracle_agree;
  into.violations += part.violations;
}

constexpr std::size_t kMaxNotes = 8;

}  // namespace

DenseScan exhaustive_min_noetherian(const FinitePoset& P) {
  check_scan_size(P);
  const Rows rows(P);
  const std::int64_t limit = std::int64_t{1} << P.size();
  ScanBest best;
#pragma omp parallel
  {
    ScanBest local;
#pragma omp for schedule(static)
    for (std::int64_t m = 1; m < limit; ++m) {
      const int f = fiber_if_dense(rows.below, rows.above, static_cast<Mask>(m));
      if (f >= 0) local.offer(f, static_cast<Mask>(m));
    }
#pragma omp critical(bmlab_scan_merge)
    best.merge(local);
  }
  return to_scan(best);
}

SurveyReport survey_posets(std::size_t n, bool oracle) {
  const auto posets = enumerate_posets(n);
  SurveyReport total;
  total.n = n;
  std::vector<std::optional<std::string>> notes(posets.size());
  const auto count = static_cast<std::int64_t>(posets.size());
#pragma omp parallel
  {
    SurveyReport local;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        notes[static_cast<std::size_t>(i)] =
            survey_one(posets[static_cast<std::size_t>(i)], oracle, local, &reference::exhaustive_min_noetherian);
      } catch (const std::exception& e) {
        ++local.violations;
        notes[static_cast<std::size_t>(i)] = std::string("exception: ") + e.what();
      }
    }
#pragma omp critical(bmlab_survey_merge)
    merge_report(total, local);
  }
  for (std::size_t i = 0; i < notes.size() && total.notes.size() < kMaxNotes; ++i)
    if (notes[i]) total.notes.push_back("poset #" + std::to_string(i) + ": " + *notes[i]);
  return total;
}

namespace reference {

DenseScan exhaustive_min_noetherian(const FinitePoset& P) {
  check_scan_size(P);
  const Rows rows(P);
  const Mask limit = Mask{1} << P.size();
  ScanBest best;
  for (Mask m = 1; m < limit; ++m) {
    const int f = fiber_if_dense(rows.below, rows.above, m);
    if (f >= 0) best.offer(f, m);
  }
  return to_scan(best);
}

SurveyReport survey_posets(std::size_t n, bool oracle) {
  SurveyReport r;
  r.n = n;
  std::size_t index = 0;
  for_each_labeled_poset(n, [&](std::span<const Mask> below) {
    const auto P = poset_from_below(below);
    std::optional<std::string> note;
    try {
      note = survey_one(P, oracle, r, &exhaustive_min_noetherian);
    } catch (const std::exception& e) {
      ++r.violations;
      note = std::string("exception: ") + e.what();
    }
    if (note && r.notes.size() < kMaxNotes) r.notes.push_back("poset #" + std::to_string(index) + ": " + *note);
    ++index;
  });
  return r;
}

}  // namespace reference

}  // namespace bmlab
