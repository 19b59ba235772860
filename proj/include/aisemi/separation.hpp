#pragma once

// The separating family A_n = S7 x S(w_n) and the identities
// sigma_m : w_m ≈ w_m'.  A_n satisfies sigma_m exactly when n != m, so the
// map M -> V({A_m : m in M}) reverses inclusion on finite index sets.
// Everything here is evaluated factor by factor; the products themselves
// are far too large for a direct scan.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aisemi/algebra.hpp"
#include "aisemi/satisfaction.hpp"

namespace aisemi {

// direct_product(S7, S(w_n)), named "A<n>".
FiniteAiSemiring build_An(std::size_t n);
FiniteAiSemiring build_An(std::size_t n, const FiniteAiSemiring& s7_factor);

struct SigmaCell {
  std::size_t n = 0;
  std::size_t m = 0;
  bool holds = false;
  Verdict s7_side;
  Verdict flat_side;
  // "brute force" or "commutative normal form" for the S7 side.
  std::string s7_route;
};

// Both factors must satisfy sigma_m.  The S7 side is scanned exhaustively
// for m <= 3 and uses sorted-word normal forms beyond that when the factor
// is multiplicatively commutative.
SigmaCell sigma_cell(std::size_t n, std::size_t m,
                     const FiniteAiSemiring& s7_factor,
                     const SatOptions& options = {});
bool sigma_holds(std::size_t n, std::size_t m);

// For a multiplicatively commutative algebra a word identity holds as soon
// as both sides have the same letters with the same multiplicities.
bool same_commutative_normal_form(const Word& u, const Word& v);

struct PowersetEntry {
  std::uint32_t subset = 0;     // bit i-1 set iff i in M
  std::uint32_t satisfied = 0;  // sat(M), same encoding
  bool ok = false;              // sat(M) == complement of M
};

struct PowersetReport {
  std::size_t n = 0;
  std::vector<PowersetEntry> entries;
  std::size_t pairs_checked = 0;
  std::size_t order_failures = 0;
  bool ok = false;
};

// matrix[n-1][m-1] = does A_n satisfy sigma_m.
PowersetReport verify_powerset_embedding(
    const std::vector<std::vector<bool>>& matrix);
PowersetReport verify_powerset_embedding(std::size_t n);

std::string format_subset(std::uint32_t bits, std::size_t n);

struct SeparationReport {
  std::size_t n = 0;
  std::vector<std::vector<bool>> matrix;
  std::vector<SigmaCell> cells;  // row-major
  std::vector<double> cell_millis;
  PowersetReport powerset;
};

SeparationReport separation_matrix(std::size_t n,
                                   const FiniteAiSemiring& s7_factor,
                                   unsigned threads = 1);

struct SampledCheck {
  std::uint64_t samples = 0;
  std::uint64_t planted = 0;
  bool counterexample = false;
  std::string witness;
};

// Evaluates sigma_m on A_n at `samples` seeded assignments.  Part of the
// budget goes to assignments whose S(w_n) components come from values of
// w_m inside w_n (with random S7 components); uniform sampling alone almost
// never lands on one.
SampledCheck sampled_sigma_check(std::size_t n, std::size_t m,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const FiniteAiSemiring& s7_factor);

struct AgreementReport {
  std::uint64_t cases = 0;
  std::uint64_t disagreements = 0;
  std::string first_disagreement;
};

// Fast flat-semiring decisions against the brute-force scan: every word v
// over {a,b,c} with |v| <= max_v and every word u over {x,y} with
// |u| <= max_u, for zero forms u ≈ 0 in S(v) and word equations u1 ≈ u2.
AgreementReport flat_fast_path_agreement(std::size_t max_v = 4,
                                         std::size_t max_u = 3);

struct CheckResult {
  std::string id;
  std::string citation;
  bool pass = false;
  std::string detail;
  double millis = 0;
};

struct ReproduceOptions {
  std::size_t max_n = 3;
  unsigned threads = 1;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20240611;
  // Replaces S7 everywhere, for failure-injection runs.
  std::optional<FiniteAiSemiring> s7_override;
};

struct Reproduction {
  ReproduceOptions options;
  SeparationReport separation;
  std::vector<CheckResult> checks;
  bool all_pass = false;

  // Human-readable; runtimes only when asked, so the default text is the
  // same for every thread count.
  std::string text(bool with_timing = false) const;
  // One tab-separated line per check: id, citation, verdict, runtime (ms).
  std::string summary() const;
};

Reproduction reproduce(const ReproduceOptions& options = {});

}  // namespace aisemi
