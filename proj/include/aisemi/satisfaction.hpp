#pragma once

// Evaluating terms in a finite algebra and deciding whether an identity
// holds there.
//
// The brute-force scan walks assignments in mixed-radix little-endian order:
// the letters are ordered as Identity::letters() and the first letter is the
// least significant digit.  The reported witness is always the first
// counterexample in that order, whatever the thread count.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aisemi/algebra.hpp"
#include "aisemi/flat.hpp"
#include "aisemi/identity.hpp"

namespace aisemi {

using Assignment = std::map<Letter, ElementId>;

// Throws Error if a letter of the word has no binding.
ElementId evaluate(const Word& w, const FiniteAiSemiring& s,
                   const Assignment& assignment);
ElementId evaluate(const Term& t, const FiniteAiSemiring& s,
                   const Assignment& assignment);

enum class VerdictStatus { holds, fails, inconclusive };

std::string_view to_string(VerdictStatus status);

struct Witness {
  std::vector<Letter> letters;
  std::vector<ElementId> values;

  Assignment assignment() const;
  // "x=a y=b"
  std::string str(const FiniteAiSemiring& s) const;
};

struct Verdict {
  VerdictStatus status = VerdictStatus::holds;
  std::optional<Witness> witness;
  // Which of Identity::equations() the witness breaks.
  std::size_t failed_equation = 0;
  std::string note;

  bool holds() const noexcept { return status == VerdictStatus::holds; }
  bool fails() const noexcept { return status == VerdictStatus::fails; }
};

struct SatOptions {
  std::uint64_t max_assignments = 1'000'000'000;
  unsigned threads = 1;
  std::uint64_t node_budget = 10'000'000;

  // Defaults overridden by AISEMI_MAX_ASSIGNMENTS, AISEMI_NODE_BUDGET and
  // AISEMI_THREADS when set.
  static SatOptions from_environment();
};

// Exhaustive check.  Inconclusive when |S|^#letters exceeds
// options.max_assignments.
Verdict satisfies(const FiniteAiSemiring& s, const Identity& id,
                  const SatOptions& options = {});

// Exact decision of u ≈ v in a flat semiring, by enumerating the values of
// u and v inside the words of W instead of all assignments.  Witness letters
// follow the order of u then v.
Verdict satisfies_flat_word_equation(const FlatSemiring& f, const Word& u,
                                     const Word& v,
                                     const SatOptions& options = {});

// Exact decision of u ≈ 0 in S(W): holds iff every word of W is u-free.
// M(W) always falls back to the brute-force scan.
Verdict satisfies_zero_form_flat(const FlatSemiring& f, const Word& u,
                                 const SatOptions& options = {});

std::string format_verdict(const Verdict& v, const FiniteAiSemiring& s);

}  // namespace aisemi
