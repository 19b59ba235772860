#pragma once

// Minimality / isoterm checks through evaluation vectors.
//
// Fix a finite algebra S and an ordered list of k letters.  The evaluation
// vector of a word is its value under every assignment of the letters, in
// mixed-radix order with the first letter least significant.  Two words are
// S-equivalent exactly when their vectors agree, so the word functions form
// a finite semigroup (the relatively free one), and every class can be
// reached from the single letters by right multiplication.  saturate_classes
// builds that semigroup as a deterministic automaton; is_minimal_exact
// reads minimality off it.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aisemi/algebra.hpp"
#include "aisemi/identity.hpp"
#include "aisemi/word.hpp"

namespace aisemi {

inline constexpr std::uint64_t kDefaultVectorEntries = 2'000'000;

// Entries are element indices, so the algebra may have at most 256
// elements.
struct EvalVector {
  std::vector<std::uint8_t> values;

  friend bool operator==(const EvalVector&, const EvalVector&) = default;
};

// Throws GuardError if |S| > 256 or |S|^k exceeds max_entries, and
// std::invalid_argument if w uses a letter outside `letters`.
EvalVector eval_vector(const FiniteAiSemiring& s, const Word& w,
                       std::span<const Letter> letters,
                       std::uint64_t max_entries = kDefaultVectorEntries);

EvalVector pointwise_product(const FiniteAiSemiring& s, const EvalVector& a,
                             const EvalVector& b);
EvalVector pointwise_sum(const FiniteAiSemiring& s, const EvalVector& a,
                         const EvalVector& b);

// lower[i] <= upper[i] for every i.
bool dominated(const OrderRelation& order, std::span<const std::uint8_t> lower,
               std::span<const std::uint8_t> upper);

using ClassId = std::uint32_t;

struct ClassTableOptions {
  std::size_t max_classes = 1'000'000;
  std::uint64_t max_entries = kDefaultVectorEntries;
  // Total vector storage.
  std::uint64_t max_bytes = std::uint64_t{1} << 30;
};

class ClassTable {
 public:
  ClassTable(ClassTable&&) noexcept;
  ClassTable& operator=(ClassTable&&) noexcept;
  ~ClassTable();

  // False when the class guard stopped the search early.
  bool complete() const noexcept;
  std::size_t class_count() const noexcept;
  std::size_t vector_size() const noexcept;
  const std::vector<Letter>& letters() const noexcept;

  std::span<const std::uint8_t> vector(ClassId c) const;
  std::optional<ClassId> find(std::span<const std::uint8_t> v) const;

  // Class of a single letter, and of c followed by a letter.  transition is
  // nullopt only when the table is incomplete.
  ClassId letter_class(std::size_t letter) const;
  std::optional<ClassId> transition(ClassId c, std::size_t letter) const;
  // nullopt if a transition is missing; throws std::invalid_argument for a
  // letter outside letters().
  std::optional<ClassId> class_of(const Word& w) const;

  // Shortest word in the class; ties go to the first one found by the
  // breadth-first search (letters tried in order).
  Word witness(ClassId c) const;
  std::size_t shortest_length(ClassId c) const;

  // Number of words of the given length (1..length_bound()) in the class,
  // saturated at 2.
  std::size_t length_bound() const noexcept;
  std::uint8_t words_of_length(ClassId c, std::size_t length) const;

 private:
  friend ClassTable saturate_classes(const FiniteAiSemiring&,
                                     std::span<const Letter>, std::size_t,
                                     const ClassTableOptions&);
  struct Impl;
  explicit ClassTable(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

// Breadth-first closure of the letter vectors under right multiplication
// by letter vectors, processed in first-seen order.
ClassTable saturate_classes(const FiniteAiSemiring& s,
                            std::span<const Letter> letters,
                            std::size_t length_bound,
                            const ClassTableOptions& options = {});

// A word other than `avoid` lying in class `target`, if any.  Exact: the
// words of a class form a regular language of the class automaton, which
// has a second word iff it has a cycle or two distinct paths.
std::optional<Word> other_word_in_class(const ClassTable& table,
                                        ClassId target, const Word& avoid);

enum class MinimalityStatus { minimal, not_minimal, inconclusive };

std::string_view to_string(MinimalityStatus status);

enum class MinimalityReason {
  none,
  dominated_by_other_class,  // some word u with u <= w pointwise, u !~ w
  shares_class,              // some word u != w with u ~ w
};

struct MinimalityOptions {
  // Length bound for the per-length word counts; 0 means 2 * |w|.
  std::size_t length_bound = 0;
  ClassTableOptions table;
  std::size_t power_cap = 4096;
};

struct MinimalityVerdict {
  MinimalityStatus status = MinimalityStatus::inconclusive;
  MinimalityReason reason = MinimalityReason::none;
  std::optional<Word> witness;

  // Restricting candidates to the letters of w is justified by an
  // embedding of M2 into S (or into S x S).
  bool m2_premise = false;
  std::string m2_route;
  // The dominance scan covered every class.
  bool dominance_exact = false;
  // The same-class question was settled on the full automaton rather than
  // only up to length_bound.
  bool duplicate_exact = false;
  // Whether a second word of the class was seen with length <= bound.
  std::size_t length_bound = 0;
  bool duplicate_within_bound = false;
  std::size_t class_count = 0;
  std::string note;
};

MinimalityVerdict is_minimal_exact(const FiniteAiSemiring& s, const Word& w,
                                   const MinimalityOptions& options = {});

struct BoundedIsotermOptions {
  std::size_t max_length = 2;
  std::size_t max_summands = 2;
  std::uint64_t max_candidates = 5'000'000;
  std::uint64_t max_entries = kDefaultVectorEntries;
};

struct BoundedIsotermVerdict {
  enum class Status { no_identity_found, identity_found, inconclusive };
  Status status = Status::no_identity_found;
  std::optional<Term> partner;  // w ≈ partner holds and partner != w
  std::uint64_t candidates = 0;
  std::string note;
};

// Searches every term over the letters of w with at most max_summands
// summands of length at most max_length for a nontrivial identity w ≈ u.
BoundedIsotermVerdict is_isoterm_bounded(
    const FiniteAiSemiring& s, const Word& w,
    const BoundedIsotermOptions& options = {});

struct Premise {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Certificate {
  std::string algebra;
  bool issued = false;
  // A premise could not be settled within the guards.
  bool inconclusive = false;
  std::vector<Premise> premises;
  std::vector<Premise> remarks;
  std::string conclusion;

  std::string report() const;
};

// Sufficient condition for every w_n to be an isoterm: S has a
// multiplicative identity, M2 lies in V(S), and xyxztz is an isoterm.
Certificate certify_wn_isoterms(const FiniteAiSemiring& s,
                                const MinimalityOptions& options = {});

}  // namespace aisemi
