#pragma once

// Flat semirings S(W) and M(W): the nonempty factors of the words in W (plus
// the empty word for M(W)) and a zero, multiplied by concatenation when the
// result is again a factor and collapsing to zero otherwise.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aisemi/algebra.hpp"
#include "aisemi/word.hpp"

namespace aisemi {

enum class LabelKind { word, empty, zero };

struct FlatLabel {
  LabelKind kind = LabelKind::zero;
  MaybeWord word;  // set iff kind == word
};

struct FlatOptions {
  bool monoid = false;
  std::size_t subword_cap = 5000;
  // Defaults to S(...) / M(...) built from the words.
  std::string name;
};

class FlatSemiring {
 public:
  const FiniteAiSemiring& algebra() const noexcept { return algebra_; }
  const std::vector<FlatLabel>& labels() const noexcept { return labels_; }
  const FlatLabel& label(ElementId e) const { return labels_.at(index_of(e)); }
  const std::vector<Word>& words() const noexcept { return words_; }
  bool monoid_mode() const noexcept { return monoid_; }
  ElementId zero() const noexcept { return zero_; }

  // The element a word (or, in monoid mode, the empty word) denotes, if it
  // is in the carrier.
  std::optional<ElementId> element_of(const MaybeWord& w) const;

 private:
  friend FlatSemiring build_flat(std::span<const Word> words,
                                 const FlatOptions& options);
  FlatSemiring(FiniteAiSemiring algebra, std::vector<FlatLabel> labels,
               std::vector<Word> words, bool monoid, ElementId zero,
               std::map<Word, ElementId> index,
               std::optional<ElementId> empty)
      : algebra_(std::move(algebra)),
        labels_(std::move(labels)),
        words_(std::move(words)),
        monoid_(monoid),
        zero_(zero),
        index_(std::move(index)),
        empty_(empty) {}

  FiniteAiSemiring algebra_;
  std::vector<FlatLabel> labels_;
  std::vector<Word> words_;
  bool monoid_;
  ElementId zero_;
  std::map<Word, ElementId> index_;
  std::optional<ElementId> empty_;
};

// Elements are ordered shortlex with the empty word first and 0 last.  An
// empty `words` list is only accepted in monoid mode, giving M(ε) = M2.
// Throws GuardError when the carrier would exceed options.subword_cap.
FlatSemiring build_flat(std::span<const Word> words,
                        const FlatOptions& options = {});

// Element name used in exported tables: letters concatenated when every
// letter is one character, joined with '.' otherwise.
std::string flat_element_name(const Word& w, bool single_char_letters);

// True iff there is a multiplicative zero equal to every sum of two
// distinct elements.
bool check_flat(const FiniteAiSemiring& s);

// ab = ac != 0 implies b = c, and ba = ca != 0 implies b = c.  False when
// the multiplicative reduct has no zero.
bool check_zero_cancellative(const FiniteAiSemiring& s);
bool check_zero_cancellative(std::span<const std::uint32_t> mul,
                             std::uint32_t n, std::uint32_t zero);

}  // namespace aisemi
