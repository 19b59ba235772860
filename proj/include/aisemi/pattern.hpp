#pragma once

// "Contains a value of": does some substitution map a pattern word onto a
// contiguous factor of a target word?

#include <cstdint>
#include <functional>
#include <optional>

#include "aisemi/word.hpp"

namespace aisemi {

struct PatternOptions {
  // Allow letters to map to the empty word.
  bool monoid_mode = false;
  std::uint64_t node_budget = 10'000'000;
};

struct PatternMatch {
  Substitution substitution;
  // The factor target[begin, begin + length) equals substitution(pattern).
  std::size_t begin = 0;
  std::size_t length = 0;
};

enum class MatchStatus { found, none, inconclusive };

struct PatternSearch {
  MatchStatus status = MatchStatus::none;
  std::optional<PatternMatch> match;
  std::uint64_t nodes = 0;
};

// First value in search order: start positions left to right, pattern
// letters bound left to right, shorter images first.
PatternSearch find_embedding_value(const Word& pattern, const Word& target,
                                   const PatternOptions& options = {});

// Visits every (substitution, factor) pair in search order until `visit`
// returns false.  In monoid mode an all-empty substitution is reported once,
// at position 0.
MatchStatus for_each_value(const Word& pattern, const Word& target,
                           const PatternOptions& options,
                           const std::function<bool(const PatternMatch&)>& visit);

// True iff target contains no value of pattern.  Throws GuardError when the
// node budget runs out before the search completes.
bool is_free(const Word& target, const Word& pattern,
             const PatternOptions& options = {});

}  // namespace aisemi
