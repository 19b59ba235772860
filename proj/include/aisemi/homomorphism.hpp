#pragma once

// Backtracking search for injective maps preserving + and *.

#include <cstdint>
#include <optional>
#include <vector>

#include "aisemi/algebra.hpp"

namespace aisemi {

// image[i] is where element i of the source goes.
using Embedding = std::vector<ElementId>;

enum class SearchStatus {
  exhausted,        // every branch explored; the result list is complete
  limit_reached,    // stopped after `limit` solutions
  budget_exceeded,  // node budget hit; absence of solutions proves nothing
};

struct EmbeddingSearchOptions {
  std::size_t limit = 1;
  std::uint64_t node_budget = 10'000'000;
  bool bijective = false;
};

struct EmbeddingSearch {
  SearchStatus status = SearchStatus::exhausted;
  std::vector<Embedding> maps;
  std::uint64_t nodes = 0;

  bool inconclusive() const {
    return status == SearchStatus::budget_exceeded && maps.empty();
  }
};

EmbeddingSearch find_embeddings(const FiniteAiSemiring& from,
                                const FiniteAiSemiring& to,
                                EmbeddingSearchOptions options = {});

struct IsomorphismSearch {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Embedding> map;
};

IsomorphismSearch find_isomorphism(const FiniteAiSemiring& a,
                                   const FiniteAiSemiring& b,
                                   std::uint64_t node_budget = 10'000'000);

// Re-checks every table entry; independent of the search.
bool is_embedding(const FiniteAiSemiring& from, const FiniteAiSemiring& to,
                  const Embedding& map);

}  // namespace aisemi
