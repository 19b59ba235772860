#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "aisemi/algebra.hpp"

namespace aisemi {

// Three-element S7: elements 0 a 1.
FiniteAiSemiring s7();

// Brandt monoid B2^1 as 2x2 matrix units {0, 1, a, b, ab, ba}, with the
// join semilattice 1 < ab, ba < 0 and a, b < 0.
FiniteAiSemiring b21();

// B21 plus an element `bot` that is the additive bottom and the
// multiplicative zero.
FiniteAiSemiring sigma7();

// M(ε): the empty word and 0.
FiniteAiSemiring m2();

// M(abacdc).
FiniteAiSemiring m_abacdc();

std::span<const std::string_view> builtin_names();

std::optional<FiniteAiSemiring> find_builtin(std::string_view name);

// Throws std::invalid_argument for an unknown name.
FiniteAiSemiring builtin(std::string_view name);

}  // namespace aisemi
