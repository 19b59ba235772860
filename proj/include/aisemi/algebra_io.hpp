#pragma once

// Plain-text Cayley table format:
//
//   elements: <name> <name> ...
//   add:
//   <n rows of n element names>
//   mul:
//   <n rows of n element names>
//
// Row i, column j holds element_i op element_j.  Lines starting with '#'
// are comments; blank lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "aisemi/algebra.hpp"

namespace aisemi {

// Throws StructuralError (with the offending line number) on bad input.
FiniteAiSemiring parse_algebra(std::string_view text, std::string name);
FiniteAiSemiring load_algebra(const std::filesystem::path& path);

std::string format_algebra(const FiniteAiSemiring& s);
void save_algebra(const std::filesystem::path& path, const FiniteAiSemiring& s);

}  // namespace aisemi
