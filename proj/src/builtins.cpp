#include "aisemi/builtins.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "aisemi/flat.hpp"

namespace aisemi {

namespace {

using Matrix = std::array<int, 4>;  // row-major 2x2

Matrix multiply(const Matrix& x, const Matrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

// Element order of B21 and the matrices representing them.
constexpr std::array<std::string_view, 6> kB21Names = {"0", "1",  "a",
                                                       "b", "ab", "ba"};
constexpr std::array<Matrix, 6> kB21Matrices = {{
    {0, 0, 0, 0},  // 0
    {1, 0, 0, 1},  // 1
    {0, 1, 0, 0},  // a
    {0, 0, 1, 0},  // b
    {1, 0, 0, 0},  // ab
    {0, 0, 0, 1},  // ba
}};

std::vector<std::uint32_t> b21_products() {
  std::vector<std::uint32_t> mul;
  for (const Matrix& x : kB21Matrices) {
    for (const Matrix& y : kB21Matrices) {
      const Matrix p = multiply(x, y);
      std::uint32_t found = 6;
      for (std::uint32_t k = 0; k < 6; ++k) {
        if (kB21Matrices[k] == p) found = k;
      }
      if (found == 6) {
        throw std::logic_error("B21 is not closed under multiplication");
      }
      mul.push_back(found);
    }
  }
  return mul;
}

// Covering pairs of the B21 order, as (lower, upper) element indices.
constexpr std::array<std::pair<std::uint32_t, std::uint32_t>, 6> kB21Covers =
    {{{1, 4}, {1, 5}, {2, 0}, {3, 0}, {4, 0}, {5, 0}}};

}  // namespace

FiniteAiSemiring s7() {
  return FiniteAiSemiring::from_rows("S7", {"0", "a", "1"},
                                     {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
                                     {{0, 0, 0}, {0, 0, 1}, {0, 1, 2}});
}

FiniteAiSemiring b21() {
  return FiniteAiSemiring("B21", {kB21Names.begin(), kB21Names.end()},
                          join_table_from_covers(6, kB21Covers),
                          b21_products());
}

FiniteAiSemiring sigma7() {
  constexpr std::uint32_t bot = 6;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers(
      kB21Covers.begin(), kB21Covers.end());
  // bot sits under the minimal elements 1, a and b of B21.
  covers.insert(covers.end(), {{bot, 1}, {bot, 2}, {bot, 3}});

  const auto old = b21_products();
  std::vector<std::uint32_t> mul(7 * 7, bot);
  for (std::uint32_t i = 0; i < 6; ++i) {
    for (std::uint32_t j = 0; j < 6; ++j) {
      mul[i * 7 + j] = old[i * 6 + j];
    }
  }
  std::vector<std::string> names(kB21Names.begin(), kB21Names.end());
  names.push_back("bot");
  return FiniteAiSemiring("SIGMA7", std::move(names),
                          join_table_from_covers(7, covers), std::move(mul));
}

FiniteAiSemiring m2() {
  FlatOptions options;
  options.monoid = true;
  options.name = "M2";
  return build_flat({}, options).algebra();
}

FiniteAiSemiring m_abacdc() {
  FlatOptions options;
  options.monoid = true;
  options.name = "M_ABACDC";
  const Word w = Word::parse("abacdc", true);
  return build_flat(std::span<const Word>(&w, 1), options).algebra();
}

std::span<const std::string_view> builtin_names() {
  static constexpr std::array<std::string_view, 5> kNames = {
      "S7", "B21", "SIGMA7", "M2", "M_ABACDC"};
  return kNames;
}

std::optional<FiniteAiSemiring> find_builtin(std::string_view name) {
  std::string upper(name);
  for (char& c : upper) {
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  if (upper == "S7") return s7();
  if (upper == "B21") return b21();
  if (upper == "SIGMA7") return sigma7();
  if (upper == "M2") return m2();
  if (upper == "M_ABACDC") return m_abacdc();
  return std::nullopt;
}

FiniteAiSemiring builtin(std::string_view name) {
  if (auto s = find_builtin(name)) return std::move(*s);
  throw std::invalid_argument("unknown builtin algebra '" + std::string(name) +
                              "'");
}

}  // namespace aisemi
