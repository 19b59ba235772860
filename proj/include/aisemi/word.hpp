#pragma once

// Words over a countable alphabet of named letters, and the word families
// used throughout: Zimin words and the w_n / w_n' pair.
//
// The empty word is never a Word.  Operations that can produce it return
// MaybeWord, with std::nullopt standing for the empty word.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace aisemi {

class Letter {
 public:
  // Throws std::invalid_argument unless symbol matches [a-z][a-z0-9_]*.
  explicit Letter(std::string symbol);

  const std::string& str() const noexcept { return symbol_; }

  static bool valid(std::string_view symbol) noexcept;

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::string symbol_;
};

class Word {
 public:
  // Throws std::invalid_argument if `letters` is empty.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<const char*> letters);

  // Whitespace-separated letter identifiers.  With split_chars every token
  // is broken into one-character letters ("abacdc" -> a b a c d c).
  static Word parse(std::string_view text, bool split_chars = false);

  std::size_t size() const noexcept { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  // Factor of length len starting at pos; len must be >= 1.
  Word factor(std::size_t pos, std::size_t len) const;
  Word concat(const Word& other) const;

  // Letters joined by single spaces.
  std::string str() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

using MaybeWord = std::optional<Word>;

std::string to_string(const MaybeWord& w);
MaybeWord concat(const MaybeWord& a, const MaybeWord& b);

// Length first, then lexicographic.
struct ShortLex {
  bool operator()(const Word& a, const Word& b) const;
};

Letter make_letter(std::string_view prefix, std::size_t index);

inline constexpr std::size_t kMaxZimin = 20;

// z_1 = x1, z_{n+1} = z_n x_{n+1} z_n.  Throws std::invalid_argument for
// n == 0 or n > kMaxZimin.
Word zimin(std::size_t n);

// y0 x1 x2 y0 (y_i x_{i+2} y_i for i = 1..n) y_{n+1} x_{n+3} x_{n+4} y_{n+1}.
Word wn(std::size_t n);

// wn(n) with the positions of x1 and x2 exchanged.
Word wn_prime(std::size_t n);

// Letters of w, sorted.
std::set<Letter> content(const Word& w);

// Letters of w in order of first occurrence.
std::vector<Letter> letters_by_first_occurrence(const Word& w);

// Deletes every letter outside `keep`; nullopt when nothing is left.
MaybeWord delete_letters(const Word& w, const std::set<Letter>& keep);

// All distinct nonempty factors of w.
std::set<Word, ShortLex> subwords(const Word& w);

// Image of each letter under a substitution; nullopt images (the empty word)
// only appear in monoid mode.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Letter, MaybeWord> images)
      : images_(std::move(images)) {}

  void set(const Letter& x, MaybeWord image) { images_[x] = std::move(image); }
  const MaybeWord& at(const Letter& x) const { return images_.at(x); }
  bool contains(const Letter& x) const { return images_.contains(x); }
  const std::map<Letter, MaybeWord>& images() const noexcept { return images_; }

  // Concatenation of the letter images; throws std::out_of_range for an
  // unbound letter.
  MaybeWord apply(const Word& w) const;

  // "x->a b, y->c" in the given letter order (default: sorted).
  std::string str() const;
  std::string str(std::span<const Letter> order) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::map<Letter, MaybeWord> images_;
};

}  // namespace aisemi
