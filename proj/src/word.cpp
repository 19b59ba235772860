#include "aisemi/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace aisemi {

Letter::Letter(std::string symbol) : symbol_(std::move(symbol)) {
  if (!valid(symbol_)) {
    throw std::invalid_argument("invalid letter '" + symbol_ + "'");
  }
}

bool Letter::valid(std::string_view symbol) noexcept {
  if (symbol.empty() || symbol[0] < 'a' || symbol[0] > 'z') {
    return false;
  }
  return std::all_of(symbol.begin() + 1, symbol.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("a word needs at least one letter");
  }
}

Word::Word(std::initializer_list<const char*> letters) {
  for (const char* l : letters) letters_.emplace_back(l);
  if (letters_.empty()) {
    throw std::invalid_argument("a word needs at least one letter");
  }
}

Word Word::parse(std::string_view text, bool split_chars) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (split_chars) {
      for (char c : token) letters.emplace_back(std::string(1, c));
    } else {
      letters.emplace_back(token);
    }
  }
  if (letters.empty()) {
    throw std::invalid_argument("empty word");
  }
  return Word(std::move(letters));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (len == 0 || pos + len > letters_.size()) {
    throw std::out_of_range("factor outside the word");
  }
  return Word(std::vector<Letter>(letters_.begin() + pos,
                                  letters_.begin() + pos + len));
}

Word Word::concat(const Word& other) const {
  std::vector<Letter> out(letters_);
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].str();
  }
  return out;
}

std::string to_string(const MaybeWord& w) { return w ? w->str() : "ε"; }

MaybeWord concat(const MaybeWord& a, const MaybeWord& b) {
  if (!a) return b;
  if (!b) return a;
  return a->concat(*b);
}

bool ShortLex::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Letter make_letter(std::string_view prefix, std::size_t index) {
  return Letter(std::string(prefix) + std::to_string(index));
}

Word zimin(std::size_t n) {
  if (n == 0 || n > kMaxZimin) {
    throw std::invalid_argument("zimin index must be in 1.." +
                                std::to_string(kMaxZimin));
  }
  std::vector<Letter> z{make_letter("x", 1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Letter> next(z);
    next.push_back(make_letter("x", k));
    next.insert(next.end(), z.begin(), z.end());
    z = std::move(next);
  }
  return Word(std::move(z));
}

namespace {

Word wn_with_head(std::size_t n, std::size_t first, std::size_t second) {
  if (n == 0) {
    throw std::invalid_argument("w_n is defined for n >= 1");
  }
  std::vector<Letter> w;
  w.reserve(3 * n + 8);
  auto x = [](std::size_t i) { return make_letter("x", i); };
  auto y = [](std::size_t i) { return make_letter("y", i); };
  w.insert(w.end(), {y(0), x(first), x(second), y(0)});
  for (std::size_t i = 1; i <= n; ++i) {
    w.insert(w.end(), {y(i), x(i + 2), y(i)});
  }
  w.insert(w.end(), {y(n + 1), x(n + 3), x(n + 4), y(n + 1)});
  return Word(std::move(w));
}

}  // namespace

Word wn(std::size_t n) { return wn_with_head(n, 1, 2); }

Word wn_prime(std::size_t n) { return wn_with_head(n, 2, 1); }

std::set<Letter> content(const Word& w) { return {w.begin(), w.end()}; }

std::vector<Letter> letters_by_first_occurrence(const Word& w) {
  std::vector<Letter> out;
  for (const Letter& l : w) {
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  return out;
}

MaybeWord delete_letters(const Word& w, const std::set<Letter>& keep) {
  std::vector<Letter> kept;
  for (const Letter& l : w) {
    if (keep.contains(l)) kept.push_back(l);
  }
  if (kept.empty()) return std::nullopt;
  return Word(std::move(kept));
}

std::set<Word, ShortLex> subwords(const Word& w) {
  std::set<Word, ShortLex> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      out.insert(w.factor(i, len));
    }
  }
  return out;
}

MaybeWord Substitution::apply(const Word& w) const {
  MaybeWord out;
  for (const Letter& l : w) {
    out = aisemi::concat(out, images_.at(l));
  }
  return out;
}

std::string Substitution::str() const {
  std::vector<Letter> order;
  for (const auto& [l, _] : images_) order.push_back(l);
  return str(order);
}

std::string Substitution::str(std::span<const Letter> order) const {
  std::string out;
  for (const Letter& l : order) {
    auto it = images_.find(l);
    if (it == images_.end()) continue;
    if (!out.empty()) out += ", ";
    out += l.str() + "->" + to_string(it->second);
  }
  return out;
}

}  // namespace aisemi
