#pragma once

// Terms (finite sums of words), identities between them, and the identity
// text syntax:
//
//   identity := term ('=' | '<=') (term | '0')
//   term     := word ('+' word)*
//   word     := letter+            (whitespace separated)
//
// `w = 0` abbreviates the pair  w z ≈ z w,  z w ≈ w  for a fresh letter z,
// and is only legal when the left side is a single word.

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aisemi/word.hpp"

namespace aisemi {

class Term {
 public:
  // Summands are sorted and deduplicated; throws std::invalid_argument if
  // `summands` is empty.
  explicit Term(std::vector<Word> summands);
  Term(const Word& w) : Term(std::vector<Word>{w}) {}  // NOLINT

  const std::vector<Word>& summands() const noexcept { return summands_; }
  bool is_word() const noexcept { return summands_.size() == 1; }

  std::set<Letter> content() const;
  Term plus(const Term& other) const;
  std::string str() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::vector<Word> summands_;
};

enum class IdentityKind { equation, inequality, zero_form };

class Identity {
 public:
  static Identity equation(Term lhs, Term rhs);
  // u <= v, i.e. u + v ≈ v.
  static Identity inequality(Term lhs, Term rhs);
  // w ≈ 0 with the first unused letter of z1, z2, ... as the fresh letter.
  static Identity zero_form(Word w);

  IdentityKind kind() const noexcept { return kind_; }
  // The sides as written; for zero_form rhs() is the lhs word.
  const Term& lhs() const noexcept { return lhs_; }
  const Term& rhs() const noexcept { return rhs_; }
  const Letter& fresh_letter() const { return fresh_.at(0); }

  // The equations whose conjunction this identity means: one for an
  // equation, (u + v, v) for an inequality, two for a zero form.
  std::vector<std::pair<Term, Term>> equations() const;

  // Letters in order of first occurrence in the written lhs then rhs; the
  // fresh letter of a zero form comes last.
  std::vector<Letter> letters() const;

  std::string str() const;

  friend bool operator==(const Identity&, const Identity&) = default;

 private:
  Identity(IdentityKind kind, Term lhs, Term rhs, std::vector<Letter> fresh)
      : kind_(kind),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)),
        fresh_(std::move(fresh)) {}

  IdentityKind kind_;
  Term lhs_;
  Term rhs_;
  std::vector<Letter> fresh_;
};

// Throws ParseError (with the byte offset) on bad syntax.
Identity parse_identity(std::string_view text);

Letter fresh_letter_for(const std::set<Letter>& used);

// {w z ≈ z w, z w ≈ w} with z = fresh_letter_for(c(w)).
std::pair<Identity, Identity> expand_zero_identity(const Word& w);

}  // namespace aisemi
