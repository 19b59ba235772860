#include "aisemi/identity.hpp"

#include <algorithm>
#include <cctype>

#include "aisemi/error.hpp"

namespace aisemi {

Term::Term(std::vector<Word> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) {
    throw std::invalid_argument("a term needs at least one summand");
  }
  std::sort(summands_.begin(), summands_.end());
  summands_.erase(std::unique(summands_.begin(), summands_.end()),
                  summands_.end());
}

std::set<Letter> Term::content() const {
  std::set<Letter> out;
  for (const Word& w : summands_) out.insert(w.begin(), w.end());
  return out;
}

Term Term::plus(const Term& other) const {
  std::vector<Word> all(summands_);
  all.insert(all.end(), other.summands_.begin(), other.summands_.end());
  return Term(std::move(all));
}

std::string Term::str() const {
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += " + ";
    out += summands_[i].str();
  }
  return out;
}

Identity Identity::equation(Term lhs, Term rhs) {
  return Identity(IdentityKind::equation, std::move(lhs), std::move(rhs), {});
}

Identity Identity::inequality(Term lhs, Term rhs) {
  return Identity(IdentityKind::inequality, std::move(lhs), std::move(rhs),
                  {});
}

Identity Identity::zero_form(Word w) {
  Letter fresh = fresh_letter_for(content(w));
  Term t(w);
  return Identity(IdentityKind::zero_form, t, t, {std::move(fresh)});
}

std::vector<std::pair<Term, Term>> Identity::equations() const {
  switch (kind_) {
    case IdentityKind::equation:
      return {{lhs_, rhs_}};
    case IdentityKind::inequality:
      return {{lhs_.plus(rhs_), rhs_}};
    case IdentityKind::zero_form: {
      const Word& w = lhs_.summands().front();
      const Word z(std::vector<Letter>{fresh_letter()});
      return {{Term(w.concat(z)), Term(z.concat(w))},
              {Term(z.concat(w)), Term(w)}};
    }
  }
  return {};
}

std::vector<Letter> Identity::letters() const {
  std::vector<Letter> out;
  auto scan = [&](const Term& t) {
    for (const Word& w : t.summands()) {
      for (const Letter& l : w) {
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
      }
    }
  };
  scan(lhs_);
  if (kind_ == IdentityKind::zero_form) {
    out.push_back(fresh_letter());
  } else {
    scan(rhs_);
  }
  return out;
}

std::string Identity::str() const {
  switch (kind_) {
    case IdentityKind::equation:
      return lhs_.str() + " = " + rhs_.str();
    case IdentityKind::inequality:
      return lhs_.str() + " <= " + rhs_.str();
    case IdentityKind::zero_form:
      return lhs_.str() + " = 0";
  }
  return {};
}

Letter fresh_letter_for(const std::set<Letter>& used) {
  for (std::size_t i = 1;; ++i) {
    Letter candidate = make_letter("z", i);
    if (!used.contains(candidate)) return candidate;
  }
}

std::pair<Identity, Identity> expand_zero_identity(const Word& w) {
  auto eqs = Identity::zero_form(w).equations();
  return {Identity::equation(eqs[0].first, eqs[0].second),
          Identity::equation(eqs[1].first, eqs[1].second)};
}

namespace {

enum class TokenKind { letter, plus, equals, leq, zero, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+') {
      out.push_back({TokenKind::plus, "+", i++});
    } else if (c == '=') {
      out.push_back({TokenKind::equals, "=", i++});
    } else if (c == '<') {
      if (i + 1 >= text.size() || text[i + 1] != '=') {
        throw ParseError(i, "expected '<='");
      }
      out.push_back({TokenKind::leq, "<=", i});
      i += 2;
    } else if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             ((text[j] >= 'a' && text[j] <= 'z') ||
              (text[j] >= '0' && text[j] <= '9') || text[j] == '_')) {
        ++j;
      }
      out.push_back({TokenKind::letter, std::string(text.substr(i, j - i)), i});
      i = j;
    } else if (c == '0') {
      std::size_t j = i + 1;
      if (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) {
        throw ParseError(i, "letters must start with a lowercase letter");
      }
      out.push_back({TokenKind::zero, "0", i});
      i = j;
    } else {
      throw ParseError(i, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::end, "", text.size()});
  return out;
}

bool is_relation(TokenKind k) {
  return k == TokenKind::equals || k == TokenKind::leq;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Identity parse() {
    const Token& first = peek();
    if (first.kind == TokenKind::end) {
      throw ParseError(first.position, "empty identity");
    }
    Term lhs = term();
    const Token& op = next();
    if (!is_relation(op.kind)) {
      throw ParseError(op.position, "expected '=' or '<='");
    }
    if (is_relation(peek().kind)) {
      throw ParseError(peek().position, "duplicate relation operator");
    }
    if (peek().kind == TokenKind::zero) {
      const Token& zero = next();
      expect_end();
      if (op.kind != TokenKind::equals) {
        throw ParseError(zero.position, "'0' is only allowed after '='");
      }
      if (!lhs.is_word()) {
        throw ParseError(zero.position,
                         "'= 0' needs a single word on the left");
      }
      return Identity::zero_form(lhs.summands().front());
    }
    Term rhs = term();
    expect_end();
    return op.kind == TokenKind::equals
               ? Identity::equation(std::move(lhs), std::move(rhs))
               : Identity::inequality(std::move(lhs), std::move(rhs));
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect_end() {
    const Token& t = peek();
    if (t.kind == TokenKind::end) return;
    if (is_relation(t.kind)) {
      throw ParseError(t.position, "duplicate relation operator");
    }
    throw ParseError(t.position, "unexpected '" + t.text + "'");
  }

  Word word() {
    std::vector<Letter> letters;
    while (peek().kind == TokenKind::letter) {
      letters.emplace_back(next().text);
    }
    if (letters.empty()) {
      const Token& t = peek();
      if (t.kind == TokenKind::plus) {
        throw ParseError(t.position, "duplicate '+'");
      }
      if (t.kind == TokenKind::zero) {
        throw ParseError(t.position, "'0' may only form a whole right side");
      }
      throw ParseError(t.position, "expected a word");
    }
    return Word(std::move(letters));
  }

  Term term() {
    std::vector<Word> summands{word()};
    while (peek().kind == TokenKind::plus) {
      next();
      summands.push_back(word());
    }
    return Term(std::move(summands));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text) {
  return Parser(tokenize(text)).parse();
}

}  // namespace aisemi
