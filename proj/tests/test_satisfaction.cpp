#include <doctest.h>

#include <cstdlib>
#include <random>

#include "aisemi/builtins.hpp"
#include "aisemi/error.hpp"
#include "aisemi/flat.hpp"
#include "aisemi/satisfaction.hpp"
#include "oracles.hpp"

using namespace aisemi;

namespace {

// First failing assignment with the first letter varying fastest.
std::optional<std::vector<std::uint32_t>> first_failure(const oracle::Alg& a,
                                                        const Identity& id) {
  std::vector<std::string> letters;
  for (const auto& l : id.letters()) letters.push_back(l.str());
  std::vector<std::uint32_t> digits(letters.size(), 0);
  while (true) {
    std::map<std::string, std::uint32_t> v;
    for (std::size_t i = 0; i < letters.size(); ++i) v[letters[i]] = digits[i];
    for (const auto& [l, r] : id.equations()) {
      if (oracle::eval_term(a, l, v) != oracle::eval_term(a, r, v)) return digits;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == a.n) digits[i++] = 0;
    if (i == digits.size()) return std::nullopt;
  }
}

FlatSemiring flat(const Word& w) {
  return build_flat(std::span<const Word>(&w, 1));
}

}  // namespace

TEST_CASE("evaluate") {
  const auto b = b21();
  const Assignment psi{{Letter("x"), *b.find_element("a")},
                       {Letter("t"), *b.find_element("a")},
                       {Letter("y"), *b.find_element("b")},
                       {Letter("z"), *b.find_element("b")}};
  CHECK(b.element_name(evaluate(Word::parse("x y x z t z"), b, psi)) == "ab");
  CHECK(b.element_name(evaluate(Word::parse("x y z x t z"), b, psi)) == "0");
  CHECK(b.element_name(evaluate(Term({Word{"x"}, Word{"y"}}), b, psi)) == "0");
  CHECK_THROWS_AS(evaluate(Word{"q"}, b, psi), Error);
}

TEST_CASE("simple verdicts") {
  CHECK(satisfies(s7(), parse_identity("x y = y x")).holds());
  CHECK(satisfies(s7(), Identity::equation(wn(1), wn_prime(1))).holds());
  CHECK(satisfies(b21(), parse_identity("x y = y x")).fails());
  CHECK(satisfies(b21(), parse_identity("x x x = x x")).holds());
  CHECK(satisfies(b21(), parse_identity("x y x z t z = x y z x t z")).fails());
  CHECK(satisfies(m2(), parse_identity("x x = x")).holds());
  CHECK(satisfies(b21(), parse_identity("x <= x + y")).holds());
}

TEST_CASE("witness is the first counterexample in scan order") {
  const auto b = b21();
  const auto a = oracle::tables_of(b);
  for (const char* text :
       {"x y x z t z = x y z x t z", "x y = y x", "x y x = x", "x + y = x y",
        "x y = 0", "x x <= x", "x y + y x = x + y"}) {
    const std::string shown = text;
    CAPTURE(shown);
    const Identity id = parse_identity(text);
    const Verdict v = satisfies(b, id);
    const auto want = first_failure(a, id);
    REQUIRE(v.fails() == want.has_value());
    if (!want) continue;
    REQUIRE(v.witness.has_value());
    for (std::size_t i = 0; i < want->size(); ++i) {
      CHECK(index_of(v.witness->values[i]) == (*want)[i]);
    }
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto s = sigma7();
  const Identity id = parse_identity("x y z x = x z y x");
  SatOptions one;
  const Verdict v1 = satisfies(s, id, one);
  for (unsigned t : {2u, 3u, 5u, 8u}) {
    SatOptions many;
    many.threads = t;
    const Verdict vt = satisfies(s, id, many);
    CHECK(format_verdict(vt, s) == format_verdict(v1, s));
  }
}

TEST_CASE("assignment guard") {
  SatOptions tight;
  tight.max_assignments = 100;
  const Verdict v = satisfies(b21(), parse_identity("x y z = z y x"), tight);
  CHECK(v.status == VerdictStatus::inconclusive);
}

TEST_CASE("guard defaults come from the environment") {
  ::setenv("AISEMI_MAX_ASSIGNMENTS", "12345", 1);
  ::setenv("AISEMI_THREADS", "3", 1);
  const SatOptions o = SatOptions::from_environment();
  CHECK(o.max_assignments == 12345);
  CHECK(o.threads == 3);
  ::unsetenv("AISEMI_MAX_ASSIGNMENTS");
  ::unsetenv("AISEMI_THREADS");
  CHECK(SatOptions::from_environment().max_assignments == SatOptions{}.max_assignments);
}

TEST_CASE("flat fast paths") {
  SUBCASE("both sides always zero") {
    const auto f = flat(Word::parse("a b"));
    CHECK(satisfies_flat_word_equation(f, Word::parse("x x x"),
                                       Word::parse("y y y"))
              .holds());
  }
  SUBCASE("sigma_m in S(w_n)") {
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; m <= 3; ++m) {
        const auto v = satisfies_flat_word_equation(flat(wn(n)), wn(m),
                                                    wn_prime(m));
        CHECK(v.holds() == (n != m));
        if (v.fails()) {
          // The witness really breaks the equation.
          const auto asg = v.witness->assignment();
          const auto fn = flat(wn(n));
          const auto& s = fn.algebra();
          CHECK(evaluate(wn(m), s, asg) != evaluate(wn_prime(m), s, asg));
        }
      }
  }
  SUBCASE("zero forms") {
    const auto f = flat(wn(1));
    CHECK(satisfies_zero_form_flat(f, wn(2)).holds());
    const auto v = satisfies_zero_form_flat(f, wn(1));
    CHECK(v.fails());
    REQUIRE(v.witness);
    CHECK(satisfies(f.algebra(), Identity::zero_form(Word{"x", "x"})).holds());
  }
  SUBCASE("random agreement with brute force") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
      const Word w = oracle::random_word(rng, 2, 5);
      const Word u = oracle::random_word(rng, 2, 3);
      const Word v = oracle::random_word(rng, 2, 3);
      const auto f = flat(w);
      CAPTURE(w.str());
      CAPTURE(u.str());
      CAPTURE(v.str());
      CHECK(satisfies_flat_word_equation(f, u, v).status ==
            satisfies(f.algebra(), Identity::equation(u, v)).status);
      CHECK(satisfies_zero_form_flat(f, u).status ==
            satisfies(f.algebra(), Identity::zero_form(u)).status);
      CHECK(oracle::holds(oracle::tables_of(f.algebra()),
                          Identity::equation(u, v)) ==
            satisfies(f.algebra(), Identity::equation(u, v)).holds());
    }
  }
  SUBCASE("monoid mode falls back and still agrees") {
    FlatOptions o;
    o.monoid = true;
    const Word w = Word::parse("abacdc", true);
    const auto f = build_flat(std::span<const Word>(&w, 1), o);
    for (const char* u : {"x y x", "x x", "x y z y x"}) {
      const Word uw = Word::parse(u);
      CHECK(satisfies_zero_form_flat(f, uw).status ==
            satisfies(f.algebra(), Identity::zero_form(uw)).status);
    }
    CHECK(satisfies_flat_word_equation(f, Word::parse("x y"), Word::parse("y x"))
              .status == satisfies(f.algebra(), parse_identity("x y = y x")).status);
  }
}
