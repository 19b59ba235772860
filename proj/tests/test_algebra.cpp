#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "aisemi/algebra.hpp"
#include "aisemi/algebra_io.hpp"
#include "aisemi/builtins.hpp"
#include "aisemi/error.hpp"
#include "aisemi/homomorphism.hpp"
#include "oracles.hpp"

using namespace aisemi;

namespace {

ElementId el(const FiniteAiSemiring& s, const char* name) {
  auto e = s.find_element(name);
  REQUIRE(e.has_value());
  return *e;
}

// Injective maps preserving both tables, counted by trying all of them.
std::size_t count_embeddings(const oracle::Alg& a, const oracle::Alg& b) {
  std::vector<std::uint32_t> img(a.n, 0);
  std::size_t found = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == a.n) {
      for (std::size_t x = 0; x < a.n; ++x)
        for (std::size_t y = 0; y < a.n; ++y) {
          if (img[a.add[x][y]] != b.add[img[x]][img[y]]) return;
          if (img[a.mul[x][y]] != b.mul[img[x]][img[y]]) return;
        }
      ++found;
      return;
    }
    for (std::uint32_t t = 0; t < b.n; ++t) {
      if (std::find(img.begin(), img.begin() + i, t) != img.begin() + i)
        continue;
      img[i] = t;
      rec(i + 1);
    }
  };
  rec(0);
  return found;
}

}  // namespace

TEST_CASE("builtins satisfy the axioms") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    const auto s = builtin(name);
    CHECK(validate_axioms(s).ok);
    CHECK(oracle::is_ai_semiring(oracle::tables_of(s)));
  }
  CHECK(s7().size() == 3);
  CHECK(b21().size() == 6);
  CHECK(sigma7().size() == 7);
  CHECK(m2().size() == 2);
  CHECK(m_abacdc().size() == 21);
  CHECK(find_builtin("b21").has_value());
  CHECK_FALSE(find_builtin("B22").has_value());
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
}

TEST_CASE("S7 tables") {
  const auto s = s7();
  const auto zero = el(s, "0"), a = el(s, "a"), one = el(s, "1");
  CHECK(s.sum(a, one) == zero);
  CHECK(s.product(a, a) == zero);
  CHECK(s.product(a, one) == a);
  CHECK(s.multiplicative_identity() == one);
  CHECK(s.multiplicative_zero() == zero);
  CHECK(s.is_multiplicatively_commutative());
}

TEST_CASE("B21 is the matrix-unit monoid") {
  const auto s = b21();
  auto p = [&](const char* x, const char* y) {
    return s.element_name(s.product(el(s, x), el(s, y)));
  };
  CHECK(p("a", "b") == "ab");
  CHECK(p("b", "a") == "ba");
  CHECK(p("a", "a") == "0");
  CHECK(p("ab", "a") == "a");
  CHECK(p("a", "ba") == "a");
  CHECK(p("ab", "ba") == "0");
  CHECK(p("1", "b") == "b");
  CHECK_FALSE(s.is_multiplicatively_commutative());
  CHECK(s.element_name(*s.multiplicative_identity()) == "1");
}

TEST_CASE("mutations of S7 are caught with the right law") {
  const auto s = s7();
  const auto zero = el(s, "0"), a = el(s, "a");

  const auto idem = validate_axioms(s.with_sum(a, a, zero));
  CHECK_FALSE(idem.ok);
  REQUIRE(idem.violates(Law::add_idempotent));
  const Violation* v = idem.find(Law::add_idempotent);
  CHECK(v->arity == 1);
  CHECK(v->witness[0] == a);
  CHECK(law_name(v->law) == "x+x=x");

  const auto mutant = s.with_product(zero, a, a);
  const auto dist = validate_axioms(mutant);
  CHECK_FALSE(dist.ok);
  REQUIRE(dist.violates(Law::right_distributive));
  // (0 + a) a versus 0 a + a a, recomputed by hand.
  CHECK(mutant.product(mutant.sum(zero, a), a) == a);
  CHECK(mutant.sum(mutant.product(zero, a), mutant.product(a, a)) == zero);
  const Violation* r = dist.find(Law::right_distributive);
  CHECK(law_name(r->law) == "(x+y)z=xz+yz");
  CHECK(describe(mutant, *r).find("(x+y)z=xz+yz fails at") == 0);
}

TEST_CASE("validate_axioms agrees with the oracle on every algebra of order 2") {
  // All 2x2 table pairs, valid or not.
  for (std::uint32_t add = 0; add < 16; ++add) {
    for (std::uint32_t mul = 0; mul < 16; ++mul) {
      oracle::Alg a;
      a.n = 2;
      a.add = {{add & 1, add >> 1 & 1}, {add >> 2 & 1, add >> 3 & 1}};
      a.mul = {{mul & 1, mul >> 1 & 1}, {mul >> 2 & 1, mul >> 3 & 1}};
      CHECK(validate_axioms(oracle::to_algebra(a, "t")).ok ==
            oracle::is_ai_semiring(a));
    }
  }
}

TEST_CASE("structural errors are not law violations") {
  CHECK_THROWS_AS(FiniteAiSemiring("x", {"a", "b"}, {0, 0, 0}, {0, 0, 0, 0}),
                  StructuralError);
  CHECK_THROWS_AS(FiniteAiSemiring("x", {"a", "b"}, {0, 0, 0, 2}, {0, 0, 0, 0}),
                  StructuralError);
  CHECK_THROWS_AS(FiniteAiSemiring("x", {"a", "a"}, {0, 0, 0, 1}, {0, 0, 0, 0}),
                  StructuralError);
  CHECK_THROWS_AS(FiniteAiSemiring("x", {"a", "b c"}, {0, 0, 0, 1},
                                   {0, 0, 0, 0}),
                  StructuralError);
}

TEST_CASE("natural order") {
  SUBCASE("S7: 1 <= 0, a <= 0, 1 and a incomparable") {
    const auto s = s7();
    const auto o = natural_order(s);
    const auto zero = el(s, "0"), a = el(s, "a"), one = el(s, "1");
    CHECK(o.leq(one, zero));
    CHECK(o.leq(a, zero));
    CHECK_FALSE(o.leq(a, one));
    CHECK_FALSE(o.leq(one, a));
    CHECK(o.pairs().size() == 5);
  }
  SUBCASE("B21 covers") {
    const auto s = b21();
    const auto o = natural_order(s);
    std::set<std::pair<std::string, std::string>> got;
    for (auto [x, y] : o.covers()) got.emplace(s.element_name(x), s.element_name(y));
    const std::set<std::pair<std::string, std::string>> want{
        {"1", "ab"}, {"1", "ba"}, {"a", "0"}, {"b", "0"}, {"ab", "0"},
        {"ba", "0"}};
    CHECK(got == want);
    CHECK(hasse_diagram(s, o).find("covers: ") != std::string::npos);
  }
  SUBCASE("one element") {
    const auto t = FiniteAiSemiring("t", {"o"}, {0}, {0});
    CHECK(natural_order(t).pairs().size() == 1);
    CHECK(natural_order(t).covers().empty());
  }
  SUBCASE("joins are least upper bounds") {
    for (const auto& alg : oracle::small_pool()) {
      const auto s = oracle::to_algebra(alg, "p");
      const auto o = natural_order(s);
      for (std::size_t x = 0; x < alg.n; ++x)
        for (std::size_t y = 0; y < alg.n; ++y) {
          const auto j = element(alg.add[x][y]);
          REQUIRE(o.leq(element(x), j));
          REQUIRE(o.leq(element(y), j));
          for (std::size_t z = 0; z < alg.n; ++z) {
            if (o.leq(element(x), element(z)) && o.leq(element(y), element(z)))
              REQUIRE(o.leq(j, element(z)));
          }
        }
    }
  }
}

TEST_CASE("direct products and subalgebras") {
  const auto p = direct_product(s7(), b21());
  CHECK(p.size() == 18);
  CHECK(validate_axioms(p).ok);
  CHECK(p.element_name(element(0 * 6 + 4)) == "(0,ab)");
  CHECK_THROWS_AS(direct_product(b21(), b21(), 30), GuardError);

  const auto b = b21();
  const std::vector<ElementId> gens{el(b, "a")};
  const Subalgebra sub = subalgebra_generated(b, gens);
  // a, a+a = a, a a = 0.
  CHECK(sub.algebra.size() == 2);
  CHECK(validate_axioms(sub.algebra).ok);
  const std::vector<ElementId> two{el(b, "a"), el(b, "b")};
  const Subalgebra sub2 = subalgebra_generated(b, two);
  CHECK(sub2.algebra.size() == 5);  // a b ab ba 0
  CHECK_THROWS_AS(subalgebra_generated(b, std::vector<ElementId>{}),
                  std::invalid_argument);
}

TEST_CASE("embedding and isomorphism search") {
  SUBCASE("the chain M2 -> S7 -> B21") {
    auto e1 = find_embeddings(m2(), s7());
    REQUIRE(e1.maps.size() == 1);
    CHECK(is_embedding(m2(), s7(), e1.maps[0]));
    auto e2 = find_embeddings(s7(), b21());
    REQUIRE(e2.maps.size() == 1);
    CHECK(is_embedding(s7(), b21(), e2.maps[0]));
    CHECK(find_embeddings(b21(), s7()).maps.empty());
    CHECK(find_embeddings(b21(), s7()).status == SearchStatus::exhausted);
  }
  SUBCASE("B21 into SIGMA7") {
    CHECK_FALSE(find_embeddings(b21(), sigma7()).maps.empty());
  }
  SUBCASE("isomorphism with a renamed copy") {
    const auto s = b21();
    const auto r = FiniteAiSemiring("r", {"z", "i", "p", "q", "pq", "qp"},
                                    {s.add_table().begin(), s.add_table().end()},
                                    {s.mul_table().begin(), s.mul_table().end()});
    CHECK(find_isomorphism(s, r).map.has_value());
    CHECK_FALSE(find_isomorphism(s, sigma7()).map.has_value());
  }
  SUBCASE("embedding counts match exhaustive enumeration") {
    const auto& pool = oracle::small_pool();
    for (std::size_t i = 0; i < pool.size(); i += 37) {
      for (std::size_t j = 0; j < pool.size(); j += 53) {
        if (pool[i].n > pool[j].n) continue;
        const auto a = oracle::to_algebra(pool[i], "a");
        const auto b = oracle::to_algebra(pool[j], "b");
        EmbeddingSearchOptions all;
        all.limit = 1000;
        const auto r = find_embeddings(a, b, all);
        REQUIRE(r.status == SearchStatus::exhausted);
        CHECK(r.maps.size() == count_embeddings(pool[i], pool[j]));
        for (const auto& m : r.maps) CHECK(is_embedding(a, b, m));
      }
    }
  }
  SUBCASE("tiny budget is reported, not mistaken for absence") {
    EmbeddingSearchOptions o;
    o.node_budget = 1;
    const auto r = find_embeddings(b21(), sigma7(), o);
    if (r.maps.empty()) CHECK(r.inconclusive());
  }
}

TEST_CASE("text format round trip") {
  for (auto name : builtin_names()) {
    const auto s = builtin(name);
    const auto back = parse_algebra(format_algebra(s), s.name());
    CHECK(back == s);
  }
  const auto dir = std::filesystem::temp_directory_path() / "aisemi_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "mine.txt";
  save_algebra(path, b21());
  const auto loaded = load_algebra(path);
  CHECK(loaded.name() == "mine");
  CHECK(loaded.mul_table().size() == 36);
  std::filesystem::remove_all(dir);
}

TEST_CASE("parse errors carry line numbers") {
  const std::string bad =
      "# comment\n"
      "elements: 0 1\n"
      "add:\n"
      "0 0\n"
      "0 x\n"
      "mul:\n"
      "0 0\n"
      "0 1\n";
  try {
    parse_algebra(bad, "bad");
    FAIL("expected a StructuralError");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra("elements: a\nadd:\na\n", "t"), StructuralError);
}
