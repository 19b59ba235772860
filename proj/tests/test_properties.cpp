// Seeded property suites.  AISEMI_SEED overrides the base seed so a
// failure can be replayed; the seed in use is printed with every failure.

#include <doctest.h>

#include <cstdlib>
#include <random>

#include "aisemi/builtins.hpp"
#include "aisemi/isoterm.hpp"
#include "aisemi/satisfaction.hpp"
#include "oracles.hpp"

using namespace aisemi;

namespace {

std::uint64_t base_seed() {
  if (const char* s = std::getenv("AISEMI_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611;
}

Term random_term(std::mt19937_64& rng, std::size_t letters) {
  std::uniform_int_distribution<int> count(1, 2);
  std::vector<Word> ws;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) ws.push_back(oracle::random_word(rng, letters, 4));
  return Term(std::move(ws));
}

Identity random_identity(std::mt19937_64& rng, std::size_t letters) {
  std::uniform_int_distribution<int> kind(0, 5);
  switch (kind(rng)) {
    case 0:
      return Identity::zero_form(oracle::random_word(rng, std::min<std::size_t>(letters, 2), 3));
    case 1:
    case 2:
      return Identity::inequality(random_term(rng, letters), random_term(rng, letters));
    default:
      return Identity::equation(random_term(rng, letters), random_term(rng, letters));
  }
}

}  // namespace

TEST_CASE("a product satisfies an identity iff both factors do") {
  const std::uint64_t seed = base_seed();
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  const auto& pool = oracle::small_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int failures = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const Identity id = random_identity(rng, 3);
    const auto sa = oracle::to_algebra(a, "A");
    const auto sb = oracle::to_algebra(b, "B");
    const auto p = direct_product(sa, sb);
    const bool want = oracle::holds(a, id) && oracle::holds(b, id);
    const Verdict v = satisfies(p, id);
    if (v.holds() != want) {
      ++failures;
      INFO("case " << i << ": " << id.str());
      CHECK(v.holds() == want);
    }
    CHECK(oracle::holds(oracle::product_of(a, b), id) == want);
    if (v.fails()) {
      // The witness really is a counterexample.
      const auto asg = v.witness->assignment();
      const auto eq = id.equations()[v.failed_equation];
      CHECK(evaluate(eq.first, p, asg) != evaluate(eq.second, p, asg));
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("printed identities parse back to themselves") {
  const std::uint64_t seed = base_seed() + 1;
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 500; ++i) {
    const Identity id = random_identity(rng, 4);
    const std::string text = id.str();
    CAPTURE(text);
    const Identity back = parse_identity(text);
    CHECK(back == id);
    CHECK(back.str() == text);
  }
}

TEST_CASE("evaluation vectors multiply pointwise") {
  const std::uint64_t seed = base_seed() + 2;
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  const auto b = b21();
  const std::vector<Letter> ls{Letter("x"), Letter("y"), Letter("z")};
  for (int i = 0; i < 200; ++i) {
    const Word u = oracle::random_word(rng, 3, 5);
    const Word v = oracle::random_word(rng, 3, 5);
    CAPTURE(u.str());
    CAPTURE(v.str());
    const EvalVector eu = eval_vector(b, u, ls);
    const EvalVector ev = eval_vector(b, v, ls);
    CHECK(eval_vector(b, u.concat(v), ls) == pointwise_product(b, eu, ev));
    CHECK(pointwise_sum(b, eu, ev) == pointwise_sum(b, ev, eu));
  }
}

TEST_CASE("library verdicts match the recursive oracle on the pool") {
  const std::uint64_t seed = base_seed() + 3;
  CAPTURE(seed);
  std::mt19937_64 rng(seed);
  const auto& pool = oracle::small_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto& a = pool[pick(rng)];
    const Identity id = random_identity(rng, 3);
    CAPTURE(id.str());
    CHECK(satisfies(oracle::to_algebra(a, "A"), id).holds() == oracle::holds(a, id));
  }
}
