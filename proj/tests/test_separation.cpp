#include <doctest.h>

#include "aisemi/builtins.hpp"
#include "aisemi/separation.hpp"
#include "aisemi/word.hpp"

using namespace aisemi;

namespace {

// Status and witness indices, comparable across runs.
std::string signature(const Verdict& v) {
  std::string out(to_string(v.status));
  if (v.witness)
    for (auto e : v.witness->values) out += " " + std::to_string(index_of(e));
  return out;
}

// S7 with a + a = 0: not idempotent.
FiniteAiSemiring broken_s7() {
  const auto s = s7();
  return s.with_sum(*s.find_element("a"), *s.find_element("a"),
                    *s.find_element("0"));
}

}  // namespace

TEST_CASE("A_n sizes") {
  const auto a1 = build_An(1);
  CHECK(a1.size() == 3 * 64);
  CHECK(a1.name() == "A1");
  CHECK(validate_axioms(a1).ok);
  CHECK(build_An(2).size() == 3 * 102);
  CHECK(build_An(3).size() == 3 * 149);
}

TEST_CASE("sigma cells") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(sigma_holds(n, m) == (n != m));
    }
  const SigmaCell c = sigma_cell(2, 2, s7());
  CHECK_FALSE(c.holds);
  CHECK(c.s7_side.holds());
  CHECK(c.flat_side.fails());
  CHECK(c.s7_route == "brute force");
  CHECK(sigma_cell(1, 5, s7()).s7_route == "commutative normal form");

  CHECK(same_commutative_normal_form(wn(4), wn_prime(4)));
  CHECK_FALSE(same_commutative_normal_form(Word::parse("x x y"),
                                           Word::parse("x y y")));
}

TEST_CASE("powerset embedding") {
  const PowersetReport r2 = verify_powerset_embedding(
      std::vector<std::vector<bool>>{{false, true}, {true, false}});
  CHECK(r2.ok);
  REQUIRE(r2.entries.size() == 4);
  CHECK(r2.entries[0].satisfied == 0b11);  // empty set satisfies everything
  CHECK(r2.entries[1].satisfied == 0b10);  // {1} -> {2}
  CHECK(r2.entries[3].satisfied == 0b00);
  CHECK(r2.pairs_checked == 16);
  CHECK(format_subset(0b101, 3) == "{1,3}");
  CHECK(format_subset(0, 3) == "{}");

  // A matrix with A_1 failing sigma_2 breaks the complement property.
  const PowersetReport bad = verify_powerset_embedding(
      std::vector<std::vector<bool>>{{false, false}, {true, false}});
  CHECK_FALSE(bad.ok);

  const PowersetReport r3 = verify_powerset_embedding(3);
  CHECK(r3.ok);
  CHECK(r3.entries.size() == 8);
  CHECK(r3.pairs_checked == 64);
  CHECK(r3.order_failures == 0);
}

TEST_CASE("separation matrix is independent of the thread count") {
  const SeparationReport one = separation_matrix(3, s7(), 1);
  const SeparationReport four = separation_matrix(3, s7(), 4);
  CHECK(one.matrix == four.matrix);
  CHECK(one.powerset.ok);
  for (std::size_t i = 0; i < one.cells.size(); ++i) {
    CHECK(signature(one.cells[i].flat_side) ==
          signature(four.cells[i].flat_side));
  }
}

TEST_CASE("sampled check") {
  const SampledCheck same = sampled_sigma_check(1, 1, 20000, 7, s7());
  CHECK(same.counterexample);
  CHECK(same.planted > 0);
  CHECK_FALSE(same.witness.empty());
  const SampledCheck other = sampled_sigma_check(1, 2, 20000, 7, s7());
  CHECK_FALSE(other.counterexample);
  // Same seed, same answer.
  CHECK(sampled_sigma_check(1, 1, 20000, 7, s7()).witness == same.witness);
}

TEST_CASE("flat fast path agreement, small bounds") {
  const AgreementReport r = flat_fast_path_agreement(3, 2);
  CHECK(r.cases > 0);
  CHECK(r.disagreements == 0);
}

TEST_CASE("reproduce") {
  ReproduceOptions o;
  o.max_n = 1;
  o.samples = 20000;
  const Reproduction r = reproduce(o);
  CHECK(r.all_pass);
  CHECK(r.checks.size() == 10);
  CHECK(r.text() == reproduce(o).text());

  ReproduceOptions broken = o;
  broken.s7_override = broken_s7();
  const Reproduction rb = reproduce(broken);
  CHECK_FALSE(rb.all_pass);
  REQUIRE_FALSE(rb.checks.empty());
  CHECK(rb.checks[0].id == "R1");
  CHECK_FALSE(rb.checks[0].pass);
}
