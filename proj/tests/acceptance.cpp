// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.  A criterion passes only if its result is right and it
// finishes inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "aisemi/builtins.hpp"
#include "aisemi/flat.hpp"
#include "aisemi/homomorphism.hpp"
#include "aisemi/isoterm.hpp"
#include "aisemi/pattern.hpp"
#include "aisemi/satisfaction.hpp"
#include "aisemi/separation.hpp"
#include "oracles.hpp"

using namespace aisemi;

namespace {

// Status and witness indices, comparable across runs.
std::string signature(const Verdict& v) {
  std::string out(to_string(v.status));
  if (v.witness)
    for (auto e : v.witness->values) out += " " + std::to_string(index_of(e));
  return out;
}

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string what;
  double budget_ms;  // 0 = no budget
  std::function<Outcome()> run;
};

FlatSemiring flat(const Word& w, bool monoid = false) {
  FlatOptions o;
  o.monoid = monoid;
  return build_flat(std::span<const Word>(&w, 1), o);
}

Outcome axioms() {
  std::vector<FiniteAiSemiring> algebras{s7(), b21(), sigma7(), m2(), m_abacdc()};
  for (std::size_t n = 1; n <= 5; ++n) algebras.push_back(flat(wn(n)).algebra());
  for (const auto& s : algebras) {
    const auto r = validate_axioms(s);
    if (!r.ok) return {false, s.name() + ": " + describe(s, r.violations.front())};
  }
  const auto s = s7();
  const auto zero = *s.find_element("0");
  const auto a = *s.find_element("a");
  const auto idem = validate_axioms(s.with_sum(a, a, zero));
  const auto dist = validate_axioms(s.with_product(zero, a, a));
  if (!idem.violates(Law::add_idempotent)) return {false, "a+a=0 mutant accepted"};
  if (!dist.violates(Law::right_distributive)) return {false, "0*a=a mutant accepted"};
  return {true, std::to_string(algebras.size()) + " algebras validate; mutants: " +
                    describe(s, idem.violations.front()) + "; " +
                    describe(s, dist.violations.front())};
}

Outcome embedding_chain() {
  const bool m2_s7 = !find_embeddings(m2(), s7()).maps.empty();
  const bool s7_b21 = !find_embeddings(s7(), b21()).maps.empty();
  const bool ma_s7 = find_isomorphism(flat(Word{"a"}, true).algebra(), s7()).map.has_value();
  return {m2_s7 && s7_b21 && ma_s7,
          std::string("M2->S7 ") + (m2_s7 ? "yes" : "no") + ", S7->B21 " +
              (s7_b21 ? "yes" : "no") + ", M(a)=S7 " + (ma_s7 ? "yes" : "no")};
}

Outcome freeness() {
  std::size_t wrong = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = 1; m <= 5; ++m) {
      if (is_free(wn(n), wn(m)) != (n != m)) ++wrong;
      if (is_free(wn(n), wn_prime(m)) != (n != m)) ++wrong;
    }
  return {wrong == 0, "50 pairs, " + std::to_string(wrong) + " wrong"};
}

Outcome witnesses() {
  const auto b = b21();
  const auto a = *b.find_element("a");
  const auto bb = *b.find_element("b");
  const Assignment psi{{Letter("x"), a}, {Letter("y"), bb}, {Letter("z"), bb},
                       {Letter("t"), a}};
  const auto one = b.multiplicative_identity().value();
  const Assignment phi{{Letter("y"), a}, {Letter("z"), one}, {Letter("t"), one}};
  const auto v1 = b.element_name(evaluate(Word::parse("x y x z t z"), b, psi));
  const auto v2 = b.element_name(evaluate(Word::parse("x y z x t z"), b, psi));
  const auto v3 = b.element_name(evaluate(Word::parse("y z t z"), b, phi));
  return {v1 == "ab" && v2 == "0" && v3 == "a",
          "psi(xyxztz)=" + v1 + " psi(xyzxtz)=" + v2 + " phi(yztz)=" + v3};
}

Outcome flat_agreement() {
  const AgreementReport r = flat_fast_path_agreement(4, 3);
  return {r.disagreements == 0 && r.cases > 0,
          std::to_string(r.cases) + " cases, " + std::to_string(r.disagreements) +
              " disagreements" +
              (r.first_disagreement.empty() ? "" : " (" + r.first_disagreement + ")")};
}

Outcome isoterms() {
  const auto b = b21();
  std::string detail;
  bool ok = true;
  for (const char* w : {"x1 x2 x1", "x1 x2 x1 x3 x1 x2 x1", "y z t z", "x y x z t z"}) {
    const auto v = is_minimal_exact(b, Word::parse(w));
    const bool good = v.status == MinimalityStatus::minimal && v.dominance_exact;
    ok = ok && good;
    detail += std::string(w) + ": " + std::string(to_string(v.status)) + "; ";
  }
  const bool cb = certify_wn_isoterms(b).issued;
  const bool cm = certify_wn_isoterms(m_abacdc()).issued;
  const bool cs = certify_wn_isoterms(s7()).issued;
  ok = ok && cb && cm && !cs;
  detail += std::string("certificates B21 ") + (cb ? "issued" : "refused") +
            ", M(abacdc) " + (cm ? "issued" : "refused") + ", S7 " +
            (cs ? "issued" : "refused");
  return {ok, detail};
}

SeparationReport g_separation;

Outcome separation() {
  g_separation = separation_matrix(3, s7(), 1);
  std::string rows;
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    rows += "A" + std::to_string(n) + ":";
    for (std::size_t m = 1; m <= 3; ++m) {
      const bool h = g_separation.matrix[n - 1][m - 1];
      ok = ok && h == (n != m) && sigma_holds(n, m) == h;
      rows += h ? " 1" : " 0";
    }
    rows += "  ";
  }
  return {ok, rows};
}

Outcome powerset() {
  const PowersetReport r = verify_powerset_embedding(g_separation.matrix);
  std::size_t good = 0;
  for (const auto& e : r.entries) good += e.ok;
  return {r.ok && r.entries.size() == 8 && r.pairs_checked == 64,
          std::to_string(good) + "/8 subsets, " + std::to_string(r.pairs_checked) +
              " pairs, " + std::to_string(r.order_failures) + " order failures"};
}

Outcome determinism() {
  std::size_t mismatches = 0;
  const auto sg = sigma7();
  for (const char* text : {"x y z x = x z y x", "x y x z t z = x y z x t z",
                           "x y + y x <= x + y", "x y z = 0"}) {
    const Identity id = parse_identity(text);
    SatOptions one;
    const std::string ref = format_verdict(satisfies(sg, id, one), sg);
    for (unsigned t : {2u, 4u, 7u}) {
      SatOptions many;
      many.threads = t;
      if (format_verdict(satisfies(sg, id, many), sg) != ref) ++mismatches;
    }
    if (format_verdict(satisfies(sg, id, one), sg) != ref) ++mismatches;
  }
  const auto s1 = separation_matrix(3, s7(), 1);
  const auto s4 = separation_matrix(3, s7(), 4);
  if (s1.matrix != s4.matrix) ++mismatches;
  for (std::size_t i = 0; i < s1.cells.size(); ++i)
    if (signature(s1.cells[i].flat_side) !=
        signature(s4.cells[i].flat_side))
      ++mismatches;
  const auto m1 = is_minimal_exact(s7(), Word::parse("x y x z t z"));
  const auto m2v = is_minimal_exact(s7(), Word::parse("x y x z t z"));
  if (!m1.witness || !m2v.witness || m1.witness->str() != m2v.witness->str()) ++mismatches;
  if (sampled_sigma_check(1, 1, 50000, 3, s7()).witness !=
      sampled_sigma_check(1, 1, 50000, 3, s7()).witness)
    ++mismatches;
  ReproduceOptions r1;
  r1.max_n = 2;
  r1.samples = 50000;
  ReproduceOptions r4 = r1;
  r4.threads = 4;
  if (reproduce(r1).text() != reproduce(r4).text()) ++mismatches;
  return {mismatches == 0, std::to_string(mismatches) + " mismatches"};
}

Identity random_identity(std::mt19937_64& rng, std::size_t letters) {
  std::uniform_int_distribution<int> kind(0, 3), count(1, 2);
  auto term = [&] {
    std::vector<Word> ws;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) ws.push_back(oracle::random_word(rng, letters, 4));
    return Term(std::move(ws));
  };
  switch (kind(rng)) {
    case 0:
      return Identity::zero_form(oracle::random_word(rng, 2, 3));
    case 1:
      return Identity::inequality(term(), term());
    default:
      return Identity::equation(term(), term());
  }
}

Outcome properties() {
  std::mt19937_64 rng(20240611);
  const auto& pool = oracle::small_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t product_fail = 0, parse_fail = 0, vector_fail = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const Identity id = random_identity(rng, 3);
    const auto p = direct_product(oracle::to_algebra(a, "A"), oracle::to_algebra(b, "B"));
    if (satisfies(p, id).holds() != (oracle::holds(a, id) && oracle::holds(b, id)))
      ++product_fail;
  }
  for (int i = 0; i < 500; ++i) {
    const Identity id = random_identity(rng, 4);
    try {
      if (!(parse_identity(id.str()) == id)) ++parse_fail;
    } catch (const std::exception&) {
      ++parse_fail;
    }
  }
  const auto b = b21();
  const std::vector<Letter> ls{Letter("x"), Letter("y"), Letter("z")};
  for (int i = 0; i < 200; ++i) {
    const Word u = oracle::random_word(rng, 3, 5);
    const Word v = oracle::random_word(rng, 3, 5);
    if (eval_vector(b, u.concat(v), ls) !=
        pointwise_product(b, eval_vector(b, u, ls), eval_vector(b, v, ls)))
      ++vector_fail;
  }
  return {product_fail + parse_fail + vector_fail == 0,
          "product law " + std::to_string(product_fail) + "/200, parser " +
              std::to_string(parse_fail) + "/500, vectors " +
              std::to_string(vector_fail) + "/200 failures"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"A1", "axioms and mutations", 1000, axioms},
      {"A2", "embedding chain", 1000, embedding_chain},
      {"A3", "freeness matrix", 5000, freeness},
      {"A4", "B21 witnesses", 1, witnesses},
      {"A5", "flat fast paths vs brute force", 60000, flat_agreement},
      {"A6", "minimality and certificates", 600000, isoterms},
      {"A7", "separation matrix", 60000, separation},
      {"A8", "powerset order reversal", 1000, powerset},
      {"A9", "determinism across threads and runs", 0, determinism},
      {"A10", "property suites", 0, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_time = c.budget_ms == 0 || ms < c.budget_ms;
    const bool pass = o.ok && in_time;
    failures += !pass;
    std::printf("%s %-4s %-38s %10.3f ms  %s%s\n", pass ? "PASS" : "FAIL", c.id.c_str(),
                c.what.c_str(), ms, o.detail.c_str(),
                in_time ? "" : " [over time budget]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
