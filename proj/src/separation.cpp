#include "aisemi/separation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "aisemi/builtins.hpp"
#include "aisemi/error.hpp"
#include "aisemi/flat.hpp"
#include "aisemi/homomorphism.hpp"
#include "aisemi/isoterm.hpp"
#include "aisemi/pattern.hpp"

namespace aisemi {

namespace {

FlatSemiring flat_of(const Word& w) {
  return build_flat(std::span<const Word>(&w, 1));
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

// Runs body(i) for i in [0, count) on up to `threads` workers.  Results go
// into caller-owned slots indexed by i, so the outcome does not depend on
// scheduling.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<Word> all_words(const std::vector<std::string>& alphabet,
                            std::size_t max_len) {
  std::vector<Word> out;
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& prefix : layer) {
      for (const auto& a : alphabet) {
        auto w = prefix;
        w.emplace_back(a);
        next.push_back(std::move(w));
      }
    }
    for (const auto& w : next) out.emplace_back(w);
    layer = std::move(next);
  }
  return out;
}

}  // namespace

FiniteAiSemiring build_An(std::size_t n, const FiniteAiSemiring& s7_factor) {
  const FlatSemiring f = flat_of(wn(n));
  return direct_product(s7_factor, f.algebra()).renamed("A" + std::to_string(n));
}

FiniteAiSemiring build_An(std::size_t n) { return build_An(n, s7()); }

bool same_commutative_normal_form(const Word& u, const Word& v) {
  std::vector<Letter> a(u.begin(), u.end());
  std::vector<Letter> b(v.begin(), v.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SigmaCell sigma_cell(std::size_t n, std::size_t m,
                     const FiniteAiSemiring& s7_factor,
                     const SatOptions& options) {
  SigmaCell cell;
  cell.n = n;
  cell.m = m;
  const Word u = wn(m);
  const Word v = wn_prime(m);
  if (m > 3 && s7_factor.is_multiplicatively_commutative()) {
    cell.s7_route = "commutative normal form";
    cell.s7_side.status = same_commutative_normal_form(u, v)
                              ? VerdictStatus::holds
                              : VerdictStatus::inconclusive;
  } else {
    cell.s7_route = "brute force";
    cell.s7_side = satisfies(s7_factor, Identity::equation(u, v), options);
  }
  cell.flat_side = satisfies_flat_word_equation(flat_of(wn(n)), u, v, options);
  cell.holds = cell.s7_side.holds() && cell.flat_side.holds();
  return cell;
}

bool sigma_holds(std::size_t n, std::size_t m) {
  return sigma_cell(n, m, s7()).holds;
}

std::string format_subset(std::uint32_t bits, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 1; i <= n; ++i) {
    if (!(bits >> (i - 1) & 1u)) continue;
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

PowersetReport verify_powerset_embedding(
    const std::vector<std::vector<bool>>& matrix) {
  PowersetReport r;
  r.n = matrix.size();
  if (r.n > 16) throw GuardError("powerset check limited to 16 indices");
  const std::uint32_t full = (1u << r.n) - 1;
  for (std::uint32_t subset = 0; subset <= full; ++subset) {
    std::uint32_t sat = 0;
    for (std::size_t j = 1; j <= r.n; ++j) {
      bool all = true;
      for (std::size_t m = 1; m <= r.n && all; ++m) {
        if (subset >> (m - 1) & 1u) all = matrix[m - 1][j - 1];
      }
      if (all) sat |= 1u << (j - 1);
    }
    r.entries.push_back({subset, sat, sat == (full & ~subset)});
  }
  for (const auto& a : r.entries) {
    for (const auto& b : r.entries) {
      ++r.pairs_checked;
      const bool included = (a.subset & ~b.subset) == 0;
      const bool reversed = (b.satisfied & ~a.satisfied) == 0;
      if (included != reversed) ++r.order_failures;
    }
  }
  r.ok = r.order_failures == 0 &&
         std::all_of(r.entries.begin(), r.entries.end(),
                     [](const PowersetEntry& e) { return e.ok; });
  return r;
}

SeparationReport separation_matrix(std::size_t n,
                                   const FiniteAiSemiring& s7_factor,
                                   unsigned threads) {
  SeparationReport r;
  r.n = n;
  r.cells.resize(n * n);
  r.cell_millis.resize(n * n);
  parallel_for(n * n, threads, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    r.cells[i] = sigma_cell(i / n + 1, i % n + 1, s7_factor);
    r.cell_millis[i] = elapsed_ms(start);
  });
  r.matrix.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n * n; ++i) {
    r.matrix[i / n][i % n] = r.cells[i].holds;
  }
  r.powerset = verify_powerset_embedding(r.matrix);
  return r;
}

PowersetReport verify_powerset_embedding(std::size_t n) {
  return separation_matrix(n, s7()).powerset;
}

SampledCheck sampled_sigma_check(std::size_t n, std::size_t m,
                                 std::uint64_t samples, std::uint64_t seed,
                                 const FiniteAiSemiring& s7_factor) {
  const FlatSemiring flat = flat_of(wn(n));
  const FiniteAiSemiring a = build_An(n, s7_factor);
  const std::uint32_t width = flat.algebra().order();
  const Word u = wn(m);
  const Word v = wn_prime(m);
  const Identity sigma = Identity::equation(u, v);
  const std::vector<Letter> letters = sigma.letters();

  auto index_in = [&](const Word& w) {
    std::vector<std::size_t> out;
    for (const Letter& l : w) {
      out.push_back(static_cast<std::size_t>(
          std::find(letters.begin(), letters.end(), l) - letters.begin()));
    }
    return out;
  };
  const auto ui = index_in(u);
  const auto vi = index_in(v);
  auto eval = [&](const std::vector<std::size_t>& idx,
                  const std::vector<ElementId>& asg) {
    ElementId acc = asg[idx[0]];
    for (std::size_t i = 1; i < idx.size(); ++i) {
      acc = a.product(acc, asg[idx[i]]);
    }
    return acc;
  };

  // Flat components taken from values of u inside w_n.
  std::vector<std::vector<std::uint32_t>> planted_flat;
  for_each_value(u, wn(n), {}, [&](const PatternMatch& match) {
    std::vector<std::uint32_t> comp(letters.size(), index_of(flat.zero()));
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (!match.substitution.contains(letters[i])) continue;
      if (auto e = flat.element_of(match.substitution.at(letters[i]))) {
        comp[i] = index_of(*e);
      }
    }
    planted_flat.push_back(std::move(comp));
    return planted_flat.size() < 10'000;
  });

  SampledCheck out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick_s7(0, s7_factor.order() - 1);
  std::uniform_int_distribution<std::uint32_t> pick_a(0, a.order() - 1);
  const std::uint64_t planted_budget =
      planted_flat.empty()
          ? 0
          : std::min<std::uint64_t>(samples / 10, planted_flat.size() * 8);
  std::vector<ElementId> asg(letters.size());
  for (std::uint64_t s = 0; s < samples; ++s) {
    if (s < planted_budget) {
      const auto& comp = planted_flat[s % planted_flat.size()];
      for (std::size_t i = 0; i < letters.size(); ++i) {
        asg[i] = element(pick_s7(rng) * width + comp[i]);
      }
      ++out.planted;
    } else {
      for (auto& e : asg) e = element(pick_a(rng));
    }
    ++out.samples;
    if (eval(ui, asg) != eval(vi, asg)) {
      out.counterexample = true;
      out.witness = Witness{letters, asg}.str(a);
      break;
    }
  }
  return out;
}

AgreementReport flat_fast_path_agreement(std::size_t max_v,
                                         std::size_t max_u) {
  AgreementReport r;
  const auto vs = all_words({"a", "b", "c"}, max_v);
  const auto us = all_words({"x", "y"}, max_u);
  auto record = [&](const std::string& what, const Verdict& fast,
                    const Verdict& slow) {
    ++r.cases;
    if (fast.status == slow.status) return;
    if (r.disagreements++ == 0) {
      r.first_disagreement = what + ": fast " +
                             std::string(to_string(fast.status)) +
                             ", exhaustive " +
                             std::string(to_string(slow.status));
    }
  };
  for (const Word& v : vs) {
    const FlatSemiring f = flat_of(v);
    const std::string in = " in S(" + v.str() + ")";
    for (const Word& u : us) {
      record(u.str() + " = 0" + in, satisfies_zero_form_flat(f, u),
             satisfies(f.algebra(), Identity::zero_form(u)));
      for (const Word& u2 : us) {
        record(u.str() + " = " + u2.str() + in,
               satisfies_flat_word_equation(f, u, u2),
               satisfies(f.algebra(), Identity::equation(u, u2)));
      }
    }
  }
  return r;
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckResult check_axioms(const FiniteAiSemiring& s7f) {
  CheckResult c{"R1",
                "semiring axioms hold for S7, B21, Sigma7, M2, M(abacdc) and "
                "S(w_n), n <= 5; two S7 mutations are rejected",
                true, "", 0};
  std::vector<FiniteAiSemiring> algebras{s7f, b21(), sigma7(), m2(),
                                         m_abacdc()};
  for (std::size_t n = 1; n <= 5; ++n) algebras.push_back(flat_of(wn(n)).algebra());
  std::string failed;
  for (const auto& s : algebras) {
    const ValidationReport rep = validate_axioms(s);
    if (!rep.ok) {
      c.pass = false;
      failed += " " + s.name() + " (" + describe(s, rep.violations.front()) +
                ")";
    }
  }
  const auto zero = s7f.find_element("0");
  const auto a = s7f.find_element("a");
  bool mutants = false;
  if (zero && a) {
    const auto idem = validate_axioms(s7f.with_sum(*a, *a, *zero));
    const auto dist = validate_axioms(s7f.with_product(*zero, *a, *a));
    mutants = idem.violates(Law::add_idempotent) &&
              (dist.violates(Law::left_distributive) ||
               dist.violates(Law::right_distributive));
  }
  c.pass = c.pass && mutants;
  c.detail = failed.empty() ? "all " + std::to_string(algebras.size()) +
                                  " algebras validate"
                            : "axiom failures:" + failed;
  c.detail += "; mutations rejected: " + yes_no(mutants);
  return c;
}

CheckResult check_embeddings(const FiniteAiSemiring& s7f) {
  CheckResult c{"R2", "M2 embeds in S7, S7 embeds in B21, M(a) is isomorphic "
                      "to S7",
                false, "", 0};
  const bool m2_s7 = !find_embeddings(m2(), s7f).maps.empty();
  const bool s7_b21 = !find_embeddings(s7f, b21()).maps.empty();
  FlatOptions mono;
  mono.monoid = true;
  const Word a{"a"};
  const FlatSemiring ma = build_flat(std::span<const Word>(&a, 1), mono);
  const auto iso = find_isomorphism(ma.algebra(), s7f);
  const bool ma_s7 = iso.map && is_embedding(ma.algebra(), s7f, *iso.map);
  c.pass = m2_s7 && s7_b21 && ma_s7;
  c.detail = "M2->S7 " + yes_no(m2_s7) + ", S7->B21 " + yes_no(s7_b21) +
             ", M(a)~S7 " + yes_no(ma_s7);
  return c;
}

CheckResult check_freeness(std::size_t n_max) {
  CheckResult c{"R3",
                "w_n contains a value of w_m, or of w_m', exactly when n = m",
                true, "", 0};
  std::size_t wrong = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t m = 1; m <= n_max; ++m) {
      const bool expect = n != m;
      if (is_free(wn(n), wn(m)) != expect) ++wrong;
      if (is_free(wn(n), wn_prime(m)) != expect) ++wrong;
    }
  }
  c.pass = wrong == 0;
  c.detail = std::to_string(2 * n_max * n_max) + " pairs, " +
             std::to_string(wrong) + " wrong";
  return c;
}

CheckResult check_corollary_witnesses() {
  CheckResult c{"R4",
                "in B21, psi(xyxztz) = ab and psi(xyzxtz) = 0 for x,t -> a "
                "and y,z -> b; phi(yztz) = a for y -> a and z,t -> 1",
                false, "", 0};
  const FiniteAiSemiring b = b21();
  auto el = [&](const char* name) { return *b.find_element(name); };
  const Assignment psi{{Letter("x"), el("a")}, {Letter("t"), el("a")},
                       {Letter("y"), el("b")}, {Letter("z"), el("b")}};
  const Assignment phi{{Letter("y"), el("a")}, {Letter("z"), el("1")},
                       {Letter("t"), el("1")}};
  const ElementId v1 = evaluate(Word{"x", "y", "x", "z", "t", "z"}, b, psi);
  const ElementId v2 = evaluate(Word{"x", "y", "z", "x", "t", "z"}, b, psi);
  const ElementId v3 = evaluate(Word{"y", "z", "t", "z"}, b, phi);
  c.pass = v1 == el("ab") && v2 == el("0") && v3 == el("a");
  c.detail = "psi(xyxztz)=" + b.element_name(v1) +
             " psi(xyzxtz)=" + b.element_name(v2) +
             " phi(yztz)=" + b.element_name(v3);
  return c;
}

CheckResult check_flat_agreement() {
  CheckResult c{"R5",
                "fast flat-semiring decisions agree with exhaustive "
                "evaluation (|v| <= 4 over 3 letters, |u| <= 3 over 2)",
                false, "", 0};
  const AgreementReport r = flat_fast_path_agreement();
  c.pass = r.disagreements == 0;
  c.detail = std::to_string(r.cases) + " cases, " +
             std::to_string(r.disagreements) + " disagreements";
  if (!r.first_disagreement.empty()) c.detail += "; " + r.first_disagreement;
  return c;
}

CheckResult check_isoterms(const FiniteAiSemiring& s7f) {
  CheckResult c{"R6",
                "z2, z3, yztz and xyxztz are minimal for B21; every w_n is "
                "an isoterm for B21 and M(abacdc) but not certified for S7",
                true, "", 0};
  const FiniteAiSemiring b = b21();
  const std::vector<Word> words{zimin(2), zimin(3), Word{"y", "z", "t", "z"},
                                Word{"x", "y", "x", "z", "t", "z"}};
  for (const Word& w : words) {
    const MinimalityVerdict v = is_minimal_exact(b, w);
    const bool ok =
        v.status == MinimalityStatus::minimal && v.dominance_exact;
    c.pass = c.pass && ok;
    c.detail += w.str() + ": " + std::string(to_string(v.status)) + "; ";
  }
  const bool cb = certify_wn_isoterms(b).issued;
  const bool cm = certify_wn_isoterms(m_abacdc()).issued;
  const bool cs = certify_wn_isoterms(s7f).issued;
  c.pass = c.pass && cb && cm && !cs;
  c.detail += "certificates B21 " + yes_no(cb) + ", M(abacdc) " + yes_no(cm) +
              ", S7 " + yes_no(cs);
  return c;
}

std::string matrix_text(const SeparationReport& r) {
  std::string out;
  for (std::size_t n = 0; n < r.n; ++n) {
    out += "    A" + std::to_string(n + 1) + ":";
    for (std::size_t m = 0; m < r.n; ++m) out += r.matrix[n][m] ? " 1" : " 0";
    out += "\n";
  }
  return out;
}

}  // namespace

Reproduction reproduce(const ReproduceOptions& options) {
  Reproduction out;
  out.options = options;
  const FiniteAiSemiring s7f = options.s7_override.value_or(s7());
  const std::size_t n = std::max<std::size_t>(1, options.max_n);

  auto timed = [&](const std::function<CheckResult()>& run) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = std::string("error: ") + e.what();
    }
    c.millis = elapsed_ms(start);
    out.checks.push_back(std::move(c));
  };

  timed([&] { return check_axioms(s7f); });
  timed([&] { return check_embeddings(s7f); });
  timed([&] { return check_freeness(n); });
  timed([&] { return check_corollary_witnesses(); });
  timed([&] { return check_flat_agreement(); });
  timed([&] { return check_isoterms(s7f); });

  timed([&] {
    CheckResult c{"R7", "A_n satisfies w_m = w_m' exactly when n != m", false,
                  "", 0};
    out.separation = separation_matrix(n, s7f, options.threads);
    std::size_t wrong = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (out.separation.matrix[i][j] != (i != j)) ++wrong;
      }
    }
    c.pass = wrong == 0;
    c.detail = std::to_string(n * n) + " cells, " + std::to_string(wrong) +
               " wrong";
    return c;
  });

  timed([&] {
    CheckResult c{"R8",
                  "M -> V({A_m : m in M}) reverses inclusion: sat(M) is the "
                  "complement of M",
                  false, "", 0};
    const PowersetReport& p = out.separation.powerset;
    c.pass = p.ok && !p.entries.empty();
    std::size_t bad = 0;
    for (const auto& e : p.entries) bad += e.ok ? 0 : 1;
    c.detail = std::to_string(p.entries.size()) + " subsets (" +
               std::to_string(bad) + " wrong), " +
               std::to_string(p.pairs_checked) + " pairs (" +
               std::to_string(p.order_failures) + " wrong)";
    return c;
  });

  timed([&] {
    CheckResult c{"R9",
                  "sampled assignments on A_1 find a counterexample to "
                  "w_m = w_m' exactly when the factorwise verdict fails",
                  true, "", 0};
    for (std::size_t m = 1; m <= 2; ++m) {
      const SampledCheck s = sampled_sigma_check(1, m, options.samples,
                                                 options.seed + m, s7f);
      const bool exact = sigma_cell(1, m, s7f).holds;
      c.pass = c.pass && (s.counterexample == !exact);
      c.detail += "m=" + std::to_string(m) + ": " +
                  (s.counterexample ? "counterexample after " +
                                          std::to_string(s.samples) +
                                          " samples"
                                    : "none in " + std::to_string(s.samples) +
                                          " samples") +
                  "; ";
    }
    c.detail.resize(c.detail.size() - 2);
    return c;
  });

  timed([&] {
    CheckResult c{"R10",
                  "sorted-word shortcut for S7 agrees with the exhaustive "
                  "scan of w_m = w_m'",
                  true, "", 0};
    const std::size_t upto = std::min<std::size_t>(3, n);
    for (std::size_t m = 1; m <= upto; ++m) {
      const bool shortcut = s7f.is_multiplicatively_commutative() &&
                            same_commutative_normal_form(wn(m), wn_prime(m));
      const bool scan =
          satisfies(s7f, Identity::equation(wn(m), wn_prime(m))).holds();
      c.pass = c.pass && shortcut == scan;
    }
    c.detail = "m = 1.." + std::to_string(upto);
    return c;
  });

  out.all_pass = std::all_of(out.checks.begin(), out.checks.end(),
                             [](const CheckResult& c) { return c.pass; });
  return out;
}

std::string Reproduction::text(bool with_timing) const {
  std::string out = "reproduce: N = " + std::to_string(separation.n) + "\n";
  for (const CheckResult& c : checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.id + "  " + c.citation + "\n";
    out += "    " + c.detail;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.1f ms]", c.millis);
      out += buf;
    }
    out += "\n";
    if (c.id == "R7" && !separation.matrix.empty()) {
      out += "    rows A_n, columns w_m = w_m' (1 = satisfied):\n";
      out += matrix_text(separation);
    }
  }
  std::size_t passed = 0;
  for (const CheckResult& c : checks) passed += c.pass ? 1 : 0;
  out += std::to_string(passed) + "/" + std::to_string(checks.size()) +
         " checks passed\n";
  return out;
}

std::string Reproduction::summary() const {
  std::string out;
  for (const CheckResult& c : checks) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", c.millis);
    out += c.id + "\t" + c.citation + "\t" + (c.pass ? "pass" : "fail") +
           "\t" + buf + "\n";
  }
  return out;
}

}  // namespace aisemi
