#include "aisemi/satisfaction.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <thread>

#include "aisemi/error.hpp"
#include "aisemi/pattern.hpp"
#include "aisemi/simd/kernels.hpp"

namespace aisemi {

ElementId evaluate(const Word& w, const FiniteAiSemiring& s,
                   const Assignment& assignment) {
  auto value_of = [&](const Letter& l) {
    auto it = assignment.find(l);
    if (it == assignment.end()) {
      throw Error("no value assigned to letter " + l.str());
    }
    return it->second;
  };
  ElementId acc = value_of(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) {
    acc = s.product(acc, value_of(w[i]));
  }
  return acc;
}

ElementId evaluate(const Term& t, const FiniteAiSemiring& s,
                   const Assignment& assignment) {
  const auto& words = t.summands();
  ElementId acc = evaluate(words[0], s, assignment);
  for (std::size_t i = 1; i < words.size(); ++i) {
    acc = s.sum(acc, evaluate(words[i], s, assignment));
  }
  return acc;
}

std::string_view to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::holds:
      return "holds";
    case VerdictStatus::fails:
      return "fails";
    case VerdictStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Assignment Witness::assignment() const {
  Assignment out;
  for (std::size_t i = 0; i < letters.size(); ++i) out[letters[i]] = values[i];
  return out;
}

std::string Witness::str(const FiniteAiSemiring& s) const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letters[i].str() + "=" + s.element_name(values[i]);
  }
  return out;
}

namespace {

std::optional<std::uint64_t> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return std::nullopt;
  return v;
}

}  // namespace

SatOptions SatOptions::from_environment() {
  SatOptions o;
  if (auto v = env_number("AISEMI_MAX_ASSIGNMENTS")) o.max_assignments = *v;
  if (auto v = env_number("AISEMI_NODE_BUDGET")) o.node_budget = *v;
  if (auto v = env_number("AISEMI_THREADS")) {
    o.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, *v));
  }
  return o;
}

namespace {

constexpr std::size_t kChunk = 1024;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// A term as lists of letter positions.
using CompiledTerm = std::vector<std::vector<std::uint32_t>>;

CompiledTerm compile(const Term& t, const std::vector<Letter>& letters) {
  CompiledTerm out;
  for (const Word& w : t.summands()) {
    std::vector<std::uint32_t> positions;
    for (const Letter& l : w) {
      auto it = std::find(letters.begin(), letters.end(), l);
      positions.push_back(static_cast<std::uint32_t>(it - letters.begin()));
    }
    out.push_back(std::move(positions));
  }
  return out;
}

// Saturating n^k; returns nullopt on overflow.
std::optional<std::uint64_t> power(std::uint64_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && r > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::nullopt;
    }
    r *= n;
  }
  return r;
}

// Evaluates both sides over blocks of consecutive assignments.
class ChunkScanner {
 public:
  ChunkScanner(const FiniteAiSemiring& s, std::size_t letter_count,
               const CompiledTerm& lhs, const CompiledTerm& rhs)
      : n_(s.order()),
        add_(s.add_table().data()),
        mul_(s.mul_table().data()),
        k_(letter_count),
        lhs_(lhs),
        rhs_(rhs),
        kernels_(simd::active_kernels()),
        values_(letter_count, std::vector<std::uint32_t>(kChunk)),
        left_(kChunk),
        right_(kChunk),
        scratch_(kChunk),
        digits_(letter_count) {}

  // First mismatch in [lo, hi), or kNone.  Gives up early (returning kNone)
  // once `cutoff` drops below the chunk being scanned.
  std::uint64_t scan(std::uint64_t lo, std::uint64_t hi,
                     const std::atomic<std::uint64_t>* cutoff) {
    set_digits(lo);
    for (std::uint64_t base = lo; base < hi; base += kChunk) {
      if (cutoff != nullptr && cutoff->load(std::memory_order_relaxed) < base) {
        return kNone;
      }
      const std::size_t count =
          static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, hi - base));
      fill(count);
      evaluate_term(lhs_, left_, count);
      evaluate_term(rhs_, right_, count);
      const std::size_t miss =
          kernels_.first_mismatch_u32(left_.data(), right_.data(), count);
      if (miss < count) return base + miss;
    }
    return kNone;
  }

 private:
  void set_digits(std::uint64_t index) {
    for (std::size_t j = 0; j < k_; ++j) {
      digits_[j] = static_cast<std::uint32_t>(index % n_);
      index /= n_;
    }
  }

  void fill(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < k_; ++j) values_[j][i] = digits_[j];
      for (std::size_t j = 0; j < k_; ++j) {
        if (++digits_[j] < n_) break;
        digits_[j] = 0;
      }
    }
  }

  void evaluate_word(const std::vector<std::uint32_t>& word,
                     std::vector<std::uint32_t>& out, std::size_t count) {
    if (word.size() == 1) {
      std::copy_n(values_[word[0]].begin(), count, out.begin());
      return;
    }
    kernels_.gather_u32(mul_, n_, values_[word[0]].data(),
                        values_[word[1]].data(), out.data(), count);
    for (std::size_t i = 2; i < word.size(); ++i) {
      kernels_.gather_u32(mul_, n_, out.data(), values_[word[i]].data(),
                          out.data(), count);
    }
  }

  void evaluate_term(const CompiledTerm& term, std::vector<std::uint32_t>& out,
                     std::size_t count) {
    evaluate_word(term[0], out, count);
    for (std::size_t s = 1; s < term.size(); ++s) {
      evaluate_word(term[s], scratch_, count);
      kernels_.gather_u32(add_, n_, out.data(), scratch_.data(), out.data(),
                          count);
    }
  }

  std::uint32_t n_;
  const std::uint32_t* add_;
  const std::uint32_t* mul_;
  std::size_t k_;
  const CompiledTerm& lhs_;
  const CompiledTerm& rhs_;
  const simd::KernelSet& kernels_;
  std::vector<std::vector<std::uint32_t>> values_;
  std::vector<std::uint32_t> left_, right_, scratch_;
  std::vector<std::uint32_t> digits_;
};

// First counterexample index over the whole space, or kNone.  The space is
// cut into slices by the value of the most significant letter; the result
// is the minimum over slices, so it does not depend on `threads`.
std::uint64_t first_counterexample(const FiniteAiSemiring& s,
                                   std::size_t letter_count,
                                   const CompiledTerm& lhs,
                                   const CompiledTerm& rhs,
                                   std::uint64_t total, unsigned threads) {
  const std::uint64_t slices = s.order();
  const std::uint64_t slice = total / slices;
  if (threads <= 1 || slices == 1) {
    ChunkScanner scanner(s, letter_count, lhs, rhs);
    return scanner.scan(0, total, nullptr);
  }
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    ChunkScanner scanner(s, letter_count, lhs, rhs);
    for (;;) {
      const std::uint64_t p = next.fetch_add(1);
      if (p >= slices) return;
      const std::uint64_t lo = p * slice;
      if (best.load() < lo) continue;
      const std::uint64_t hit = scanner.scan(lo, lo + slice, &best);
      if (hit == kNone) continue;
      std::uint64_t current = best.load();
      while (hit < current && !best.compare_exchange_weak(current, hit)) {
      }
    }
  };
  const unsigned count =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, slices));
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return best.load();
}

Witness decode(std::uint64_t index, const std::vector<Letter>& letters,
               std::uint32_t n) {
  Witness w;
  w.letters = letters;
  for (std::size_t j = 0; j < letters.size(); ++j) {
    w.values.push_back(element(index % n));
    index /= n;
  }
  return w;
}

}  // namespace

Verdict satisfies(const FiniteAiSemiring& s, const Identity& id,
                  const SatOptions& options) {
  const std::vector<Letter> letters = id.letters();
  const auto total = power(s.order(), letters.size());
  if (!total || *total > options.max_assignments) {
    Verdict v;
    v.status = VerdictStatus::inconclusive;
    v.note = std::to_string(s.size()) + "^" + std::to_string(letters.size()) +
             " assignments exceed the limit of " +
             std::to_string(options.max_assignments);
    return v;
  }
  // The witness is the first assignment breaking any of the equations.
  const auto equations = id.equations();
  std::uint64_t best = kNone;
  std::size_t best_equation = 0;
  for (std::size_t e = 0; e < equations.size(); ++e) {
    const CompiledTerm lhs = compile(equations[e].first, letters);
    const CompiledTerm rhs = compile(equations[e].second, letters);
    const std::uint64_t hit = first_counterexample(
        s, letters.size(), lhs, rhs, *total, options.threads);
    if (hit < best) {
      best = hit;
      best_equation = e;
    }
  }
  if (best == kNone) return Verdict{};
  Verdict v;
  v.status = VerdictStatus::fails;
  v.witness = decode(best, letters, s.order());
  v.failed_equation = best_equation;
  return v;
}

namespace {

bool subset(const std::set<Letter>& a, const std::set<Letter>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Witness witness_from(const FlatSemiring& f, const Substitution& phi,
                     const std::vector<Letter>& letters) {
  Witness w;
  w.letters = letters;
  for (const Letter& l : letters) {
    if (phi.contains(l)) {
      w.values.push_back(f.element_of(phi.at(l)).value());
    } else {
      w.values.push_back(f.zero());
    }
  }
  return w;
}

// Checks that every nonzero value of `from` is matched by `to`.  Returns a
// failing verdict, an inconclusive one, or nullopt if this side is clean.
std::optional<Verdict> check_values(const FlatSemiring& f, const Word& from,
                                    const Word& to,
                                    const std::vector<Letter>& letters,
                                    const SatOptions& options) {
  const auto from_content = content(from);
  const bool to_inside = subset(content(to), from_content);
  std::optional<Verdict> result;
  auto visit = [&](const Substitution& phi) {
    const MaybeWord value = phi.apply(from);
    if (!to_inside || phi.apply(to) != value) {
      Verdict v;
      v.status = VerdictStatus::fails;
      v.witness = witness_from(f, phi, letters);
      result = std::move(v);
      return false;
    }
    return true;
  };

  if (f.monoid_mode()) {
    Substitution empty;
    for (const Letter& l : from_content) empty.set(l, std::nullopt);
    if (!visit(empty)) return result;
  }
  PatternOptions po;
  po.monoid_mode = f.monoid_mode();
  po.node_budget = options.node_budget;
  for (const Word& target : f.words()) {
    const MatchStatus status = for_each_value(
        from, target, po,
        [&](const PatternMatch& m) { return visit(m.substitution); });
    if (result) return result;
    if (status == MatchStatus::inconclusive) {
      Verdict v;
      v.status = VerdictStatus::inconclusive;
      v.note = "value enumeration exceeded its node budget";
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict satisfies_flat_word_equation(const FlatSemiring& f, const Word& u,
                                     const Word& v, const SatOptions& options) {
  const std::vector<Letter> letters =
      Identity::equation(Term(u), Term(v)).letters();
  if (auto r = check_values(f, u, v, letters, options)) return *r;
  if (auto r = check_values(f, v, u, letters, options)) return *r;
  return Verdict{};
}

Verdict satisfies_zero_form_flat(const FlatSemiring& f, const Word& u,
                                 const SatOptions& options) {
  const Identity id = Identity::zero_form(u);
  if (f.monoid_mode()) {
    return satisfies(f.algebra(), id, options);
  }
  PatternOptions po;
  po.node_budget = options.node_budget;
  for (const Word& target : f.words()) {
    const PatternSearch search = find_embedding_value(u, target, po);
    if (search.status == MatchStatus::inconclusive) {
      Verdict v;
      v.status = VerdictStatus::inconclusive;
      v.note = "pattern search exceeded its node budget";
      return v;
    }
    if (search.status == MatchStatus::found) {
      // u takes a nonzero value p; with the fresh letter sent to a letter
      // a, z u = a p differs from p.
      Substitution phi = search.match->substitution;
      phi.set(id.fresh_letter(), Word(std::vector<Letter>{target[0]}));
      Verdict v;
      v.status = VerdictStatus::fails;
      v.witness = witness_from(f, phi, id.letters());
      v.failed_equation = 1;
      return v;
    }
  }
  return Verdict{};
}

std::string format_verdict(const Verdict& v, const FiniteAiSemiring& s) {
  std::string out(to_string(v.status));
  if (v.witness) out += ": " + v.witness->str(s);
  if (!v.note.empty()) out += " (" + v.note + ")";
  return out;
}

}  // namespace aisemi
