#include "aisemi/isoterm.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string_view>

#include "aisemi/builtins.hpp"
#include "aisemi/error.hpp"
#include "aisemi/homomorphism.hpp"
#include "aisemi/simd/kernels.hpp"

namespace aisemi {

namespace {

constexpr ClassId kNone = std::numeric_limits<ClassId>::max();

std::uint64_t checked_entries(std::size_t n, std::size_t k,
                              std::uint64_t max_entries) {
  if (n > 256) {
    throw GuardError("evaluation vectors need at most 256 elements, got " +
                     std::to_string(n));
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > max_entries / std::max<std::size_t>(n, 1)) {
      throw GuardError("|S|^k = " + std::to_string(n) + "^" +
                       std::to_string(k) + " exceeds the limit of " +
                       std::to_string(max_entries) + " entries");
    }
    total *= n;
  }
  if (total > max_entries) {
    throw GuardError("evaluation vector exceeds the limit of " +
                     std::to_string(max_entries) + " entries");
  }
  return total;
}

// Coordinate vectors: proj[j][i] is the value of letter j in assignment i.
std::vector<std::vector<std::uint8_t>> projections(std::size_t n,
                                                   std::size_t k,
                                                   std::size_t entries) {
  std::vector<std::vector<std::uint8_t>> out(k,
                                             std::vector<std::uint8_t>(entries));
  std::size_t stride = 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < entries; ++i) {
      out[j][i] = static_cast<std::uint8_t>((i / stride) % n);
    }
    stride *= n;
  }
  return out;
}

std::size_t letter_index(std::span<const Letter> letters, const Letter& l) {
  auto it = std::find(letters.begin(), letters.end(), l);
  if (it == letters.end()) {
    throw std::invalid_argument("letter " + l.str() +
                                " is not among the vector letters");
  }
  return static_cast<std::size_t>(it - letters.begin());
}

Word word_from(std::span<const Letter> letters,
               const std::vector<std::size_t>& idx) {
  std::vector<Letter> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(letters[i]);
  return Word(std::move(out));
}

}  // namespace

EvalVector eval_vector(const FiniteAiSemiring& s, const Word& w,
                       std::span<const Letter> letters,
                       std::uint64_t max_entries) {
  const std::size_t entries =
      checked_entries(s.size(), letters.size(), max_entries);
  const auto proj = projections(s.size(), letters.size(), entries);
  const auto& k = simd::active_kernels();
  EvalVector out{proj[letter_index(letters, w[0])]};
  for (std::size_t i = 1; i < w.size(); ++i) {
    const auto& next = proj[letter_index(letters, w[i])];
    k.gather_u8(s.mul_table().data(), s.order(), out.values.data(),
                next.data(), out.values.data(), entries);
  }
  return out;
}

EvalVector pointwise_product(const FiniteAiSemiring& s, const EvalVector& a,
                             const EvalVector& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("evaluation vectors differ in length");
  }
  EvalVector out{std::vector<std::uint8_t>(a.values.size())};
  simd::active_kernels().gather_u8(s.mul_table().data(), s.order(),
                                   a.values.data(), b.values.data(),
                                   out.values.data(), a.values.size());
  return out;
}

EvalVector pointwise_sum(const FiniteAiSemiring& s, const EvalVector& a,
                         const EvalVector& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("evaluation vectors differ in length");
  }
  EvalVector out{std::vector<std::uint8_t>(a.values.size())};
  simd::active_kernels().gather_u8(s.add_table().data(), s.order(),
                                   a.values.data(), b.values.data(),
                                   out.values.data(), a.values.size());
  return out;
}

bool dominated(const OrderRelation& order, std::span<const std::uint8_t> lower,
               std::span<const std::uint8_t> upper) {
  if (lower.size() != upper.size()) {
    throw std::invalid_argument("evaluation vectors differ in length");
  }
  return simd::active_kernels().all_related_u8(
      order.relation_table().data(), static_cast<std::uint32_t>(order.size()),
      lower.data(), upper.data(), lower.size());
}

struct ClassTable::Impl {
  std::vector<Letter> letters;
  std::size_t n = 0;
  std::size_t entries = 0;
  std::size_t per_block = 0;
  std::vector<std::unique_ptr<std::uint8_t[]>> blocks;
  std::size_t count = 0;
  std::vector<std::size_t> hashes;
  std::vector<ClassId> slots;  // open addressing, kNone = empty
  std::vector<ClassId> parent;
  std::vector<std::uint32_t> last_letter;
  std::vector<std::uint32_t> length;
  std::vector<ClassId> trans;
  std::vector<ClassId> letter_classes;
  bool complete = true;
  std::size_t bound = 0;
  std::vector<std::vector<std::uint8_t>> counts;

  std::uint8_t* slot(std::size_t c) {
    const std::size_t b = c / per_block;
    while (blocks.size() <= b) {
      blocks.push_back(std::make_unique<std::uint8_t[]>(per_block * entries));
    }
    return blocks[b].get() + (c % per_block) * entries;
  }
  const std::uint8_t* slot(std::size_t c) const {
    return blocks[c / per_block].get() + (c % per_block) * entries;
  }

  std::size_t hash(const std::uint8_t* p) const {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(p), entries));
  }

  ClassId lookup(const std::uint8_t* p, std::size_t h) const {
    if (slots.empty()) return kNone;
    const std::size_t mask = slots.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const ClassId c = slots[i];
      if (c == kNone) return kNone;
      if (hashes[c] == h && std::memcmp(slot(c), p, entries) == 0) return c;
    }
  }

  void insert_slot(ClassId c) {
    const std::size_t mask = slots.size() - 1;
    std::size_t i = hashes[c] & mask;
    while (slots[i] != kNone) i = (i + 1) & mask;
    slots[i] = c;
  }

  void grow_if_needed() {
    if ((count + 1) * 2 <= slots.size()) return;
    std::vector<ClassId> old = std::move(slots);
    slots.assign(std::max<std::size_t>(64, old.size() * 2), kNone);
    for (ClassId c : old) {
      if (c != kNone) insert_slot(c);
    }
  }

  // The candidate sits in slot(count).  Returns its class, registering it
  // if new; kNone if the table is full.
  ClassId intern(std::size_t max_classes, ClassId from, std::uint32_t letter,
                 std::uint32_t len) {
    const std::uint8_t* p = slot(count);
    const std::size_t h = hash(p);
    const ClassId found = lookup(p, h);
    if (found != kNone) return found;
    if (count >= max_classes) return kNone;
    const auto c = static_cast<ClassId>(count);
    hashes.push_back(h);
    parent.push_back(from);
    last_letter.push_back(letter);
    length.push_back(len);
    grow_if_needed();
    ++count;
    insert_slot(c);
    return c;
  }
};

ClassTable::ClassTable(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
ClassTable::ClassTable(ClassTable&&) noexcept = default;
ClassTable& ClassTable::operator=(ClassTable&&) noexcept = default;
ClassTable::~ClassTable() = default;

bool ClassTable::complete() const noexcept { return impl_->complete; }
std::size_t ClassTable::class_count() const noexcept { return impl_->count; }
std::size_t ClassTable::vector_size() const noexcept { return impl_->entries; }
const std::vector<Letter>& ClassTable::letters() const noexcept {
  return impl_->letters;
}

std::span<const std::uint8_t> ClassTable::vector(ClassId c) const {
  if (c >= impl_->count) throw std::out_of_range("no such class");
  return {impl_->slot(c), impl_->entries};
}

std::optional<ClassId> ClassTable::find(
    std::span<const std::uint8_t> v) const {
  if (v.size() != impl_->entries) return std::nullopt;
  const ClassId c = impl_->lookup(v.data(), impl_->hash(v.data()));
  if (c == kNone) return std::nullopt;
  return c;
}

ClassId ClassTable::letter_class(std::size_t letter) const {
  return impl_->letter_classes.at(letter);
}

std::optional<ClassId> ClassTable::transition(ClassId c,
                                              std::size_t letter) const {
  const std::size_t k = impl_->letters.size();
  if (c >= impl_->count || letter >= k) throw std::out_of_range("transition");
  const std::size_t at = std::size_t{c} * k + letter;
  if (at >= impl_->trans.size() || impl_->trans[at] == kNone) {
    return std::nullopt;
  }
  return impl_->trans[at];
}

std::optional<ClassId> ClassTable::class_of(const Word& w) const {
  std::optional<ClassId> c = letter_class(letter_index(impl_->letters, w[0]));
  for (std::size_t i = 1; i < w.size() && c; ++i) {
    c = transition(*c, letter_index(impl_->letters, w[i]));
  }
  return c;
}

Word ClassTable::witness(ClassId c) const {
  if (c >= impl_->count) throw std::out_of_range("no such class");
  std::vector<std::size_t> idx;
  for (ClassId at = c; at != kNone; at = impl_->parent[at]) {
    idx.push_back(impl_->last_letter[at]);
  }
  std::reverse(idx.begin(), idx.end());
  return word_from(impl_->letters, idx);
}

std::size_t ClassTable::shortest_length(ClassId c) const {
  return impl_->length.at(c);
}

std::size_t ClassTable::length_bound() const noexcept { return impl_->bound; }

std::uint8_t ClassTable::words_of_length(ClassId c, std::size_t length) const {
  if (length == 0 || length > impl_->bound) {
    throw std::out_of_range("length outside 1..length_bound()");
  }
  return impl_->counts[length - 1].at(c);
}

ClassTable saturate_classes(const FiniteAiSemiring& s,
                            std::span<const Letter> letters,
                            std::size_t length_bound,
                            const ClassTableOptions& options) {
  if (letters.empty()) throw std::invalid_argument("no letters");
  auto impl = std::make_unique<ClassTable::Impl>();
  impl->letters.assign(letters.begin(), letters.end());
  impl->n = s.size();
  impl->entries = checked_entries(s.size(), letters.size(), options.max_entries);
  impl->per_block = std::max<std::size_t>(1, (std::size_t{1} << 22) / impl->entries);
  impl->bound = length_bound;
  const std::size_t max_classes = std::min<std::uint64_t>(
      options.max_classes, options.max_bytes / impl->entries);

  const std::size_t k = letters.size();
  const auto proj = projections(impl->n, k, impl->entries);
  const auto& kernels = simd::active_kernels();
  const std::uint32_t* mul = s.mul_table().data();

  for (std::size_t j = 0; j < k; ++j) {
    std::memcpy(impl->slot(impl->count), proj[j].data(), impl->entries);
    const ClassId c = impl->intern(max_classes, kNone,
                                   static_cast<std::uint32_t>(j), 1);
    if (c == kNone) {
      throw GuardError("class limit too small for the letters themselves");
    }
    impl->letter_classes.push_back(c);
  }

  for (std::size_t c = 0; c < impl->count && impl->complete; ++c) {
    for (std::size_t g = 0; g < k; ++g) {
      std::uint8_t* out = impl->slot(impl->count);
      kernels.gather_u8(mul, s.order(), impl->slot(c), proj[g].data(), out,
                        impl->entries);
      const ClassId t =
          impl->intern(max_classes, static_cast<ClassId>(c),
                       static_cast<std::uint32_t>(g), impl->length[c] + 1);
      if (t == kNone) {
        impl->complete = false;
        break;
      }
      impl->trans.push_back(t);
    }
  }
  impl->trans.resize(impl->count * k, kNone);

  // counts[l][c]: words of length l + 1 in class c, saturated at 2.
  impl->counts.assign(length_bound,
                      std::vector<std::uint8_t>(impl->count, 0));
  if (length_bound > 0) {
    for (std::size_t j = 0; j < k; ++j) {
      auto& cell = impl->counts[0][impl->letter_classes[j]];
      cell = static_cast<std::uint8_t>(std::min(2, cell + 1));
    }
  }
  for (std::size_t l = 1; l < length_bound; ++l) {
    const auto& prev = impl->counts[l - 1];
    auto& cur = impl->counts[l];
    for (std::size_t c = 0; c < impl->count; ++c) {
      if (prev[c] == 0) continue;
      for (std::size_t g = 0; g < k; ++g) {
        const ClassId t = impl->trans[c * k + g];
        if (t == kNone) continue;
        cur[t] = static_cast<std::uint8_t>(std::min(2, cur[t] + prev[c]));
      }
    }
  }
  return ClassTable(std::move(impl));
}

std::optional<Word> other_word_in_class(const ClassTable& table,
                                        ClassId target, const Word& avoid) {
  if (!table.complete()) {
    throw GuardError("class table is incomplete");
  }
  const std::size_t count = table.class_count();
  const std::size_t k = table.letters().size();
  if (target >= count) throw std::out_of_range("no such class");
  auto next = [&](std::size_t c, std::size_t g) {
    return *table.transition(static_cast<ClassId>(c), g);
  };

  // Reverse edges, then the states from which `target` is reachable.
  std::vector<std::uint32_t> start(count + 1, 0);
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t g = 0; g < k; ++g) ++start[next(c, g) + 1];
  }
  for (std::size_t c = 0; c < count; ++c) start[c + 1] += start[c];
  std::vector<ClassId> rev(start.back());
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::size_t c = 0; c < count; ++c) {
      for (std::size_t g = 0; g < k; ++g) {
        rev[fill[next(c, g)]++] = static_cast<ClassId>(c);
      }
    }
  }
  std::vector<char> live(count, 0);
  {
    std::vector<ClassId> queue{target};
    live[target] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ClassId c = queue[i];
      for (std::uint32_t e = start[c]; e < start[c + 1]; ++e) {
        if (!live[rev[e]]) {
          live[rev[e]] = 1;
          queue.push_back(rev[e]);
        }
      }
    }
  }

  const auto& letters = table.letters();
  auto pick = [&](std::vector<Word> words) -> std::optional<Word> {
    for (Word& w : words) {
      if (w != avoid) return std::move(w);
    }
    return std::nullopt;
  };

  // Cycle search among live states.  A live cycle through q means the class
  // language is infinite: witness(q) (cycle)^i path(q -> target).
  std::vector<char> colour(count, 0);  // 0 white, 1 on stack, 2 done
  struct Frame {
    ClassId node;
    std::size_t next_letter;
    std::size_t via;  // letter used to enter this frame
  };
  for (std::size_t root = 0; root < count; ++root) {
    if (!live[root] || colour[root]) continue;
    std::vector<Frame> stack{{static_cast<ClassId>(root), 0, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next_letter == k) {
        colour[f.node] = 2;
        stack.pop_back();
        continue;
      }
      const std::size_t g = f.next_letter++;
      const ClassId t = next(f.node, g);
      if (!live[t]) continue;
      if (colour[t] == 0) {
        colour[t] = 1;
        stack.push_back({t, 0, g});
        continue;
      }
      if (colour[t] != 1) continue;

      std::vector<std::size_t> cycle;
      std::size_t i = stack.size();
      while (stack[i - 1].node != t) --i;
      for (std::size_t j = i; j < stack.size(); ++j) {
        cycle.push_back(stack[j].via);
      }
      cycle.push_back(g);

      // Shortest path t -> target through live states.
      std::vector<std::size_t> tail;
      if (t != target) {
        std::vector<ClassId> from(count, kNone);
        std::vector<std::size_t> by(count, 0);
        std::vector<ClassId> queue{t};
        from[t] = t;
        for (std::size_t q = 0; q < queue.size() && from[target] == kNone;
             ++q) {
          for (std::size_t h = 0; h < k; ++h) {
            const ClassId u = next(queue[q], h);
            if (!live[u] || from[u] != kNone) continue;
            from[u] = queue[q];
            by[u] = h;
            queue.push_back(u);
          }
        }
        for (ClassId u = target; u != t; u = from[u]) tail.push_back(by[u]);
        std::reverse(tail.begin(), tail.end());
      }
      const Word head = table.witness(t);
      std::vector<Letter> once(head.begin(), head.end());
      for (std::size_t h : tail) once.push_back(letters[h]);
      std::vector<Letter> twice(head.begin(), head.end());
      for (std::size_t h : cycle) twice.push_back(letters[h]);
      for (std::size_t h : tail) twice.push_back(letters[h]);
      return pick({Word(std::move(once)), Word(std::move(twice))});
    }
  }

  // Acyclic: every live branch ends at target, so the first two complete
  // paths of a depth-first walk settle the question.
  std::vector<Word> found;
  std::vector<std::size_t> path;
  std::vector<std::pair<ClassId, std::size_t>> stack;  // node, next letter
  for (std::size_t g = 0; g < k && found.size() < 2; ++g) {
    const ClassId first = table.letter_class(g);
    if (!live[first]) continue;
    path.assign(1, g);
    stack.assign(1, {first, 0});
    while (!stack.empty() && found.size() < 2) {
      auto& [c, h] = stack.back();
      if (c == target) {
        found.push_back(word_from(letters, path));
        stack.pop_back();
        path.pop_back();
        continue;
      }
      if (h == k) {
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const std::size_t letter = h++;
      const ClassId t = next(c, letter);
      if (!live[t]) continue;
      path.push_back(letter);
      stack.push_back({t, 0});
    }
  }
  return pick(std::move(found));
}

std::string_view to_string(MinimalityStatus status) {
  switch (status) {
    case MinimalityStatus::minimal:
      return "minimal";
    case MinimalityStatus::not_minimal:
      return "not minimal";
    case MinimalityStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Where M2 was found: in S, in S x S, or nowhere within the caps.
std::optional<std::string> m2_route(const FiniteAiSemiring& s,
                                    std::size_t power_cap) {
  const FiniteAiSemiring two = m2();
  if (!find_embeddings(two, s).maps.empty()) return "M2 embeds in S";
  if (s.size() * s.size() <= power_cap) {
    const FiniteAiSemiring sq = direct_product(s, s, power_cap);
    if (!find_embeddings(two, sq).maps.empty()) return "M2 embeds in S x S";
  }
  return std::nullopt;
}

}  // namespace

MinimalityVerdict is_minimal_exact(const FiniteAiSemiring& s, const Word& w,
                                   const MinimalityOptions& options) {
  MinimalityVerdict v;
  v.length_bound =
      options.length_bound == 0 ? 2 * w.size() : options.length_bound;
  if (auto route = m2_route(s, options.power_cap)) {
    v.m2_premise = true;
    v.m2_route = *route;
  }

  const std::vector<Letter> letters = letters_by_first_occurrence(w);
  std::optional<ClassTable> table;
  try {
    table.emplace(saturate_classes(s, letters, v.length_bound, options.table));
  } catch (const GuardError& e) {
    v.note = e.what();
    return v;
  }
  v.class_count = table->class_count();
  const std::optional<ClassId> cw = table->class_of(w);
  if (!cw) {
    v.note = "class table stopped before reaching w";
    return v;
  }

  // Some word outside the class of w lies below it.
  const OrderRelation order = natural_order(s);
  const auto upper = table->vector(*cw);
  for (ClassId c = 0; c < table->class_count(); ++c) {
    if (c == *cw) continue;
    if (dominated(order, table->vector(c), upper)) {
      v.status = MinimalityStatus::not_minimal;
      v.reason = MinimalityReason::dominated_by_other_class;
      v.witness = table->witness(c);
      break;
    }
  }
  v.dominance_exact = table->complete();

  std::size_t within = 0;
  for (std::size_t l = 1; l <= v.length_bound; ++l) {
    within += table->words_of_length(*cw, l);
  }
  v.duplicate_within_bound = within >= 2;

  if (!v.witness) {
    const Word shortest = table->witness(*cw);
    if (shortest != w) {
      v.witness = shortest;
    } else if (table->complete()) {
      v.witness = other_word_in_class(*table, *cw, w);
    }
    if (v.witness) {
      v.status = MinimalityStatus::not_minimal;
      v.reason = MinimalityReason::shares_class;
    }
  }
  v.duplicate_exact = table->complete();

  if (v.witness) return v;
  if (!table->complete()) {
    v.note = "class limit reached after " +
             std::to_string(table->class_count()) + " classes";
  } else if (!v.m2_premise) {
    v.note = "no embedding of M2 into S or S x S; only words over the "
             "letters of w were examined";
  } else {
    v.status = MinimalityStatus::minimal;
  }
  return v;
}

BoundedIsotermVerdict is_isoterm_bounded(const FiniteAiSemiring& s,
                                         const Word& w,
                                         const BoundedIsotermOptions& options) {
  using Status = BoundedIsotermVerdict::Status;
  BoundedIsotermVerdict out;
  const std::vector<Letter> letters = letters_by_first_occurrence(w);
  const std::size_t k = letters.size();
  std::size_t entries = 0;
  try {
    entries = checked_entries(s.size(), k, options.max_entries);
  } catch (const GuardError& e) {
    out.status = Status::inconclusive;
    out.note = e.what();
    return out;
  }

  // Candidate words: every word over the letters up to max_length, in
  // length-then-lexicographic order.
  std::uint64_t word_count = 0;
  {
    std::uint64_t layer = 1;
    for (std::size_t l = 1; l <= options.max_length; ++l) {
      if (layer > options.max_candidates / std::max<std::size_t>(k, 1)) {
        out.status = Status::inconclusive;
        out.note = "too many candidate words";
        return out;
      }
      layer *= k;
      word_count += layer;
    }
  }
  if (options.max_summands > 2) {
    throw std::invalid_argument("at most two summands are supported");
  }
  std::uint64_t term_count = word_count;
  if (options.max_summands == 2) {
    term_count += word_count * (word_count - 1) / 2;
  }
  if (term_count > options.max_candidates ||
      word_count * entries > (std::uint64_t{1} << 30)) {
    out.status = Status::inconclusive;
    out.note = "candidate terms exceed the limit of " +
               std::to_string(options.max_candidates);
    return out;
  }

  const auto proj = projections(s.size(), k, entries);
  const auto& kernels = simd::active_kernels();
  const EvalVector target = eval_vector(s, w, letters, options.max_entries);

  std::vector<std::vector<std::size_t>> words;
  std::vector<std::vector<std::uint8_t>> vecs;
  for (std::size_t g = 0; g < k; ++g) {
    words.push_back({g});
    vecs.push_back(proj[g]);
  }
  for (std::size_t from = 0, l = 2; l <= options.max_length; ++l) {
    const std::size_t until = words.size();
    for (std::size_t i = from; i < until; ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        std::vector<std::size_t> idx = words[i];
        idx.push_back(g);
        std::vector<std::uint8_t> v(entries);
        kernels.gather_u8(s.mul_table().data(), s.order(), vecs[i].data(),
                          proj[g].data(), v.data(), entries);
        words.push_back(std::move(idx));
        vecs.push_back(std::move(v));
      }
    }
    from = until;
  }

  const Term self(w);
  for (std::size_t i = 0; i < words.size(); ++i) {
    ++out.candidates;
    if (vecs[i] != target.values) continue;
    Term t(word_from(letters, words[i]));
    if (t == self) continue;
    out.status = Status::identity_found;
    out.partner = std::move(t);
    return out;
  }
  if (options.max_summands == 2) {
    std::vector<std::uint8_t> sum(entries);
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        ++out.candidates;
        kernels.gather_u8(s.add_table().data(), s.order(), vecs[i].data(),
                          vecs[j].data(), sum.data(), entries);
        if (sum != target.values) continue;
        out.status = Status::identity_found;
        out.partner = Term({word_from(letters, words[i]),
                            word_from(letters, words[j])});
        return out;
      }
    }
  }
  return out;
}

std::string Certificate::report() const {
  std::string out = "certificate for " + algebra + ": " +
                    (issued ? "issued" : "not issued") + "\n";
  for (const Premise& p : premises) {
    out += std::string("  [") + (p.ok ? "ok" : "FAILED") + "] " + p.name +
           ": " + p.detail + "\n";
  }
  for (const Premise& r : remarks) {
    out += "  note: " + r.name + ": " + r.detail + "\n";
  }
  out += "conclusion: " + conclusion + "\n";
  return out;
}

Certificate certify_wn_isoterms(const FiniteAiSemiring& s,
                                const MinimalityOptions& options) {
  Certificate cert;
  cert.algebra = s.name();

  Premise identity{"multiplicative identity", false, "none"};
  if (auto one = s.multiplicative_identity()) {
    identity.ok = true;
    identity.detail = s.element_name(*one);
  }
  cert.premises.push_back(identity);

  Premise variety{"M2 in the variety of S", false,
                  "no embedding into S or S x S found"};
  if (auto route = m2_route(s, options.power_cap)) {
    variety.ok = true;
    variety.detail = *route;
  }
  cert.premises.push_back(variety);

  const Word probe{"x", "y", "x", "z", "t", "z"};
  const MinimalityVerdict mv = is_minimal_exact(s, probe, options);
  Premise iso{"x y x z t z is an isoterm", false, std::string(to_string(mv.status))};
  if (mv.status == MinimalityStatus::minimal) {
    iso.ok = true;
    iso.detail = "no other word lies at or below it (" +
                 std::to_string(mv.class_count) + " word classes)";
  } else if (mv.witness) {
    iso.detail += ", witness " + mv.witness->str();
  } else if (!mv.note.empty()) {
    iso.detail += ": " + mv.note;
  }
  cert.premises.push_back(iso);
  cert.inconclusive = mv.status == MinimalityStatus::inconclusive;

  const bool s7_in = !find_embeddings(s7(), s).maps.empty();
  cert.remarks.push_back(
      {"S7 embeds in S", s7_in,
       s7_in ? "yes, so V(S) also lies above V(S7)" : "no"});

  cert.issued = identity.ok && variety.ok && iso.ok;
  cert.conclusion = cert.issued
                        ? "every w_n (n >= 1) is an isoterm for " + s.name() +
                              ", by the criterion combining the three premises"
                        : "no conclusion; a premise failed";
  return cert;
}

}  // namespace aisemi
