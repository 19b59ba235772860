#include "aisemi/homomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

namespace aisemi {

namespace {

constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;

// Facts about an element that any injective homomorphism preserves: the
// index and period of its multiplicative powers.  Isomorphisms also
// preserve how often it occurs in each role of the tables.
using Profile = std::vector<std::uint32_t>;

std::vector<Profile> profiles(std::span<const std::uint32_t> add,
                              std::span<const std::uint32_t> mul,
                              std::uint32_t n, bool counts) {
  std::vector<Profile> out(n);
  std::vector<std::uint32_t> seen(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t p = x;
    std::uint32_t step = 1;
    while (!seen[p]) {
      seen[p] = step++;
      p = mul[p * n + x];
    }
    out[x] = {seen[p], step - seen[p]};
    if (!counts) continue;
    std::uint32_t absorbs = 0, left = 0, right = 0, produced = 0;
    for (std::uint32_t y = 0; y < n; ++y) {
      absorbs += add[x * n + y] == x;
      left += mul[x * n + y] == x;
      right += mul[y * n + x] == x;
      for (std::uint32_t z = 0; z < n; ++z) produced += mul[y * n + z] == x;
    }
    out[x].insert(out[x].end(), {absorbs, left, right, produced});
  }
  return out;
}

class EmbeddingSearcher {
 public:
  EmbeddingSearcher(const FiniteAiSemiring& from, const FiniteAiSemiring& to,
                    const EmbeddingSearchOptions& options)
      : n_(from.order()),
        m_(to.order()),
        from_add_(from.add_table()),
        from_mul_(from.mul_table()),
        to_add_(to.add_table()),
        to_mul_(to.mul_table()),
        options_(options),
        image_(n_, kUnassigned),
        preimage_(m_, kUnassigned) {
    // Elements that are no sum or product of two other elements have to be
    // chosen; everything else is usually forced by propagation.  Among
    // those, the ones produced most often by the tables go first.
    std::vector<std::size_t> weight(n_, 0);
    std::vector<bool> reducible(n_, false);
    for (std::uint32_t p = 0; p < n_; ++p) {
      for (std::uint32_t q = 0; q < n_; ++q) {
        for (std::uint32_t v : {from_add_[p * n_ + q], from_mul_[p * n_ + q]}) {
          ++weight[v];
          if (v != p && v != q) reducible[v] = true;
        }
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0u);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::uint32_t a, std::uint32_t b) {
                       if (reducible[a] != reducible[b]) return !reducible[a];
                       return weight[a] > weight[b];
                     });
    from_profile_ = profiles(from_add_, from_mul_, n_, options_.bijective);
    to_profile_ = profiles(to_add_, to_mul_, m_, options_.bijective);
  }

  EmbeddingSearch run() {
    EmbeddingSearch result;
    if (n_ > m_ || (options_.bijective && n_ != m_)) {
      return result;
    }
    search(0, result);
    result.nodes = nodes_;
    if (stop_ == Stop::limit) {
      result.status = SearchStatus::limit_reached;
    } else if (stop_ == Stop::budget) {
      result.status = SearchStatus::budget_exceeded;
    }
    return result;
  }

 private:
  enum class Stop { none, limit, budget };

  // Assigns x -> y and propagates every forced value.  Returns false on a
  // conflict; the trail records what to undo either way.
  bool assign(std::uint32_t x, std::uint32_t y) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (image_[a] != kUnassigned) {
        if (image_[a] != b) return false;
        continue;
      }
      if (preimage_[b] != kUnassigned) return false;
      image_[a] = b;
      preimage_[b] = a;
      trail_.push_back(a);
      for (std::uint32_t c : trail_) {
        const std::uint32_t ic = image_[c];
        const std::pair<std::uint32_t, std::uint32_t> operands[2] = {{a, c},
                                                                     {c, a}};
        for (auto [p, q] : operands) {
          const std::uint32_t ip = image_[p];
          const std::uint32_t iq = p == a ? ic : b;
          const std::uint32_t lhs_add = from_add_[p * n_ + q];
          const std::uint32_t rhs_add = to_add_[ip * m_ + iq];
          const std::uint32_t lhs_mul = from_mul_[p * n_ + q];
          const std::uint32_t rhs_mul = to_mul_[ip * m_ + iq];
          if (image_[lhs_add] != kUnassigned) {
            if (image_[lhs_add] != rhs_add) return false;
          } else {
            queue.emplace_back(lhs_add, rhs_add);
          }
          if (image_[lhs_mul] != kUnassigned) {
            if (image_[lhs_mul] != rhs_mul) return false;
          } else {
            queue.emplace_back(lhs_mul, rhs_mul);
          }
        }
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::uint32_t a = trail_.back();
      trail_.pop_back();
      preimage_[image_[a]] = kUnassigned;
      image_[a] = kUnassigned;
    }
  }

  void search(std::size_t next, EmbeddingSearch& result) {
    while (next < n_ && image_[order_[next]] != kUnassigned) ++next;
    if (next == n_) {
      Embedding map(n_);
      for (std::uint32_t i = 0; i < n_; ++i) map[i] = element(image_[i]);
      result.maps.push_back(std::move(map));
      if (result.maps.size() >= options_.limit) stop_ = Stop::limit;
      return;
    }
    const std::uint32_t x = order_[next];
    for (std::uint32_t y = 0; y < m_ && stop_ == Stop::none; ++y) {
      if (preimage_[y] != kUnassigned) continue;
      if (from_profile_[x] != to_profile_[y]) continue;
      if (++nodes_ > options_.node_budget) {
        stop_ = Stop::budget;
        return;
      }
      const std::size_t mark = trail_.size();
      if (assign(x, y)) search(next + 1, result);
      undo_to(mark);
    }
  }

  std::uint32_t n_;
  std::uint32_t m_;
  std::span<const std::uint32_t> from_add_, from_mul_, to_add_, to_mul_;
  EmbeddingSearchOptions options_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> preimage_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> trail_;
  std::vector<Profile> from_profile_, to_profile_;
  std::uint64_t nodes_ = 0;
  Stop stop_ = Stop::none;
};

}  // namespace

EmbeddingSearch find_embeddings(const FiniteAiSemiring& from,
                                const FiniteAiSemiring& to,
                                EmbeddingSearchOptions options) {
  if (options.limit == 0) options.limit = 1;
  return EmbeddingSearcher(from, to, options).run();
}

IsomorphismSearch find_isomorphism(const FiniteAiSemiring& a,
                                   const FiniteAiSemiring& b,
                                   std::uint64_t node_budget) {
  EmbeddingSearchOptions options;
  options.bijective = true;
  options.node_budget = node_budget;
  auto search = find_embeddings(a, b, options);
  IsomorphismSearch out;
  out.status = search.status;
  if (!search.maps.empty()) out.map = std::move(search.maps.front());
  return out;
}

bool is_embedding(const FiniteAiSemiring& from, const FiniteAiSemiring& to,
                  const Embedding& map) {
  const std::uint32_t n = from.order();
  if (map.size() != n) return false;
  std::vector<bool> used(to.size(), false);
  for (ElementId e : map) {
    if (index_of(e) >= to.size() || used[index_of(e)]) return false;
    used[index_of(e)] = true;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      const ElementId ex = element(x);
      const ElementId ey = element(y);
      if (map[index_of(from.sum(ex, ey))] != to.sum(map[x], map[y]) ||
          map[index_of(from.product(ex, ey))] != to.product(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace aisemi
