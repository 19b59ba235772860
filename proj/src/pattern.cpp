#include "aisemi/pattern.hpp"

#include <map>

#include "aisemi/error.hpp"

namespace aisemi {

namespace {

class ValueSearcher {
 public:
  ValueSearcher(const Word& pattern, const Word& target,
                const PatternOptions& options,
                const std::function<bool(const PatternMatch&)>& visit)
      : target_word_(target), options_(options), visit_(visit) {
    std::map<Letter, int> pattern_ids;
    for (const Letter& l : pattern) {
      auto [it, inserted] =
          pattern_ids.emplace(l, static_cast<int>(pattern_letters_.size()));
      if (inserted) pattern_letters_.push_back(l);
      pattern_.push_back(it->second);
    }
    std::map<Letter, int> target_ids;
    for (const Letter& l : target) {
      auto [it, _] =
          target_ids.emplace(l, static_cast<int>(target_ids.size()));
      target_.push_back(it->second);
    }
    binding_.assign(pattern_letters_.size(), Binding{});
    min_len_ = options_.monoid_mode ? 0 : 1;
  }

  MatchStatus run() {
    const std::size_t last_start =
        options_.monoid_mode ? target_.size() : target_.size() - 1;
    for (start_ = 0; start_ <= last_start && !stopped_; ++start_) {
      descend(0, start_);
    }
    if (budget_hit_) return MatchStatus::inconclusive;
    if (found_) return MatchStatus::found;
    return MatchStatus::none;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Binding {
    bool bound = false;
    std::size_t pos = 0;
    std::size_t len = 0;
  };

  bool equal_factor(std::size_t a, std::size_t b, std::size_t len) const {
    for (std::size_t k = 0; k < len; ++k) {
      if (target_[a + k] != target_[b + k]) return false;
    }
    return true;
  }

  // Minimum number of target letters needed by pattern positions from i on,
  // if the letter at position i gets an image of length len.
  std::size_t needed_from(std::size_t i, std::size_t len) const {
    const int letter = pattern_[i];
    std::size_t need = 0;
    for (std::size_t j = i; j < pattern_.size(); ++j) {
      const int l = pattern_[j];
      if (l == letter) {
        need += len;
      } else if (binding_[l].bound) {
        need += binding_[l].len;
      } else {
        need += min_len_;
      }
    }
    return need;
  }

  void emit(std::size_t end) {
    const std::size_t length = end - start_;
    if (length == 0 && start_ != 0) return;
    found_ = true;
    PatternMatch match;
    for (std::size_t l = 0; l < pattern_letters_.size(); ++l) {
      const Binding& b = binding_[l];
      MaybeWord image;
      if (b.len > 0) image = target_word().factor(b.pos, b.len);
      match.substitution.set(pattern_letters_[l], std::move(image));
    }
    match.begin = start_;
    match.length = length;
    if (!visit_(match)) stopped_ = true;
  }

  void descend(std::size_t i, std::size_t pos) {
    if (stopped_) return;
    if (i == pattern_.size()) {
      emit(pos);
      return;
    }
    if (++nodes_ > options_.node_budget) {
      budget_hit_ = true;
      stopped_ = true;
      return;
    }
    const int letter = pattern_[i];
    Binding& b = binding_[letter];
    if (b.bound) {
      if (pos + b.len <= target_.size() && equal_factor(b.pos, pos, b.len)) {
        descend(i + 1, pos + b.len);
      }
      return;
    }
    const std::size_t remaining = target_.size() - pos;
    for (std::size_t len = min_len_; len <= remaining && !stopped_; ++len) {
      if (needed_from(i, len) > remaining) break;
      b = Binding{true, pos, len};
      descend(i + 1, pos + len);
      b = Binding{};
    }
  }

  const Word& target_word() const { return target_word_; }

  const Word& target_word_;
  PatternOptions options_;
  const std::function<bool(const PatternMatch&)>& visit_;
  std::vector<Letter> pattern_letters_;
  std::vector<int> pattern_;
  std::vector<int> target_;
  std::vector<Binding> binding_;
  std::size_t min_len_ = 1;
  std::size_t start_ = 0;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  bool stopped_ = false;
  bool budget_hit_ = false;
};

}  // namespace

MatchStatus for_each_value(
    const Word& pattern, const Word& target, const PatternOptions& options,
    const std::function<bool(const PatternMatch&)>& visit) {
  ValueSearcher searcher(pattern, target, options, visit);
  return searcher.run();
}

PatternSearch find_embedding_value(const Word& pattern, const Word& target,
                                   const PatternOptions& options) {
  PatternSearch result;
  std::function<bool(const PatternMatch&)> visit =
      [&](const PatternMatch& m) {
        result.match = m;
        return false;
      };
  ValueSearcher searcher(pattern, target, options, visit);
  result.status = searcher.run();
  result.nodes = searcher.nodes();
  if (result.match) result.status = MatchStatus::found;
  return result;
}

bool is_free(const Word& target, const Word& pattern,
             const PatternOptions& options) {
  const auto search = find_embedding_value(pattern, target, options);
  if (search.status == MatchStatus::inconclusive) {
    throw GuardError("pattern search exceeded its node budget of " +
                     std::to_string(options.node_budget));
  }
  return search.status == MatchStatus::none;
}

}  // namespace aisemi
