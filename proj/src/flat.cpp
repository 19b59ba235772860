#include "aisemi/flat.hpp"

#include <algorithm>
#include <set>

#include "aisemi/error.hpp"

namespace aisemi {

std::optional<ElementId> FlatSemiring::element_of(const MaybeWord& w) const {
  if (!w) return empty_;
  auto it = index_.find(*w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string flat_element_name(const Word& w, bool single_char_letters) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !single_char_letters) out += '.';
    out += w[i].str();
  }
  return out;
}

FlatSemiring build_flat(std::span<const Word> words,
                        const FlatOptions& options) {
  if (words.empty() && !options.monoid) {
    throw std::invalid_argument("S(W) needs at least one word");
  }
  std::set<Word, ShortLex> factors;
  for (const Word& w : words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t len = 1; i + len <= w.size(); ++len) {
        factors.insert(w.factor(i, len));
        if (factors.size() > options.subword_cap) {
          throw GuardError("flat construction exceeds the subword cap of " +
                           std::to_string(options.subword_cap));
        }
      }
    }
  }

  bool single_char = true;
  std::set<std::string> letter_names;
  for (const Word& w : words) {
    for (const Letter& l : w) {
      single_char = single_char && l.str().size() == 1;
      letter_names.insert(l.str());
    }
  }

  std::vector<FlatLabel> labels;
  std::vector<std::string> names;
  std::map<Word, ElementId> index;
  std::optional<ElementId> empty;
  if (options.monoid) {
    empty = element(0);
    labels.push_back(FlatLabel{LabelKind::empty, std::nullopt});
    names.push_back(letter_names.contains("e") ? "1" : "e");
  }
  for (const Word& f : factors) {
    index.emplace(f, element(labels.size()));
    labels.push_back(FlatLabel{LabelKind::word, f});
    names.push_back(flat_element_name(f, single_char));
  }
  const ElementId zero = element(labels.size());
  labels.push_back(FlatLabel{LabelKind::zero, std::nullopt});
  names.push_back("0");

  const std::size_t n = labels.size();
  const std::uint32_t z = index_of(zero);
  std::vector<std::uint32_t> add(n * n, z);
  std::vector<std::uint32_t> mul(n * n, z);
  for (std::size_t i = 0; i < n; ++i) {
    add[i * n + i] = static_cast<std::uint32_t>(i);
  }
  if (empty) {
    const std::uint32_t e = index_of(*empty);
    for (std::size_t i = 0; i < n; ++i) {
      mul[e * n + i] = static_cast<std::uint32_t>(i);
      mul[i * n + e] = static_cast<std::uint32_t>(i);
    }
  }
  // u * v = uv exactly when uv is a factor, so it is enough to split every
  // factor at every interior point.
  for (const auto& [f, id] : index) {
    for (std::size_t k = 1; k < f.size(); ++k) {
      const std::uint32_t u = index_of(index.at(f.factor(0, k)));
      const std::uint32_t v = index_of(index.at(f.factor(k, f.size() - k)));
      mul[u * n + v] = index_of(id);
    }
  }

  std::string name = options.name;
  if (name.empty()) {
    name = options.monoid ? "M(" : "S(";
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) name += ",";
      name += flat_element_name(words[i], single_char);
    }
    name += ")";
  }
  FiniteAiSemiring algebra(std::move(name), std::move(names), std::move(add),
                           std::move(mul));
  return FlatSemiring(std::move(algebra), std::move(labels),
                      std::vector<Word>(words.begin(), words.end()),
                      options.monoid, zero, std::move(index), empty);
}

bool check_flat(const FiniteAiSemiring& s) {
  const auto zero = s.multiplicative_zero();
  if (!zero) return false;
  const std::uint32_t n = s.order();
  const auto add = s.add_table();
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (a != b && add[a * n + b] != index_of(*zero)) return false;
    }
  }
  return true;
}

bool check_zero_cancellative(std::span<const std::uint32_t> mul,
                             std::uint32_t n, std::uint32_t zero) {
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      for (std::uint32_t c = b + 1; c < n; ++c) {
        const std::uint32_t ab = mul[a * n + b];
        if (ab != zero && ab == mul[a * n + c]) return false;
        const std::uint32_t ba = mul[b * n + a];
        if (ba != zero && ba == mul[c * n + a]) return false;
      }
    }
  }
  return true;
}

bool check_zero_cancellative(const FiniteAiSemiring& s) {
  const auto zero = s.multiplicative_zero();
  if (!zero) return false;
  return check_zero_cancellative(s.mul_table(), s.order(), index_of(*zero));
}

}  // namespace aisemi
