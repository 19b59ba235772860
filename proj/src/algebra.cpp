#include "aisemi/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "aisemi/error.hpp"

namespace aisemi {

namespace {

bool is_token(const std::string& s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isspace(c) != 0 || c == '#';
  });
}

void check_table(const char* which, std::size_t n,
                 const std::vector<std::uint32_t>& table) {
  if (table.size() != n * n) {
    throw StructuralError(std::string(which) + " table has " +
                          std::to_string(table.size()) + " entries, expected " +
                          std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw StructuralError(std::string(which) + " table entry (" +
                            std::to_string(i / n) + "," +
                            std::to_string(i % n) + ") = " +
                            std::to_string(table[i]) + " is out of range");
    }
  }
}

std::vector<std::uint32_t> flatten(
    const char* which, std::size_t n,
    const std::vector<std::vector<std::uint32_t>>& rows) {
  if (rows.size() != n) {
    throw StructuralError(std::string(which) + " table has " +
                          std::to_string(rows.size()) + " rows, expected " +
                          std::to_string(n));
  }
  std::vector<std::uint32_t> out;
  out.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw StructuralError(std::string(which) + " table is not square");
    }
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

FiniteAiSemiring::FiniteAiSemiring(std::string name,
                                   std::vector<std::string> elements,
                                   std::vector<std::uint32_t> add,
                                   std::vector<std::uint32_t> mul)
    : name_(std::move(name)),
      elements_(std::move(elements)),
      add_(std::move(add)),
      mul_(std::move(mul)) {
  if (elements_.empty()) {
    throw StructuralError("an algebra needs at least one element");
  }
  std::set<std::string_view> seen;
  for (const auto& e : elements_) {
    if (!is_token(e)) {
      throw StructuralError("invalid element name '" + e + "'");
    }
    if (!seen.insert(e).second) {
      throw StructuralError("duplicate element name '" + e + "'");
    }
  }
  check_table("add", elements_.size(), add_);
  check_table("mul", elements_.size(), mul_);
}

FiniteAiSemiring FiniteAiSemiring::from_rows(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::vector<std::uint32_t>>& add,
    const std::vector<std::vector<std::uint32_t>>& mul) {
  const std::size_t n = elements.size();
  return FiniteAiSemiring(std::move(name), std::move(elements),
                          flatten("add", n, add), flatten("mul", n, mul));
}

std::optional<ElementId> FiniteAiSemiring::find_element(
    std::string_view name) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == name) {
      return element(i);
    }
  }
  return std::nullopt;
}

FiniteAiSemiring FiniteAiSemiring::renamed(std::string name) const {
  FiniteAiSemiring copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteAiSemiring FiniteAiSemiring::with_sum(ElementId a, ElementId b,
                                            ElementId value) const {
  auto add = add_;
  add.at(index_of(a) * order() + index_of(b)) = index_of(value);
  return FiniteAiSemiring(name_, elements_, std::move(add), mul_);
}

FiniteAiSemiring FiniteAiSemiring::with_product(ElementId a, ElementId b,
                                                ElementId value) const {
  auto mul = mul_;
  mul.at(index_of(a) * order() + index_of(b)) = index_of(value);
  return FiniteAiSemiring(name_, elements_, add_, std::move(mul));
}

std::optional<ElementId> FiniteAiSemiring::multiplicative_identity() const {
  const std::uint32_t n = order();
  for (std::uint32_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      ok = mul_[e * n + x] == x && mul_[x * n + e] == x;
    }
    if (ok) {
      return element(e);
    }
  }
  return std::nullopt;
}

std::optional<ElementId> FiniteAiSemiring::multiplicative_zero() const {
  const std::uint32_t n = order();
  for (std::uint32_t z = 0; z < n; ++z) {
    bool ok = true;
    for (std::uint32_t x = 0; x < n && ok; ++x) {
      ok = mul_[z * n + x] == z && mul_[x * n + z] == z;
    }
    if (ok) {
      return element(z);
    }
  }
  return std::nullopt;
}

bool FiniteAiSemiring::is_multiplicatively_commutative() const {
  const std::uint32_t n = order();
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (mul_[x * n + y] != mul_[y * n + x]) {
        return false;
      }
    }
  }
  return true;
}

std::string_view law_name(Law law) {
  switch (law) {
    case Law::add_commutative:
      return "x+y=y+x";
    case Law::add_idempotent:
      return "x+x=x";
    case Law::add_associative:
      return "(x+y)+z=x+(y+z)";
    case Law::mul_associative:
      return "(xy)z=x(yz)";
    case Law::left_distributive:
      return "x(y+z)=xy+xz";
    case Law::right_distributive:
      return "(x+y)z=xz+yz";
  }
  return "?";
}

bool ValidationReport::violates(Law law) const { return find(law) != nullptr; }

const Violation* ValidationReport::find(Law law) const {
  for (const auto& v : violations) {
    if (v.law == law) {
      return &v;
    }
  }
  return nullptr;
}

ValidationReport validate_axioms(const FiniteAiSemiring& s) {
  const std::uint32_t n = s.order();
  const auto add = s.add_table();
  const auto mul = s.mul_table();
  auto A = [&](std::uint32_t x, std::uint32_t y) { return add[x * n + y]; };
  auto M = [&](std::uint32_t x, std::uint32_t y) { return mul[x * n + y]; };

  ValidationReport report;
  auto record = [&](Law law, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                    int arity) {
    report.ok = false;
    report.violations.push_back(
        Violation{law, {element(x), element(y), element(z)}, arity});
  };

  auto scan1 = [&](Law law, auto&& holds) {
    for (std::uint32_t x = 0; x < n; ++x) {
      if (!holds(x)) {
        record(law, x, 0, 0, 1);
        return;
      }
    }
  };
  auto scan2 = [&](Law law, auto&& holds) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (!holds(x, y)) {
          record(law, x, y, 0, 2);
          return;
        }
      }
    }
  };
  auto scan3 = [&](Law law, auto&& holds) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        for (std::uint32_t z = 0; z < n; ++z) {
          if (!holds(x, y, z)) {
            record(law, x, y, z, 3);
            return;
          }
        }
      }
    }
  };

  scan2(Law::add_commutative,
        [&](auto x, auto y) { return A(x, y) == A(y, x); });
  scan1(Law::add_idempotent, [&](auto x) { return A(x, x) == x; });
  scan3(Law::add_associative, [&](auto x, auto y, auto z) {
    return A(A(x, y), z) == A(x, A(y, z));
  });
  scan3(Law::mul_associative, [&](auto x, auto y, auto z) {
    return M(M(x, y), z) == M(x, M(y, z));
  });
  scan3(Law::left_distributive, [&](auto x, auto y, auto z) {
    return M(x, A(y, z)) == A(M(x, y), M(x, z));
  });
  scan3(Law::right_distributive, [&](auto x, auto y, auto z) {
    return M(A(x, y), z) == A(M(x, z), M(y, z));
  });
  return report;
}

std::string describe(const FiniteAiSemiring& s, const Violation& v) {
  std::ostringstream out;
  out << law_name(v.law) << " fails at";
  static constexpr const char* kVars[] = {"x", "y", "z"};
  for (int i = 0; i < v.arity; ++i) {
    out << ' ' << kVars[i] << '=' << s.element_name(v.witness[i]);
  }
  return out.str();
}

OrderRelation::OrderRelation(std::size_t n, std::vector<std::uint8_t> leq)
    : n_(n), leq_(std::move(leq)), table_(leq_.begin(), leq_.end()) {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (a == b || !leq_[a * n_ + b]) {
        continue;
      }
      bool covering = true;
      for (std::size_t c = 0; c < n_ && covering; ++c) {
        if (c != a && c != b && leq_[a * n_ + c] && leq_[c * n_ + b]) {
          covering = false;
        }
      }
      if (covering) {
        covers_.emplace_back(element(a), element(b));
      }
    }
  }
}

std::vector<std::pair<ElementId, ElementId>> OrderRelation::pairs() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (leq_[a * n_ + b]) {
        out.emplace_back(element(a), element(b));
      }
    }
  }
  return out;
}

std::vector<std::size_t> OrderRelation::heights() const {
  std::vector<std::size_t> height(n_, 0);
  // Covers are acyclic, so n relaxation rounds reach the fixed point.
  for (std::size_t round = 0; round < n_; ++round) {
    bool changed = false;
    for (const auto& [lo, hi] : covers_) {
      std::size_t h = height[index_of(lo)] + 1;
      if (h > height[index_of(hi)]) {
        height[index_of(hi)] = h;
        changed = true;
      }
    }
    if (!changed) {
      break;
    }
  }
  return height;
}

OrderRelation natural_order(const FiniteAiSemiring& s) {
  const std::uint32_t n = s.order();
  const auto add = s.add_table();
  std::vector<std::uint8_t> leq(std::size_t{n} * n, 0);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      leq[a * n + b] = add[a * n + b] == b ? 1 : 0;
    }
  }
  return OrderRelation(n, std::move(leq));
}

std::string hasse_diagram(const FiniteAiSemiring& s, const OrderRelation& o) {
  const auto height = o.heights();
  const std::size_t top =
      height.empty() ? 0 : *std::max_element(height.begin(), height.end());
  std::ostringstream out;
  for (std::size_t level = top + 1; level-- > 0;) {
    out << "level " << level << ":";
    for (std::size_t i = 0; i < height.size(); ++i) {
      if (height[i] == level) {
        out << ' ' << s.element_name(element(i));
      }
    }
    out << '\n';
  }
  out << "covers:";
  for (const auto& [lo, hi] : o.covers()) {
    out << ' ' << s.element_name(lo) << '<' << s.element_name(hi);
  }
  out << '\n';
  return out.str();
}

FiniteAiSemiring direct_product(const FiniteAiSemiring& a,
                                const FiniteAiSemiring& b, std::size_t cap) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > cap) {
    throw GuardError("direct product of size " + std::to_string(na * nb) +
                     " exceeds the cap of " + std::to_string(cap));
  }
  const std::size_t n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      names.push_back("(" + a.element_names()[i] + "," + b.element_names()[j] +
                      ")");
    }
  }
  std::vector<std::uint32_t> add(n * n);
  std::vector<std::uint32_t> mul(n * n);
  const auto aa = a.add_table();
  const auto am = a.mul_table();
  const auto ba = b.add_table();
  const auto bm = b.mul_table();
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t x1 = x / nb;
    const std::size_t x2 = x % nb;
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t y1 = y / nb;
      const std::size_t y2 = y % nb;
      add[x * n + y] = static_cast<std::uint32_t>(aa[x1 * na + y1] * nb +
                                                  ba[x2 * nb + y2]);
      mul[x * n + y] = static_cast<std::uint32_t>(am[x1 * na + y1] * nb +
                                                  bm[x2 * nb + y2]);
    }
  }
  return FiniteAiSemiring(a.name() + "x" + b.name(), std::move(names),
                          std::move(add), std::move(mul));
}

Subalgebra subalgebra_generated(const FiniteAiSemiring& s,
                                std::span<const ElementId> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("subalgebra_generated needs a generator");
  }
  const std::uint32_t n = s.order();
  const auto add = s.add_table();
  const auto mul = s.mul_table();
  std::vector<bool> in(n, false);
  std::vector<std::uint32_t> members;
  auto insert = [&](std::uint32_t e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  for (ElementId g : generators) {
    if (index_of(g) >= n) {
      throw std::out_of_range("generator outside the algebra");
    }
    insert(index_of(g));
  }
  // Every pair is combined exactly once: pairs among the first `done`
  // members were handled in earlier passes.
  std::size_t done = 0;
  while (done < members.size()) {
    const std::size_t current = members.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < current; ++j) {
        const std::uint32_t x = members[i];
        const std::uint32_t y = members[j];
        insert(add[x * n + y]);
        insert(add[y * n + x]);
        insert(mul[x * n + y]);
        insert(mul[y * n + x]);
      }
    }
    done = current;
  }

  std::vector<std::uint32_t> sorted(members);
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::uint32_t> position(n, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    position[sorted[i]] = static_cast<std::uint32_t>(i);
  }
  const std::size_t m = sorted.size();
  std::vector<std::string> names;
  std::vector<ElementId> inclusion;
  for (std::uint32_t e : sorted) {
    names.push_back(s.element_names()[e]);
    inclusion.push_back(element(e));
  }
  std::vector<std::uint32_t> sub_add(m * m);
  std::vector<std::uint32_t> sub_mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      sub_add[i * m + j] = position[add[sorted[i] * n + sorted[j]]];
      sub_mul[i * m + j] = position[mul[sorted[i] * n + sorted[j]]];
    }
  }
  return Subalgebra{FiniteAiSemiring(s.name() + "-sub", std::move(names),
                                     std::move(sub_add), std::move(sub_mul)),
                    std::move(inclusion)};
}

std::vector<std::uint32_t> join_table_from_covers(
    std::size_t n,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> covers) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    leq[i * n + i] = 1;
  }
  for (const auto& [lo, hi] : covers) {
    if (lo >= n || hi >= n) {
      throw StructuralError("cover refers to an unknown element");
    }
    leq[lo * n + hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i * n + k] && leq[k * n + j]) {
          leq[i * n + j] = 1;
        }
      }
    }
  }
  std::vector<std::uint32_t> join(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq[a * n + c] || !leq[b * n + c]) {
          continue;
        }
        bool below_all = true;
        for (std::size_t d = 0; d < n && below_all; ++d) {
          if (leq[a * n + d] && leq[b * n + d] && !leq[c * n + d]) {
            below_all = false;
          }
        }
        if (below_all) {
          least = c;
          break;
        }
      }
      if (!least) {
        throw StructuralError("elements " + std::to_string(a) + " and " +
                              std::to_string(b) + " have no least upper bound");
      }
      join[a * n + b] = static_cast<std::uint32_t>(*least);
    }
  }
  return join;
}

}  // namespace aisemi
