#pragma once

// Finite additively idempotent semirings given by Cayley tables.
//
// Elements are dense indices 0..n-1 with a parallel name table.  Both tables
// are stored row-major as uint32 so they can be fed straight into the
// gather kernels in simd/kernels.hpp.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aisemi {

enum class ElementId : std::uint32_t {};

constexpr std::uint32_t index_of(ElementId e) noexcept {
  return static_cast<std::uint32_t>(e);
}

constexpr ElementId element(std::size_t i) noexcept {
  return static_cast<ElementId>(static_cast<std::uint32_t>(i));
}

class FiniteAiSemiring {
 public:
  // Throws StructuralError unless both tables are n*n with entries < n and
  // the element names are distinct, nonempty, whitespace-free tokens.
  FiniteAiSemiring(std::string name, std::vector<std::string> elements,
                   std::vector<std::uint32_t> add,
                   std::vector<std::uint32_t> mul);

  static FiniteAiSemiring from_rows(
      std::string name, std::vector<std::string> elements,
      const std::vector<std::vector<std::uint32_t>>& add,
      const std::vector<std::vector<std::uint32_t>>& mul);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::uint32_t order() const noexcept {
    return static_cast<std::uint32_t>(elements_.size());
  }

  const std::vector<std::string>& element_names() const noexcept {
    return elements_;
  }
  const std::string& element_name(ElementId e) const {
    return elements_.at(index_of(e));
  }
  std::optional<ElementId> find_element(std::string_view name) const;

  ElementId sum(ElementId a, ElementId b) const noexcept {
    return element(add_[index_of(a) * order() + index_of(b)]);
  }
  ElementId product(ElementId a, ElementId b) const noexcept {
    return element(mul_[index_of(a) * order() + index_of(b)]);
  }

  std::span<const std::uint32_t> add_table() const noexcept { return add_; }
  std::span<const std::uint32_t> mul_table() const noexcept { return mul_; }

  FiniteAiSemiring renamed(std::string name) const;

  // Copies with one table entry replaced; used to build mutants.
  FiniteAiSemiring with_sum(ElementId a, ElementId b, ElementId value) const;
  FiniteAiSemiring with_product(ElementId a, ElementId b,
                                ElementId value) const;

  // Multiplicative identity, if any (first in index order).
  std::optional<ElementId> multiplicative_identity() const;
  // Multiplicative zero, if any.
  std::optional<ElementId> multiplicative_zero() const;
  bool is_multiplicatively_commutative() const;

  friend bool operator==(const FiniteAiSemiring& a,
                         const FiniteAiSemiring& b) = default;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

enum class Law {
  add_commutative,
  add_idempotent,
  add_associative,
  mul_associative,
  left_distributive,
  right_distributive,
};

std::string_view law_name(Law law);

struct Violation {
  Law law;
  // Only the first `arity` entries are meaningful.
  std::array<ElementId, 3> witness;
  int arity;
};

struct ValidationReport {
  bool ok = true;
  // At most one violation per law: the first in lexicographic scan order.
  std::vector<Violation> violations;

  bool violates(Law law) const;
  const Violation* find(Law law) const;
};

ValidationReport validate_axioms(const FiniteAiSemiring& s);

std::string describe(const FiniteAiSemiring& s, const Violation& v);

class OrderRelation {
 public:
  OrderRelation(std::size_t n, std::vector<std::uint8_t> leq);

  std::size_t size() const noexcept { return n_; }
  bool leq(ElementId a, ElementId b) const noexcept {
    return leq_[index_of(a) * n_ + index_of(b)] != 0;
  }
  std::vector<std::pair<ElementId, ElementId>> pairs() const;
  // Covering pairs (a, b) with a < b and nothing strictly between.
  const std::vector<std::pair<ElementId, ElementId>>& covers() const noexcept {
    return covers_;
  }
  // n*n 0/1 table, laid out like the Cayley tables.
  std::span<const std::uint32_t> relation_table() const noexcept {
    return table_;
  }
  // Longest chain length below each element; used for Hasse layering.
  std::vector<std::size_t> heights() const;

 private:
  std::size_t n_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint32_t> table_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
};

// a <= b iff a + b = b.  Assumes the algebra validates.
OrderRelation natural_order(const FiniteAiSemiring& s);

// Text rendering of the Hasse diagram, top level first.
std::string hasse_diagram(const FiniteAiSemiring& s, const OrderRelation& o);

inline constexpr std::size_t kDefaultProductCap = 5000;

// Componentwise product; element (i, j) has index i * |B| + j.  Throws
// GuardError if |A| * |B| exceeds `cap`.
FiniteAiSemiring direct_product(const FiniteAiSemiring& a,
                                const FiniteAiSemiring& b,
                                std::size_t cap = kDefaultProductCap);

struct Subalgebra {
  FiniteAiSemiring algebra;
  // inclusion[i] is the element of the parent that element i denotes.
  std::vector<ElementId> inclusion;
};

// Smallest subset containing `generators` closed under + and *.  Elements
// keep their parent order and names.
Subalgebra subalgebra_generated(const FiniteAiSemiring& s,
                                std::span<const ElementId> generators);

// Builds a join table from covering pairs of a finite poset; throws
// StructuralError if some pair lacks a least upper bound.
std::vector<std::uint32_t> join_table_from_covers(
    std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>>
                       covers);

}  // namespace aisemi
