#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acs {

/// Index of a group element, 0..order-1.
using Element = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 512;
/// Exhaustive split-pair enumeration bound.
inline constexpr std::size_t kMaxSplitEnumerationOrder = 64;

/// A finite group stored as a dense multiplication table.
///
/// Instances are immutable and validated on construction (identity,
/// inverses, associativity over all triples).
class FiniteGroup {
 public:
  /// Validates `table` (row-major, order*order entries) and builds the group.
  /// Throws Error{NotAGroup} on malformed tables, Error{OrderCapExceeded}
  /// above kMaxGroupOrder.
  static std::shared_ptr<const FiniteGroup> make(std::size_t order,
                                                 std::vector<Element> table,
                                                 std::string name = {});

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inverse_[a]; }
  Element pow(Element a, std::size_t k) const noexcept;

  std::span<const Element> table() const noexcept { return table_; }

  bool is_abelian() const noexcept;
  std::size_t element_order(Element a) const noexcept;
  std::size_t exponent() const noexcept;
  std::size_t center_size() const noexcept;
  /// Number of elements whose order is at most k.
  std::size_t count_elements_of_order_at_most(std::size_t k) const noexcept;

  /// Table equality; names are ignored.
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Table-level validation and construction; same as FiniteGroup::make.
GroupPtr make_group(std::size_t order, std::vector<Element> table,
                    std::string name = {});

/// Z/nZ under addition; element i is the residue i.
GroupPtr cyclic_group(std::size_t n);

/// True when `g` is literally the table of cyclic_group(n) for some n.
bool is_standard_cyclic(const FiniteGroup& g) noexcept;

/// A homomorphism given by the image of every source element.
class GroupHom {
 public:
  /// Throws Error{NotAHomomorphism} if the map is not multiplicative or the
  /// image array has the wrong length or out-of-range entries.
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> image);

  static GroupHom identity(GroupPtr g);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  Element operator()(Element a) const noexcept { return image_[a]; }
  std::span<const Element> image() const noexcept { return image_; }

  friend bool operator==(const GroupHom& a, const GroupHom& b) noexcept;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Element> image_;
};

/// outer ∘ inner. Throws Error{MismatchedContext} when inner's target is not
/// outer's source.
GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// An action of Z/nZ on `base` by automorphisms, given as explicit
/// permutation tables: action[k][g] is α(k)(g).
struct SemidirectSpec {
  GroupPtr base;
  std::size_t n = 0;
  std::vector<std::vector<Element>> action;
  std::string name;  // optional display name for the product
};

/// A group together with a section φ : Z/nZ → A and a projection
/// ψ : A → Z/nZ satisfying ψ∘φ = Id.
struct SplitGroup {
  GroupPtr group;
  GroupHom section;     // φ
  GroupHom projection;  // ψ
};

/// G ⋊_α Z/nZ. Element (g, j) has index j*|G| + g and
/// (g, j)(h, k) = (g·α(j)(h), j + k).
/// Throws Error{InvalidAction} if α is not a homomorphism Z/nZ → Aut(G).
SplitGroup semidirect_product(const SemidirectSpec& spec);

/// Upper unitriangular Heisenberg group H_d(Z/nZ) of order n^(2d-3).
/// ψ reads the last entry of the top row vector; the kernel
/// {a_{d-2} = 0} plays the role of G and Z/nZ acts on it by conjugation.
SplitGroup heisenberg(std::size_t d, std::size_t n);

/// GL(2, F_q) for q in {3, 4, 5}; ψ = discrete log of the determinant onto
/// Z/(q-1)Z, φ(k) = diag(g^k, 1) for a fixed primitive element g.
/// Matrices [[a, b], [c, d]] are enumerated row-major over (a, b, c, d),
/// invertible ones only, in lexicographic order of field-element codes.
SplitGroup gl2(std::size_t q);

/// The quaternion group Q_8; elements ordered 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();
/// Z/3 ⋊ Z/2 with inversion (≅ S_3).
SplitGroup symmetric3();
/// Z/4 ⋊ Z/2 with inversion (≅ D_4).
SplitGroup dihedral4();

struct SplitPair {
  GroupHom section;     // φ : Z/nZ → A
  GroupHom projection;  // ψ : A → Z/nZ
};

/// All homomorphisms Z/nZ → A, in order of the image of 1.
std::vector<GroupHom> homs_from_cyclic(const GroupPtr& a, std::size_t n);
/// All homomorphisms A → Z/nZ.
std::vector<GroupHom> homs_to_cyclic(const GroupPtr& a, std::size_t n);

/// Every (φ, ψ) with ψ∘φ = Id. Throws Error{OrderCapExceeded} when
/// |A| > kMaxSplitEnumerationOrder.
std::vector<SplitPair> enumerate_split_pairs(const GroupPtr& a, std::size_t n);

}  // namespace acs
