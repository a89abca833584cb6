#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "acs/group.hpp"

namespace acs {

using Residue = std::uint32_t;

/// Cochains larger than this (values) are refused with SizeCapExceeded.
inline constexpr std::size_t kMaxCochainSize = std::size_t{1} << 26;

/// An inhomogeneous k-cochain G^k → Z/nZ, stored densely in lexicographic
/// tuple order (g_1 most significant). No normalization is imposed.
class Cochain {
 public:
  /// The zero cochain.
  Cochain(GroupPtr group, unsigned degree, Residue modulus);
  /// Throws Error{InvalidArgument} if any value is not reduced mod `modulus`
  /// or the length is not |G|^degree.
  Cochain(GroupPtr group, unsigned degree, Residue modulus, std::vector<Residue> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  unsigned degree() const noexcept { return degree_; }
  Residue modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const Residue> values() const noexcept { return values_; }
  Residue operator[](std::size_t index) const noexcept { return values_[index]; }
  /// Value at an explicit tuple of `degree()` elements.
  Residue at(std::span<const Element> args) const;
  void set(std::size_t index, std::uint64_t value) noexcept {
    values_[index] = static_cast<Residue>(value % modulus_);
  }

  bool is_zero() const noexcept;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  Cochain scaled(std::uint64_t k) const;

  /// Equal group tables, degree, modulus and values.
  friend bool operator==(const Cochain& a, const Cochain& b) noexcept;

 private:
  void require_compatible(const Cochain& other) const;

  GroupPtr group_;
  unsigned degree_ = 0;
  Residue modulus_ = 2;
  std::vector<Residue> values_;
};

/// |G|^k, or SizeCapExceeded when it passes kMaxCochainSize.
std::size_t cochain_size(std::size_t group_order, unsigned degree);

/// True when both refer to the same group table.
bool same_group(const FiniteGroup& a, const FiniteGroup& b) noexcept;

}  // namespace acs
