#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acs {

/// Systems with more equations than this are refused.
inline constexpr std::size_t kMaxEquations = std::size_t{1} << 21;
/// Dense Z/p^e (e ≥ 2) elimination is refused above this many matrix entries.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 26;

/// A sparse linear system A x = b over Z/nZ, rows stored contiguously.
class ModularSystem {
 public:
  struct Term {
    std::uint32_t column;
    std::uint64_t coefficient;
  };

  ModularSystem(std::size_t unknowns, std::uint64_t modulus);

  /// Coefficients and rhs are reduced mod n; repeated columns are summed.
  void add_equation(std::span<const Term> terms, std::uint64_t rhs);

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t equations() const noexcept { return rhs_.size(); }

  std::span<const Term> row(std::size_t i) const noexcept {
    return {terms_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::uint64_t rhs(std::size_t i) const noexcept { return rhs_[i]; }

 private:
  std::size_t unknowns_;
  std::uint64_t modulus_;
  std::vector<Term> terms_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint64_t> rhs_;
};

/// Returns some x with A x ≡ b (mod n), or nullopt if none exists.
///
/// n is split by CRT into prime powers. Over F_p the rows are folded one at a
/// time into a fully reduced echelon basis (64-bit packed rows when p = 2);
/// over Z/p^e with e ≥ 2 a dense elimination with minimal-valuation full
/// pivoting is used. Deterministic: pivot order depends only on the input.
/// Throws Error{SizeCapExceeded} beyond kMaxEquations or kMaxDenseEntries.
std::optional<std::vector<std::uint64_t>> solve(const ModularSystem& system);

}  // namespace acs
