#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace acs {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer below 2^63 together with its prime factorization,
/// primes strictly increasing.
class Factored {
 public:
  Factored() = default;  // the value 1

  /// Factors `value`. Throws Error{Overflow} above 2^63 - 1 and
  /// Error{InvalidArgument} for 0.
  explicit Factored(std::uint64_t value);

  /// Builds from explicit prime powers (merged and sorted). Bases must be
  /// prime; throws Error{InvalidArgument} otherwise, Error{Overflow} when the
  /// product leaves the signed 64-bit range.
  static Factored from_prime_powers(std::vector<PrimePower> factors);

  std::uint64_t value() const noexcept { return value_; }
  const std::vector<PrimePower>& factors() const noexcept { return factors_; }
  std::vector<std::uint64_t> primes() const;
  bool is_squarefree() const noexcept;

  /// "3^4 * 5^2 * 29", or "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factored&, const Factored&) = default;

 private:
  std::uint64_t value_ = 1;
  std::vector<PrimePower> factors_;
};

/// Accepts a plain integer or a product of powers such as "3^4*5^2*29^2".
/// Bases need not be prime; the product is refactored.
Factored parse_factored(std::string_view text);

inline constexpr std::uint64_t kMaxFactorable = 0x7fffffffffffffffULL;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

Factored factorize(std::uint64_t value);
bool is_squarefree(std::uint64_t value);
/// Squarefree test for signed values; the sign is ignored. 0 is not squarefree.
bool is_squarefree_signed(std::int64_t value);

/// Kronecker symbol (a / m), with the usual extension to m = 0, m even, m < 0.
int kronecker(std::int64_t a, std::int64_t m) noexcept;

/// Fundamental discriminant of Q(sqrt(m)) for squarefree m not in {0, 1}.
std::int64_t quad_disc(std::int64_t m);

enum class SplitType { Split, Inert, Ramified };

std::string_view to_string(SplitType type) noexcept;

/// Decomposition of the prime p in Q(sqrt(m)).
SplitType splitting_type(std::uint64_t p, std::int64_t m);

}  // namespace acs
