#pragma once

#include <cstdint>
#include <optional>

#include "acs/cochain.hpp"
#include "acs/group.hpp"

namespace acs {

/// Inhomogeneous differential with trivial coefficients:
///   (da)(g_1..g_{k+1}) = a(g_2..g_{k+1})
///                        + Σ_{i=1..k} (-1)^i a(.., g_i g_{i+1}, ..)
///                        + (-1)^{k+1} a(g_1..g_k).
Cochain coboundary(const Cochain& a);

/// (a ∪ b)(g_1..g_{p+q}) = a(g_1..g_p) · b(g_{p+1}..g_{p+q}).
/// Throws Error{MismatchedContext} for different groups or moduli.
Cochain cup(const Cochain& a, const Cochain& b);

/// Connecting map of 0 → Z/n → Z/n² → Z/n → 0: lift each residue to the
/// same integer in {0..n-1}, apply d over the integers and divide by n.
/// Throws Error{NotACocycle} when dz ≠ 0.
Cochain bockstein(const Cochain& z);

/// (f*a)(g_1..g_k) = a(f(g_1)..f(g_k)).
Cochain pullback(const GroupHom& f, const Cochain& a);

/// Entrywise reduction mod m. Throws Error{NotADivisor} unless m | n and m ≥ 2.
Cochain push_coefficients(const Cochain& a, Residue m);

bool is_cocycle(const Cochain& z);

struct CoboundaryResult {
  bool is_coboundary = false;
  /// b with db = z, present when is_coboundary and deg z ≥ 1.
  std::optional<Cochain> witness;
};

/// Decides z ∈ d(C^{k-1}) exactly over Z/nZ.
/// Throws Error{NotACocycle} when dz ≠ 0 and Error{SizeCapExceeded} when the
/// linear system has more than 2^21 equations.
CoboundaryResult is_coboundary(const Cochain& z);

/// A cohomology class, held through a representative cocycle.
class CohClass {
 public:
  /// Throws Error{NotACocycle} unless `rep` is a cocycle.
  explicit CohClass(Cochain rep);
  const Cochain& rep() const noexcept { return rep_; }

  /// a ∪ β(a) for a 1-cocycle a. The product of cocycles is a cocycle, so
  /// the O(|G|^4) check of the constructor is skipped.
  static CohClass cup_with_bockstein(const Cochain& a);

 private:
  struct Trusted {};
  CohClass(Cochain rep, Trusted) : rep_(std::move(rep)) {}

  Cochain rep_;
};

/// Least k ≥ 1 with k·c cohomologous to 0; always divides the modulus.
std::uint64_t class_order(const CohClass& c);

/// Id ∪ δ(Id) ∈ H³(Z/nZ, Z/nZ).
CohClass cyclic_generator(Residue n);

/// ψ ∪ δ(ψ) for ψ : A → Z/nZ read as a 1-cochain.
/// Throws Error{InvalidArgument} unless ψ's target is cyclic_group(n).
CohClass twist_class(const GroupHom& psi);

/// Whether φ*(ψ ∪ δψ) is cohomologous to Id ∪ δ(Id) in H³(Z/nZ, Z/nZ).
/// Throws Error{NotASection} unless ψ∘φ = Id.
bool twist_verify(const GroupHom& phi, const GroupHom& psi);

}  // namespace acs
