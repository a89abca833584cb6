#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acs/number_theory.hpp"

namespace acs {

/// An element numerator/denominator of (1/n)Z/Z.
///
/// For n > 2 the identification with (1/n)Z/Z is only canonical up to
/// Aut(Z/nZ); every family evaluated here has n = 2.
class CsValue {
 public:
  CsValue() = default;
  CsValue(std::uint64_t numerator, std::uint64_t denominator);

  static CsValue zero() { return {0, 2}; }
  static CsValue half() { return {1, 2}; }

  std::uint64_t numerator() const noexcept { return numerator_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  /// "0", "1/2", or generally "k/n".
  std::string to_string() const;
  /// Inverse of to_string; `denominator` is needed to read "0".
  static CsValue parse(std::string_view text, std::uint64_t denominator = 2);

  friend CsValue operator+(const CsValue& a, const CsValue& b);
  friend bool operator==(const CsValue&, const CsValue&) = default;

 private:
  std::uint64_t numerator_ = 0;
  std::uint64_t denominator_ = 2;
};

/// Integer data of the inert-count theorem. The caller asserts the
/// field-theoretic hypotheses; only the arithmetic ones are checked.
struct QuadFamilyInput {
  Factored D;           // squarefree, > 1
  std::int64_t t = 0;   // squarefree, > 1, coprime to D
  std::int64_t M = 0;   // divisor of D, > 1: F^α = F(√M)
  Factored dlk;         // D_{L/K} = d_L / d_K²
};

/// N = D·t / M.
std::int64_t complementary_radicand(const QuadFamilyInput& input);

/// Primes p | gcd(D_{L/K}, D) inert in Q(√M) or in Q(√N).
/// Throws Error{InvalidFamily} when the arithmetic hypotheses fail.
std::vector<std::uint64_t> counted_inert_primes(const QuadFamilyInput& input);

/// s/2 mod 1 with s = counted_inert_primes(input).size().
CsValue cs_inert_count(const QuadFamilyInput& input);

struct BiquadFamilyInput {
  std::int64_t D1 = 0, D2 = 0;  // squarefree, ≠ 1
  std::int64_t t1 = 0, t2 = 0;  // squarefree, > 1
  std::int64_t M = 0;           // positive divisor of D1·D2, ≠ 1
};

/// Always 0 once the arithmetic hypotheses hold; throws Error{InvalidFamily}
/// otherwise.
CsValue cs_biquadratic(const BiquadFamilyInput& input);

// ---------------------------------------------------------------------------
// Presets

enum class PresetKind {
  Zn2,              // A = Z/2, p ≡ 1 (mod 4) prime
  KleinQ8,          // A = (Z/2)², Γ = Q_8, generic (d1, d2)
  KleinQ8_145,      // K = Q(√5, √29)
  KleinQ8_105,      // K = Q(√5, √21)
  KleinD4_145,      // Γ = D_4, K = Q(√5, √29)
  S4Gl2f3_7537,     // A = S_4, Γ = GL(2, F_3), D = 7537
  S4_16T65_2777,    // A = S_4, Γ = 16T65, D = 2777
  Biquad,           // F = Q(√(5 t1), √(29 t2))
};

struct Preset {
  PresetKind kind = PresetKind::KleinQ8_145;
  std::int64_t p = 0;   // Zn2
  std::int64_t d1 = 0;  // KleinQ8
  std::int64_t d2 = 0;  // KleinQ8

  static Preset zn2(std::int64_t p);
  static Preset klein_q8(std::int64_t d1, std::int64_t d2);
  static Preset named(PresetKind kind);

  /// CLI name: "zn2:13", "klein-q8:5:29", "klein-q8-145", ...
  std::string name() const;
  /// Number of choices for α (quadratic subfields of F^-).
  unsigned alpha_count() const noexcept;
  /// The squarefree D that t must be coprime to.
  std::int64_t discriminant_part() const noexcept;

  /// (D, M, D_{L/K}) for α, with t left at 0; nullopt when the preset has
  /// no engine data (16T65, Biquad).
  std::optional<QuadFamilyInput> engine_data(unsigned alpha) const;
};

/// Parses a CLI preset name. Throws Error{InvalidArgument} for unknown names
/// and Error{InvalidFamily} for invalid parameters.
Preset parse_preset(std::string_view name);

/// All names accepted by parse_preset without parameters.
std::vector<std::string> fixed_preset_names();

/// True when t > 1 is squarefree and coprime to the preset's D.
bool is_admissible_t(const Preset& preset, std::int64_t t);

/// Closed-form Legendre criterion of the preset.
/// Throws Error{InvalidFamily} for inadmissible t or α out of range.
CsValue preset_eval(const Preset& preset, std::int64_t t, unsigned alpha = 1);

/// The second parameter used by the Biquad preset for a given t1.
std::int64_t biquad_companion_t2(std::int64_t t1);

struct Mismatch {
  std::int64_t t = 0;
  unsigned alpha = 0;
  CsValue closed_form;
  CsValue engine;
};

struct ConsistencyReport {
  std::string preset;
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
};

/// Compares preset_eval against cs_inert_count(engine_data) for every
/// admissible t in [t_min, t_max] and every α. Throws Error{InvalidArgument}
/// for presets without engine data.
ConsistencyReport consistency_check(const Preset& preset, std::int64_t t_min,
                                    std::int64_t t_max);

struct ScanRecord {
  std::int64_t t = 0;
  unsigned alpha = 1;
  CsValue value;
};

/// preset_eval over admissible t in [2, t_max], ascending.
std::vector<ScanRecord> scan(const Preset& preset, unsigned alpha, std::int64_t t_max);

struct DensityResult {
  std::uint64_t count_half = 0;
  std::uint64_t count_zero = 0;
  /// count_half / (count_half + count_zero).
  double density = 0.0;
};

DensityResult summarize(const std::vector<ScanRecord>& records);

/// Throws Error{InvalidArgument} for t_max < 100.
DensityResult density_scan(const Preset& preset, unsigned alpha, std::int64_t t_max);

/// Discriminant of Q(√d1, √d2) by conductor-discriminant: the product of the
/// three quadratic subfield discriminants. Factored form, since d_K can be
/// large.
std::vector<PrimePower> biquadratic_discriminant(std::int64_t d1, std::int64_t d2);

/// d_L / d_K² computed on exponent vectors. Throws Error{InvalidArgument}
/// unless d_K² divides d_L.
Factored relative_discriminant_norm(const std::vector<PrimePower>& d_L,
                                    const std::vector<PrimePower>& d_K);

}  // namespace acs
