#include "acs/cs_engine.hpp"

#include <charconv>
#include <map>
#include <numeric>

#include "acs/error.hpp"

namespace acs {

// ---------------------------------------------------------------------------
// CsValue

CsValue::CsValue(std::uint64_t numerator, std::uint64_t denominator)
    : denominator_(denominator) {
  if (denominator == 0) fail(ErrorKind::InvalidArgument, "CsValue denominator must be positive");
  numerator_ = numerator % denominator;
}

std::string CsValue::to_string() const {
  if (numerator_ == 0) return "0";
  return std::to_string(numerator_) + "/" + std::to_string(denominator_);
}

CsValue CsValue::parse(std::string_view text, std::uint64_t denominator) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(ErrorKind::ParseError, "malformed CS value '" + std::string(text) + "'");
    }
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (parse_uint(text) != 0) {
      fail(ErrorKind::ParseError, "CS value without denominator must be 0");
    }
    return {0, denominator};
  }
  return {parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1))};
}

CsValue operator+(const CsValue& a, const CsValue& b) {
  if (a.denominator_ != b.denominator_) {
    fail(ErrorKind::MismatchedContext, "CS values with different denominators");
  }
  return {a.numerator_ + b.numerator_, a.denominator_};
}

// ---------------------------------------------------------------------------
// Inert-count engine

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a),
                                            static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

void require_family(bool condition, const std::string& what) {
  if (!condition) fail(ErrorKind::InvalidFamily, what);
}

}  // namespace

std::int64_t complementary_radicand(const QuadFamilyInput& input) {
  const auto D = static_cast<std::int64_t>(input.D.value());
  require_family(input.M > 1 && D % input.M == 0, "M must be a divisor > 1 of D");
  const __int128 n = static_cast<__int128>(D / input.M) * input.t;
  if (n > static_cast<__int128>(kMaxFactorable)) fail(ErrorKind::Overflow, "N = D t / M overflows");
  return static_cast<std::int64_t>(n);
}

std::vector<std::uint64_t> counted_inert_primes(const QuadFamilyInput& input) {
  const auto D = static_cast<std::int64_t>(input.D.value());
  require_family(D > 1 && input.D.is_squarefree(), "D must be a squarefree integer > 1");
  require_family(input.t > 1 && is_squarefree_signed(input.t), "t must be a squarefree integer > 1");
  require_family(gcd64(input.t, D) == 1, "t must be coprime to D");
  const std::int64_t N = complementary_radicand(input);

  const std::uint64_t shared = std::gcd(input.dlk.value(), input.D.value());
  std::vector<std::uint64_t> counted;
  for (const PrimePower& pp : input.D.factors()) {
    if (shared % pp.prime != 0) continue;
    if (splitting_type(pp.prime, input.M) == SplitType::Inert ||
        splitting_type(pp.prime, N) == SplitType::Inert) {
      counted.push_back(pp.prime);
    }
  }
  return counted;
}

CsValue cs_inert_count(const QuadFamilyInput& input) {
  return {counted_inert_primes(input).size() % 2, 2};
}

CsValue cs_biquadratic(const BiquadFamilyInput& in) {
  require_family(in.D1 != 1 && is_squarefree_signed(in.D1), "D1 must be squarefree and != 1");
  require_family(in.D2 != 1 && is_squarefree_signed(in.D2), "D2 must be squarefree and != 1");
  require_family(in.t1 > 1 && is_squarefree_signed(in.t1), "t1 must be a squarefree integer > 1");
  require_family(in.t2 > 1 && is_squarefree_signed(in.t2), "t2 must be a squarefree integer > 1");
  const std::int64_t values[4] = {in.D1, in.D2, in.t1, in.t2};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      require_family(gcd64(values[i], values[j]) == 1, "D1, D2, t1, t2 must be pairwise coprime");
    }
  }
  const __int128 product = static_cast<__int128>(in.D1) * in.D2;
  require_family(in.M > 1 && product % in.M == 0, "M must be a positive divisor != 1 of D1 D2");
  return CsValue::zero();
}

// ---------------------------------------------------------------------------
// Discriminant helpers

std::vector<PrimePower> biquadratic_discriminant(std::int64_t d1, std::int64_t d2) {
  const std::int64_t g = gcd64(d1, d2);
  const std::int64_t d3 = (d1 / g) * (d2 / g);
  std::map<std::uint64_t, unsigned> merged;
  for (std::int64_t m : {d1, d2, d3}) {
    const std::int64_t disc = quad_disc(m);
    const std::uint64_t magnitude = static_cast<std::uint64_t>(disc < 0 ? -disc : disc);
    const Factored f = factorize(magnitude);
    for (const PrimePower& pp : f.factors()) merged[pp.prime] += pp.exponent;
  }
  std::vector<PrimePower> out;
  for (const auto& [p, e] : merged) out.push_back({p, e});
  return out;
}

Factored relative_discriminant_norm(const std::vector<PrimePower>& d_L,
                                    const std::vector<PrimePower>& d_K) {
  std::map<std::uint64_t, long> exps;
  for (const PrimePower& pp : d_L) exps[pp.prime] += pp.exponent;
  for (const PrimePower& pp : d_K) exps[pp.prime] -= 2L * pp.exponent;
  std::vector<PrimePower> out;
  for (const auto& [p, e] : exps) {
    if (e < 0) fail(ErrorKind::InvalidArgument, "d_K^2 does not divide d_L");
    if (e > 0) out.push_back({p, static_cast<unsigned>(e)});
  }
  return Factored::from_prime_powers(std::move(out));
}

// ---------------------------------------------------------------------------
// Presets

namespace {

bool minus_two_or_two_mod5(std::int64_t t) {
  const std::int64_t r = ((t % 5) + 5) % 5;
  return r == 2 || r == 3;
}

CsValue half_if(bool condition) { return condition ? CsValue::half() : CsValue::zero(); }

int legendre_product(std::int64_t over, std::int64_t a, std::int64_t extra = 1) {
  int product = 1;
  for (std::uint64_t p : factorize(static_cast<std::uint64_t>(over)).primes()) {
    const auto pi = static_cast<std::int64_t>(p);
    product *= kronecker(a, pi) * kronecker(extra, pi);
  }
  return product;
}

struct FixedPreset {
  PresetKind kind;
  const char* name;
};

constexpr FixedPreset kFixedPresets[] = {
    {PresetKind::KleinQ8_145, "klein-q8-145"},   {PresetKind::KleinQ8_105, "klein-q8-105"},
    {PresetKind::KleinD4_145, "klein-d4-145"},   {PresetKind::S4Gl2f3_7537, "s4-gl2f3-7537"},
    {PresetKind::S4_16T65_2777, "s4-16t65-2777"}, {PresetKind::Biquad, "biquad"},
};

std::int64_t parse_int(std::string_view s, std::string_view context) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(ErrorKind::InvalidArgument, "bad parameter '" + std::string(s) + "' in preset " +
                                         std::string(context));
  }
  return v;
}

}  // namespace

Preset Preset::zn2(std::int64_t p) {
  require_family(p > 2 && is_prime(static_cast<std::uint64_t>(p)) && p % 4 == 1,
                 "zn2 needs a prime p = 1 (mod 4)");
  Preset preset;
  preset.kind = PresetKind::Zn2;
  preset.p = p;
  return preset;
}

Preset Preset::klein_q8(std::int64_t d1, std::int64_t d2) {
  require_family(d1 > 1 && d2 > 1 && is_squarefree_signed(d1) && is_squarefree_signed(d2),
                 "klein-q8 needs squarefree d1, d2 > 1");
  require_family(d1 % 4 == 1 && d2 % 4 == 1, "klein-q8 needs d1 = d2 = 1 (mod 4)");
  require_family(gcd64(d1, d2) == 1, "klein-q8 needs coprime d1, d2");
  require_family(static_cast<__int128>(d1) * d2 <= static_cast<__int128>(kMaxFactorable),
                 "d1 d2 overflows");
  Preset preset;
  preset.kind = PresetKind::KleinQ8;
  preset.d1 = d1;
  preset.d2 = d2;
  return preset;
}

Preset Preset::named(PresetKind kind) {
  if (kind == PresetKind::Zn2 || kind == PresetKind::KleinQ8) {
    fail(ErrorKind::InvalidArgument, "parameterized preset needs its parameters");
  }
  Preset preset;
  preset.kind = kind;
  return preset;
}

std::string Preset::name() const {
  switch (kind) {
    case PresetKind::Zn2: return "zn2:" + std::to_string(p);
    case PresetKind::KleinQ8: return "klein-q8:" + std::to_string(d1) + ":" + std::to_string(d2);
    default: break;
  }
  for (const FixedPreset& fp : kFixedPresets) {
    if (fp.kind == kind) return fp.name;
  }
  return "unknown";
}

unsigned Preset::alpha_count() const noexcept {
  switch (kind) {
    case PresetKind::KleinQ8:
    case PresetKind::KleinQ8_145:
    case PresetKind::KleinQ8_105:
    case PresetKind::KleinD4_145:
    case PresetKind::Biquad:
      return 3;
    default:
      return 1;
  }
}

std::int64_t Preset::discriminant_part() const noexcept {
  switch (kind) {
    case PresetKind::Zn2: return p;
    case PresetKind::KleinQ8: return d1 * d2;
    case PresetKind::KleinQ8_145:
    case PresetKind::KleinD4_145:
    case PresetKind::Biquad: return 145;
    case PresetKind::KleinQ8_105: return 105;
    case PresetKind::S4Gl2f3_7537: return 7537;
    case PresetKind::S4_16T65_2777: return 2777;
  }
  return 1;
}

std::optional<QuadFamilyInput> Preset::engine_data(unsigned alpha) const {
  if (alpha < 1 || alpha > alpha_count()) {
    fail(ErrorKind::InvalidFamily, "alpha must lie in 1.." + std::to_string(alpha_count()));
  }
  QuadFamilyInput in;
  in.D = factorize(static_cast<std::uint64_t>(discriminant_part()));
  auto klein_m = [alpha](std::int64_t a, std::int64_t b) {
    return alpha == 1 ? a : alpha == 2 ? b : a * b;
  };
  switch (kind) {
    case PresetKind::Zn2: {
      // L = quartic subfield of Q(μ_p): d_L = p³, d_K = p.
      const auto pu = static_cast<std::uint64_t>(p);
      in.M = p;
      in.dlk = relative_discriminant_norm({{pu, 3}}, {{pu, 1}});
      return in;
    }
    case PresetKind::KleinQ8:
      // Only the primes of gcd(D_{L/K}, D) matter, and they are those of D.
      in.M = klein_m(d1, d2);
      in.dlk = in.D;
      return in;
    case PresetKind::KleinQ8_145:
      in.M = klein_m(5, 29);
      in.dlk = relative_discriminant_norm({{3, 4}, {5, 6}, {29, 6}}, biquadratic_discriminant(5, 29));
      return in;
    case PresetKind::KleinQ8_105:
      in.M = klein_m(5, 21);
      in.dlk = in.D;
      return in;
    case PresetKind::KleinD4_145:
      in.M = klein_m(5, 29);
      in.dlk = Factored::from_prime_powers({{5, 2}});
      return in;
    case PresetKind::S4Gl2f3_7537:
      in.M = 7537;
      in.dlk = relative_discriminant_norm({{3, 24}, {7537, 24}}, {{7537, 12}});
      return in;
    case PresetKind::S4_16T65_2777:
    case PresetKind::Biquad:
      return std::nullopt;
  }
  return std::nullopt;
}

Preset parse_preset(std::string_view name) {
  for (const FixedPreset& fp : kFixedPresets) {
    if (name == fp.name) return Preset::named(fp.kind);
  }
  if (name.starts_with("zn2:")) {
    return Preset::zn2(parse_int(name.substr(4), name));
  }
  if (name.starts_with("klein-q8:")) {
    const std::string_view rest = name.substr(9);
    const std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) {
      fail(ErrorKind::InvalidArgument, "klein-q8 preset needs the form klein-q8:<d1>:<d2>");
    }
    return Preset::klein_q8(parse_int(rest.substr(0, colon), name),
                            parse_int(rest.substr(colon + 1), name));
  }
  fail(ErrorKind::InvalidArgument, "unknown preset '" + std::string(name) + "'");
}

std::vector<std::string> fixed_preset_names() {
  std::vector<std::string> names;
  for (const FixedPreset& fp : kFixedPresets) names.emplace_back(fp.name);
  return names;
}

bool is_admissible_t(const Preset& preset, std::int64_t t) {
  return t > 1 && gcd64(t, preset.discriminant_part()) == 1 && is_squarefree_signed(t);
}

std::int64_t biquad_companion_t2(std::int64_t t1) {
  for (std::int64_t q = 2;; ++q) {
    if (is_prime(static_cast<std::uint64_t>(q)) && 145 % q != 0 && t1 % q != 0) return q;
  }
}

CsValue preset_eval(const Preset& preset, std::int64_t t, unsigned alpha) {
  if (alpha < 1 || alpha > preset.alpha_count()) {
    fail(ErrorKind::InvalidFamily,
         "alpha must lie in 1.." + std::to_string(preset.alpha_count()) + " for " + preset.name());
  }
  require_family(is_admissible_t(preset, t),
                 "t = " + std::to_string(t) + " must be a squarefree integer > 1 coprime to " +
                     std::to_string(preset.discriminant_part()));

  switch (preset.kind) {
    case PresetKind::Zn2:
      return half_if(kronecker(t, preset.p) == -1);
    case PresetKind::KleinQ8: {
      const std::int64_t d1 = preset.d1, d2 = preset.d2;
      int product = 1;
      if (alpha == 1) {
        product = legendre_product(d1, d2, t) * legendre_product(d2, d1);
      } else if (alpha == 2) {
        product = legendre_product(d1, d2) * legendre_product(d2, d1, t);
      } else {
        product = legendre_product(d1 * d2, t);
      }
      return half_if(product == -1);
    }
    case PresetKind::KleinQ8_145:
      if (alpha == 1) return half_if(minus_two_or_two_mod5(t));
      if (alpha == 2) return half_if(kronecker(t, 29) == -1);
      return half_if(kronecker(t, 5) == -kronecker(t, 29));
    case PresetKind::KleinQ8_105:
      if (alpha == 1) return half_if(minus_two_or_two_mod5(t));
      if (alpha == 2) return half_if(kronecker(t, 3) == -kronecker(t, 7));
      return half_if(kronecker(t, 3) * kronecker(t, 5) * kronecker(t, 7) == -1);
    case PresetKind::KleinD4_145:
      if (alpha == 2) return CsValue::zero();
      return half_if(minus_two_or_two_mod5(t));
    case PresetKind::S4Gl2f3_7537:
      return CsValue::zero();
    case PresetKind::S4_16T65_2777:
      return half_if(kronecker(t, 2777) == -1);
    case PresetKind::Biquad: {
      const std::int64_t m = alpha == 1 ? 5 : alpha == 2 ? 29 : 145;
      return cs_biquadratic({5, 29, t, biquad_companion_t2(t), m});
    }
  }
  return CsValue::zero();
}

ConsistencyReport consistency_check(const Preset& preset, std::int64_t t_min,
                                    std::int64_t t_max) {
  ConsistencyReport report;
  report.preset = preset.name();
  for (unsigned alpha = 1; alpha <= preset.alpha_count(); ++alpha) {
    std::optional<QuadFamilyInput> data = preset.engine_data(alpha);
    if (!data) {
      fail(ErrorKind::InvalidArgument, preset.name() + " carries no engine data");
    }
    for (std::int64_t t = std::max<std::int64_t>(t_min, 2); t <= t_max; ++t) {
      if (!is_admissible_t(preset, t)) continue;
      data->t = t;
      const CsValue closed = preset_eval(preset, t, alpha);
      const CsValue engine = cs_inert_count(*data);
      ++report.checked;
      if (!(closed == engine)) report.mismatches.push_back({t, alpha, closed, engine});
    }
  }
  return report;
}

std::vector<ScanRecord> scan(const Preset& preset, unsigned alpha, std::int64_t t_max) {
  std::vector<ScanRecord> records;
  for (std::int64_t t = 2; t <= t_max; ++t) {
    if (!is_admissible_t(preset, t)) continue;
    records.push_back({t, alpha, preset_eval(preset, t, alpha)});
  }
  return records;
}

DensityResult summarize(const std::vector<ScanRecord>& records) {
  DensityResult result;
  for (const ScanRecord& r : records) {
    if (r.value.is_zero()) {
      ++result.count_zero;
    } else {
      ++result.count_half;
    }
  }
  const std::uint64_t total = result.count_half + result.count_zero;
  result.density = total == 0 ? 0.0 : static_cast<double>(result.count_half) / static_cast<double>(total);
  return result;
}

DensityResult density_scan(const Preset& preset, unsigned alpha, std::int64_t t_max) {
  if (t_max < 100) fail(ErrorKind::InvalidArgument, "density scans need t_max >= 100");
  return summarize(scan(preset, alpha, t_max));
}

}  // namespace acs
