#include "acs/number_theory.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "acs/error.hpp"

namespace acs {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1 << 16;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > kMaxFactorable) fail(ErrorKind::Overflow, "product exceeds 2^63 - 1");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t c) {
  // Brent's cycle detection with batched gcds.
  auto f = [n, c](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
  std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  const std::uint64_t batch = 128;
  std::uint64_t r = 1;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(batch, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
      k += batch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_large(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = n;
  for (std::uint64_t c = 1; d == n; ++c) d = pollard_brent(n, c);
  factor_large(d, out);
  factor_large(n / d, out);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Primes up to kTrialDivisionLimit, sieved once.
const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

Factored::Factored(std::uint64_t value) {
  if (value == 0) fail(ErrorKind::InvalidArgument, "cannot factor 0");
  if (value > kMaxFactorable) fail(ErrorKind::Overflow, "value exceeds 2^63 - 1");
  value_ = value;
  std::map<std::uint64_t, unsigned> found;
  std::uint64_t rest = value;
  auto strip = [&](std::uint64_t p) {
    while (rest % p == 0) {
      rest /= p;
      ++found[p];
    }
  };
  for (std::uint32_t p : trial_primes()) {
    if (std::uint64_t{p} * p > rest) break;
    strip(p);
  }
  if (rest > 1) factor_large(rest, found);
  for (const auto& [p, e] : found) factors_.push_back({p, e});
}

Factored Factored::from_prime_powers(std::vector<PrimePower> factors) {
  std::map<std::uint64_t, unsigned> merged;
  for (const PrimePower& pp : factors) {
    if (pp.exponent == 0) continue;
    if (!is_prime(pp.prime)) {
      fail(ErrorKind::InvalidArgument, std::to_string(pp.prime) + " is not prime");
    }
    merged[pp.prime] += pp.exponent;
  }
  Factored f;
  for (const auto& [p, e] : merged) {
    for (unsigned i = 0; i < e; ++i) f.value_ = checked_mul(f.value_, p);
    f.factors_.push_back({p, e});
  }
  return f;
}

std::vector<std::uint64_t> Factored::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const PrimePower& pp : factors_) out.push_back(pp.prime);
  return out;
}

bool Factored::is_squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::string Factored::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const PrimePower& pp : factors_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent != 1) out += "^" + std::to_string(pp.exponent);
  }
  return out;
}

Factored parse_factored(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  if (compact.empty()) fail(ErrorKind::ParseError, "empty factored value");

  auto parse_uint = [](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc::result_out_of_range) fail(ErrorKind::Overflow, "number out of range");
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(ErrorKind::ParseError, "malformed number '" + std::string(s) + "'");
    }
    return v;
  };

  std::uint64_t product = 1;
  std::string_view rest = compact;
  while (true) {
    const std::size_t star = rest.find('*');
    std::string_view term = rest.substr(0, star);
    const std::size_t caret = term.find('^');
    std::uint64_t base = parse_uint(term.substr(0, caret));
    std::uint64_t exp = caret == std::string_view::npos ? 1 : parse_uint(term.substr(caret + 1));
    if (base == 0) fail(ErrorKind::InvalidArgument, "factored value must be positive");
    for (std::uint64_t i = 0; i < exp; ++i) product = checked_mul(product, base);
    if (star == std::string_view::npos) break;
    rest = rest.substr(star + 1);
  }
  return Factored(product);
}

Factored factorize(std::uint64_t value) { return Factored(value); }

bool is_squarefree(std::uint64_t value) { return Factored(value).is_squarefree(); }

bool is_squarefree_signed(std::int64_t value) {
  if (value == 0) return false;
  const std::uint64_t magnitude =
      value < 0 ? 0 - static_cast<std::uint64_t>(value) : static_cast<std::uint64_t>(value);
  return is_squarefree(magnitude);
}

namespace {

// Jacobi symbol for odd positive m.
int jacobi(std::uint64_t a, std::uint64_t m) noexcept {
  a %= m;
  int result = 1;
  while (a != 0) {
    while ((a & 1U) == 0) {
      a >>= 1U;
      const std::uint64_t r = m & 7U;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if ((a & 3U) == 3 && (m & 3U) == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t m) noexcept {
  if (m == 0) return (a == 1 || a == -1) ? 1 : 0;
  const bool a_even = (a & 1) == 0;
  if (a_even && (m & 1) == 0) return 0;

  int result = 1;
  // Work with |m| as unsigned so INT64_MIN is safe.
  std::uint64_t mm = m < 0 ? 0 - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
  unsigned twos = 0;
  while ((mm & 1U) == 0) {
    mm >>= 1U;
    ++twos;
  }
  if (twos % 2 == 1) {
    const std::int64_t a8 = ((a % 8) + 8) % 8;
    if (a8 == 3 || a8 == 5) result = -result;
  }
  if (m < 0 && a < 0) result = -result;

  std::uint64_t a_mod;
  if (a >= 0) {
    a_mod = static_cast<std::uint64_t>(a) % mm;
  } else {
    const std::uint64_t neg = (0 - static_cast<std::uint64_t>(a)) % mm;
    a_mod = neg == 0 ? 0 : mm - neg;
  }
  return result * jacobi(a_mod, mm);
}

std::int64_t quad_disc(std::int64_t m) {
  if (m == 0 || m == 1) fail(ErrorKind::InvalidArgument, "Q(sqrt(m)) needs m not in {0, 1}");
  if (!is_squarefree_signed(m)) {
    fail(ErrorKind::NotSquarefree, std::to_string(m) + " is not squarefree");
  }
  const std::int64_t r = ((m % 4) + 4) % 4;
  if (r == 1) return m;
  constexpr auto kLimit = static_cast<std::int64_t>(kMaxFactorable / 4);
  if (m > kLimit || m < -kLimit) {
    fail(ErrorKind::Overflow, "discriminant 4m leaves the 64-bit range");
  }
  return 4 * m;
}

std::string_view to_string(SplitType type) noexcept {
  switch (type) {
    case SplitType::Split: return "split";
    case SplitType::Inert: return "inert";
    case SplitType::Ramified: return "ramified";
  }
  return "unknown";
}

SplitType splitting_type(std::uint64_t p, std::int64_t m) {
  if (p > kMaxFactorable) fail(ErrorKind::Overflow, "prime exceeds 2^63 - 1");
  if (!is_prime(p)) fail(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  const std::int64_t disc = quad_disc(m);
  const auto pi = static_cast<std::int64_t>(p);
  if (disc % pi == 0) return SplitType::Ramified;
  return kronecker(disc, pi) == 1 ? SplitType::Split : SplitType::Inert;
}

}  // namespace acs
