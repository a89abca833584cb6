#include "acs/zn_solver.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "acs/error.hpp"
#include "acs/number_theory.hpp"

namespace acs {

ModularSystem::ModularSystem(std::size_t unknowns, std::uint64_t modulus)
    : unknowns_(unknowns), modulus_(modulus) {
  if (modulus < 2) fail(ErrorKind::InvalidArgument, "system modulus must be >= 2");
  if (unknowns > UINT32_MAX) fail(ErrorKind::SizeCapExceeded, "too many unknowns");
}

void ModularSystem::add_equation(std::span<const Term> terms, std::uint64_t rhs) {
  if (rhs_.size() >= kMaxEquations) {
    fail(ErrorKind::SizeCapExceeded,
         "linear system exceeds " + std::to_string(kMaxEquations) + " equations");
  }
  const std::size_t start = terms_.size();
  for (const Term& t : terms) {
    if (t.column >= unknowns_) fail(ErrorKind::InvalidArgument, "column out of range");
    const std::uint64_t c = t.coefficient % modulus_;
    auto it = std::find_if(terms_.begin() + static_cast<std::ptrdiff_t>(start), terms_.end(),
                           [&](const Term& u) { return u.column == t.column; });
    if (it != terms_.end()) {
      it->coefficient = (it->coefficient + c) % modulus_;
    } else {
      terms_.push_back({t.column, c});
    }
  }
  terms_.erase(std::remove_if(terms_.begin() + static_cast<std::ptrdiff_t>(start), terms_.end(),
                              [](const Term& u) { return u.coefficient == 0; }),
               terms_.end());
  offsets_.push_back(terms_.size());
  rhs_.push_back(rhs % modulus_);
}

namespace {

using Solution = std::optional<std::vector<std::uint64_t>>;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid; a is assumed to be a unit mod m.
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  __int128 result = old_s % static_cast<__int128>(m);
  if (result < 0) result += static_cast<__int128>(m);
  return static_cast<std::uint64_t>(result);
}

// F_2: rows packed into 64-bit words, rhs stored at bit `cols`.
Solution solve_gf2(const ModularSystem& sys) {
  const std::size_t cols = sys.unknowns();
  const std::size_t words = (cols + 1 + 63) / 64;
  std::vector<std::uint64_t> basis;
  std::vector<std::int64_t> pivot_row(cols, -1);
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint64_t> r(words);

  auto bit = [](const std::uint64_t* row, std::size_t c) { return (row[c / 64] >> (c % 64)) & 1U; };

  for (std::size_t e = 0; e < sys.equations(); ++e) {
    std::fill(r.begin(), r.end(), 0);
    const auto terms = sys.row(e);
    for (const auto& t : terms) {
      if (t.coefficient & 1U) r[t.column / 64] ^= std::uint64_t{1} << (t.column % 64);
    }
    if (sys.rhs(e) & 1U) r[cols / 64] ^= std::uint64_t{1} << (cols % 64);

    for (const auto& t : terms) {
      const std::int64_t p = pivot_row[t.column];
      if (p >= 0 && bit(r.data(), t.column)) {
        const std::uint64_t* b = basis.data() + static_cast<std::size_t>(p) * words;
        for (std::size_t w = 0; w < words; ++w) r[w] ^= b[w];
      }
    }

    std::size_t lead = cols;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = r[w];
      if (w == cols / 64) word &= (std::uint64_t{1} << (cols % 64)) - 1;
      if (word != 0) {
        lead = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        break;
      }
    }
    if (lead >= cols) {
      if (bit(r.data(), cols)) return std::nullopt;
      continue;
    }

    const std::size_t rank = pivot_col.size();
    for (std::size_t i = 0; i < rank; ++i) {
      std::uint64_t* b = basis.data() + i * words;
      if (bit(b, lead)) {
        for (std::size_t w = 0; w < words; ++w) b[w] ^= r[w];
      }
    }
    basis.insert(basis.end(), r.begin(), r.end());
    pivot_row[lead] = static_cast<std::int64_t>(rank);
    pivot_col.push_back(lead);
  }

  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) {
    x[pivot_col[i]] = bit(basis.data() + i * words, cols);
  }
  return x;
}

// F_p, p odd: dense rows with the rhs in the last slot, pivots normalized to 1.
Solution solve_prime(const ModularSystem& sys, std::uint64_t p) {
  const std::size_t cols = sys.unknowns();
  const std::size_t width = cols + 1;
  std::vector<std::uint64_t> basis;
  std::vector<std::int64_t> pivot_row(cols, -1);
  std::vector<std::size_t> pivot_col;
  std::vector<std::uint64_t> r(width);

  for (std::size_t e = 0; e < sys.equations(); ++e) {
    std::fill(r.begin(), r.end(), 0);
    const auto terms = sys.row(e);
    for (const auto& t : terms) r[t.column] = (r[t.column] + t.coefficient % p) % p;
    r[cols] = sys.rhs(e) % p;

    for (const auto& t : terms) {
      const std::int64_t piv = pivot_row[t.column];
      const std::uint64_t f = r[t.column];
      if (piv < 0 || f == 0) continue;
      const std::uint64_t* b = basis.data() + static_cast<std::size_t>(piv) * width;
      const std::uint64_t neg = p - f;
      for (std::size_t c = 0; c < width; ++c) {
        if (b[c] != 0) r[c] = (r[c] + mul_mod(neg, b[c], p)) % p;
      }
    }

    std::size_t lead = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (r[c] != 0) {
        lead = c;
        break;
      }
    }
    if (lead == cols) {
      if (r[cols] != 0) return std::nullopt;
      continue;
    }
    const std::uint64_t inv = inverse_mod(r[lead], p);
    for (std::size_t c = lead; c < width; ++c) r[c] = mul_mod(r[c], inv, p);

    const std::size_t rank = pivot_col.size();
    for (std::size_t i = 0; i < rank; ++i) {
      std::uint64_t* b = basis.data() + i * width;
      const std::uint64_t f = b[lead];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t c = lead; c < width; ++c) {
        if (r[c] != 0) b[c] = (b[c] + mul_mod(neg, r[c], p)) % p;
      }
    }
    basis.insert(basis.end(), r.begin(), r.end());
    pivot_row[lead] = static_cast<std::int64_t>(rank);
    pivot_col.push_back(lead);
  }

  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = basis[i * width + cols];
  return x;
}

// Z/p^e, e ≥ 2. Full pivoting on minimal p-adic valuation keeps every entry
// of the remaining block divisible by the current pivot's p-power, which makes
// back substitution with free variables set to 0 exact.
Solution solve_prime_power(const ModularSystem& sys, std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  const std::size_t rows = sys.equations();
  const std::size_t cols = sys.unknowns();
  const std::size_t width = cols + 1;
  if (rows * width > kMaxDenseEntries) {
    fail(ErrorKind::SizeCapExceeded,
         "dense Z/" + std::to_string(q) + " elimination exceeds " +
             std::to_string(kMaxDenseEntries) + " entries");
  }
  std::vector<std::uint64_t> m(rows * width, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (const auto& t : sys.row(i)) m[i * width + t.column] = t.coefficient % q;
    m[i * width + cols] = sys.rhs(i) % q;
  }
  auto valuation = [p, e](std::uint64_t v) {
    unsigned k = 0;
    while (k < e && v % p == 0) {
      v /= p;
      ++k;
    }
    return k;
  };

  std::vector<std::size_t> col_order(cols);
  for (std::size_t c = 0; c < cols; ++c) col_order[c] = c;
  std::vector<unsigned> pivot_val;
  std::size_t step = 0;
  for (; step < std::min(rows, cols); ++step) {
    unsigned best = e;
    std::size_t best_row = 0, best_pos = 0;
    for (std::size_t i = step; i < rows && best > 0; ++i) {
      for (std::size_t pos = step; pos < cols; ++pos) {
        const std::uint64_t v = m[i * width + col_order[pos]];
        if (v == 0) continue;
        const unsigned k = valuation(v);
        if (k < best) {
          best = k;
          best_row = i;
          best_pos = pos;
          if (k == 0) break;
        }
      }
    }
    if (best == e) break;
    if (best_row != step) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(best_row * width),
                       m.begin() + static_cast<std::ptrdiff_t>((best_row + 1) * width),
                       m.begin() + static_cast<std::ptrdiff_t>(step * width));
    }
    std::swap(col_order[step], col_order[best_pos]);
    const std::size_t pc = col_order[step];
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < best; ++i) pk *= p;
    const std::uint64_t unit_inv = inverse_mod(m[step * width + pc] / pk, q);
    pivot_val.push_back(best);

    const std::uint64_t* prow = m.data() + step * width;
    for (std::size_t i = step + 1; i < rows; ++i) {
      std::uint64_t* row = m.data() + i * width;
      if (row[pc] == 0) continue;
      const std::uint64_t f = mul_mod(row[pc] / pk, unit_inv, q);
      const std::uint64_t neg = q - f;
      for (std::size_t c = 0; c < width; ++c) {
        if (prow[c] != 0) row[c] = (row[c] + mul_mod(neg, prow[c], q)) % q;
      }
    }
  }
  const std::size_t rank = step;
  for (std::size_t i = rank; i < rows; ++i) {
    if (m[i * width + cols] != 0) return std::nullopt;
  }

  std::vector<std::uint64_t> x(cols, 0);
  for (std::size_t s = rank; s-- > 0;) {
    const std::uint64_t* row = m.data() + s * width;
    const std::size_t pc = col_order[s];
    std::uint64_t rest = row[cols];
    for (std::size_t pos = s + 1; pos < cols; ++pos) {
      const std::size_t c = col_order[pos];
      if (row[c] != 0 && x[c] != 0) rest = (rest + q - mul_mod(row[c], x[c], q)) % q;
    }
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < pivot_val[s]; ++i) pk *= p;
    if (rest % pk != 0) return std::nullopt;
    const std::uint64_t unit = row[pc] / pk;
    x[pc] = mul_mod(rest / pk, inverse_mod(unit, q), q);
  }
  return x;
}

ModularSystem reduce_system(const ModularSystem& sys, std::uint64_t q) {
  ModularSystem out(sys.unknowns(), q);
  std::vector<ModularSystem::Term> terms;
  for (std::size_t i = 0; i < sys.equations(); ++i) {
    const auto row = sys.row(i);
    terms.assign(row.begin(), row.end());
    out.add_equation(terms, sys.rhs(i));
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> solve(const ModularSystem& system) {
  const std::uint64_t n = system.modulus();
  const Factored nf(n);
  std::vector<std::uint64_t> combined(system.unknowns(), 0);
  for (const PrimePower& pp : nf.factors()) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < pp.exponent; ++i) q *= pp.prime;
    const ModularSystem local = nf.factors().size() == 1 ? system : reduce_system(system, q);
    Solution part;
    if (pp.exponent == 1) {
      part = pp.prime == 2 ? solve_gf2(local) : solve_prime(local, pp.prime);
    } else {
      part = solve_prime_power(local, pp.prime, pp.exponent);
    }
    if (!part) return std::nullopt;
    // CRT: x ≡ part (mod q), x ≡ previous (mod n/q) accumulates as
    // Σ part_i · (n/q_i) · ((n/q_i)^{-1} mod q_i).
    const std::uint64_t cofactor = n / q;
    const std::uint64_t weight = mul_mod(cofactor, inverse_mod(cofactor % q, q), n);
    for (std::size_t c = 0; c < combined.size(); ++c) {
      combined[c] = (combined[c] + mul_mod((*part)[c], weight, n)) % n;
    }
  }
  return combined;
}

}  // namespace acs
