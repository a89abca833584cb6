#include "acs/cohomology.hpp"

#include <array>
#include <string>

#include "acs/error.hpp"
#include "acs/zn_solver.hpp"

namespace acs {

namespace {

constexpr unsigned kMaxDegree = 16;

// Walks every (m+1)-tuple of G in lexicographic order and reports, for each,
// the m+2 face indices into C^m. Face j carries the sign (-1)^j:
//   j = 0       drop g_1
//   1 ≤ j ≤ m   merge g_j g_{j+1}
//   j = m + 1   drop g_{m+1}
template <typename Visit>
void for_each_face_set(const FiniteGroup& g, unsigned m, Visit&& visit) {
  if (m + 1 > kMaxDegree) fail(ErrorKind::SizeCapExceeded, "cochain degree too large");
  const std::size_t n = g.order();
  const std::size_t tuples = cochain_size(n, m + 1);
  std::array<std::size_t, kMaxDegree + 1> pow{};
  pow[0] = 1;
  for (unsigned i = 1; i <= m + 1; ++i) pow[i] = pow[i - 1] * n;

  std::array<Element, kMaxDegree + 1> digits{};
  std::array<std::size_t, kMaxDegree + 2> faces{};
  std::array<std::size_t, kMaxDegree + 2> prefix{};  // prefix[i] = index of g_1..g_i
  for (std::size_t idx = 0; idx < tuples; ++idx) {
    prefix[0] = 0;
    for (unsigned i = 0; i <= m; ++i) prefix[i + 1] = prefix[i] * n + digits[i];
    faces[0] = idx % pow[m];
    for (unsigned j = 1; j <= m; ++j) {
      // Tuple positions j-1 and j merge; the suffix after them has m-j entries.
      const std::size_t suffix = idx % pow[m - j];
      const Element merged = g.mul(digits[j - 1], digits[j]);
      faces[j] = (prefix[j - 1] * n + merged) * pow[m - j] + suffix;
    }
    faces[m + 1] = idx / n;
    visit(idx, std::span<const std::size_t>(faces.data(), m + 2));

    for (unsigned pos = m + 1; pos-- > 0;) {
      if (++digits[pos] < n) break;
      digits[pos] = 0;
    }
  }
}

// Σ (-1)^j a[face_j] over the integers, with a read through its canonical
// lift to {0..n-1}.
std::int64_t integer_coboundary(std::span<const Residue> a, std::span<const std::size_t> faces) {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const auto v = static_cast<std::int64_t>(a[faces[j]]);
    sum += (j % 2 == 0) ? v : -v;
  }
  return sum;
}

std::uint64_t reduce(std::int64_t v, Residue n) {
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::uint64_t>(((v % nn) + nn) % nn);
}

void require_same_context(const Cochain& a, const Cochain& b) {
  if (!same_group(a.group(), b.group())) {
    fail(ErrorKind::MismatchedContext, "cochains live on different groups");
  }
  if (a.modulus() != b.modulus()) {
    fail(ErrorKind::MismatchedContext, "cochains have different moduli");
  }
}

}  // namespace

Cochain coboundary(const Cochain& a) {
  Cochain out(a.group_ptr(), a.degree() + 1, a.modulus());
  const auto values = a.values();
  for_each_face_set(a.group(), a.degree(), [&](std::size_t idx, std::span<const std::size_t> faces) {
    out.set(idx, reduce(integer_coboundary(values, faces), a.modulus()));
  });
  return out;
}

bool is_cocycle(const Cochain& z) {
  bool ok = true;
  const auto values = z.values();
  for_each_face_set(z.group(), z.degree(), [&](std::size_t, std::span<const std::size_t> faces) {
    if (ok && reduce(integer_coboundary(values, faces), z.modulus()) != 0) ok = false;
  });
  return ok;
}

Cochain cup(const Cochain& a, const Cochain& b) {
  require_same_context(a, b);
  Cochain out(a.group_ptr(), a.degree() + b.degree(), a.modulus());
  const std::size_t nb = b.size();
  const std::uint64_t n = a.modulus();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < nb; ++j) out.set(i * nb + j, ai * b[j] % n);
  }
  return out;
}

Cochain bockstein(const Cochain& z) {
  Cochain out(z.group_ptr(), z.degree() + 1, z.modulus());
  const auto n = static_cast<std::int64_t>(z.modulus());
  const auto values = z.values();
  for_each_face_set(z.group(), z.degree(), [&](std::size_t idx, std::span<const std::size_t> faces) {
    const std::int64_t lifted = integer_coboundary(values, faces);
    if (lifted % n != 0) {
      fail(ErrorKind::NotACocycle, "Bockstein needs a cocycle (dz != 0 mod n)");
    }
    out.set(idx, reduce(lifted / n, z.modulus()));
  });
  return out;
}

Cochain pullback(const GroupHom& f, const Cochain& a) {
  if (!same_group(*f.target(), a.group())) {
    fail(ErrorKind::MismatchedContext, "pullback: cochain is not on the homomorphism's target");
  }
  const std::size_t ns = f.source()->order();
  const std::size_t nt = f.target()->order();
  const unsigned k = a.degree();
  Cochain out(f.source(), k, a.modulus());
  std::array<Element, kMaxDegree> digits{};
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::size_t target_index = 0;
    for (unsigned i = 0; i < k; ++i) target_index = target_index * nt + f(digits[i]);
    out.set(idx, a[target_index]);
    for (unsigned pos = k; pos-- > 0;) {
      if (++digits[pos] < ns) break;
      digits[pos] = 0;
    }
  }
  return out;
}

Cochain push_coefficients(const Cochain& a, Residue m) {
  if (m < 2 || a.modulus() % m != 0) {
    fail(ErrorKind::NotADivisor,
         std::to_string(m) + " is not a divisor >= 2 of " + std::to_string(a.modulus()));
  }
  Cochain out(a.group_ptr(), a.degree(), m);
  for (std::size_t i = 0; i < a.size(); ++i) out.set(i, a[i]);
  return out;
}

CoboundaryResult is_coboundary(const Cochain& z) {
  if (z.size() > kMaxEquations) {
    fail(ErrorKind::SizeCapExceeded,
         "coboundary system has " + std::to_string(z.size()) + " equations (cap " +
             std::to_string(kMaxEquations) + ")");
  }

  if (!is_cocycle(z)) fail(ErrorKind::NotACocycle, "is_coboundary needs a cocycle");
  if (z.degree() == 0) return {z.is_zero(), std::nullopt};
  if (z.is_zero()) {
    return {true, Cochain(z.group_ptr(), z.degree() - 1, z.modulus())};
  }
  const unsigned m = z.degree() - 1;
  ModularSystem system(cochain_size(z.group().order(), m), z.modulus());
  std::vector<ModularSystem::Term> terms;
  for_each_face_set(z.group(), m, [&](std::size_t idx, std::span<const std::size_t> faces) {
    terms.clear();
    for (std::size_t j = 0; j < faces.size(); ++j) {
      terms.push_back({static_cast<std::uint32_t>(faces[j]),
                       j % 2 == 0 ? 1U : std::uint64_t{z.modulus()} - 1});
    }
    system.add_equation(terms, z[idx]);
  });

  auto solution = solve(system);
  if (!solution) return {false, std::nullopt};
  std::vector<Residue> values(solution->size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = static_cast<Residue>((*solution)[i]);
  return {true, Cochain(z.group_ptr(), m, z.modulus(), std::move(values))};
}

CohClass::CohClass(Cochain rep) : rep_(std::move(rep)) {
  if (!is_cocycle(rep_)) fail(ErrorKind::NotACocycle, "class representative is not a cocycle");
}

CohClass CohClass::cup_with_bockstein(const Cochain& a) {
  if (a.degree() != 1 || !is_cocycle(a)) {
    fail(ErrorKind::NotACocycle, "cup_with_bockstein needs a 1-cocycle");
  }
  return CohClass(cup(a, bockstein(a)), Trusted{});
}

std::uint64_t class_order(const CohClass& c) {
  const Residue n = c.rep().modulus();
  for (Residue k = 1; k < n; ++k) {
    if (n % k != 0) continue;
    if (is_coboundary(c.rep().scaled(k)).is_coboundary) return k;
  }
  return n;
}

CohClass cyclic_generator(Residue n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "cyclic_generator needs n >= 2");
  GroupPtr zn = cyclic_group(n);
  std::vector<Residue> identity(n);
  for (Residue i = 0; i < n; ++i) identity[i] = i;
  return CohClass::cup_with_bockstein(Cochain(zn, 1, n, std::move(identity)));
}

CohClass twist_class(const GroupHom& psi) {
  const FiniteGroup& target = *psi.target();
  if (!is_standard_cyclic(target) || target.order() < 2) {
    fail(ErrorKind::InvalidArgument, "twist_class needs psi : A -> Z/n with n >= 2");
  }
  const auto n = static_cast<Residue>(target.order());
  std::vector<Residue> values(psi.image().begin(), psi.image().end());
  return CohClass::cup_with_bockstein(Cochain(psi.source(), 1, n, std::move(values)));
}

bool twist_verify(const GroupHom& phi, const GroupHom& psi) {
  const FiniteGroup& cyclic = *phi.source();
  if (!is_standard_cyclic(cyclic) || !same_group(cyclic, *psi.target())) {
    fail(ErrorKind::NotASection, "phi must start and psi must end at the same Z/n");
  }
  if (!same_group(*phi.target(), *psi.source())) {
    fail(ErrorKind::NotASection, "phi's target differs from psi's source");
  }
  for (Element k = 0; k < cyclic.order(); ++k) {
    if (psi(phi(k)) != k) fail(ErrorKind::NotASection, "psi o phi is not the identity");
  }
  const auto n = static_cast<Residue>(cyclic.order());
  const CohClass c = twist_class(psi);
  const Cochain pulled = pullback(phi, c.rep());
  const CohClass generator = cyclic_generator(n);
  const Cochain difference = pulled - generator.rep();
  return is_coboundary(difference).is_coboundary;
}

}  // namespace acs
