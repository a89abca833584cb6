// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Each check also has to finish inside its runtime budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "acs/cohomology.hpp"
#include "acs/cs_engine.hpp"
#include "acs/error.hpp"
#include "acs/group.hpp"
#include "acs/number_theory.hpp"
#include "oracles.hpp"

using namespace acs;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void expect(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

bool admissible(std::int64_t t, std::int64_t D) {
  return t > 1 && oracle::is_squarefree(static_cast<std::uint64_t>(t)) &&
         oracle::gcd(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(D)) == 1;
}

CsValue half_if(bool b) { return b ? CsValue::half() : CsValue::zero(); }

// 1. The two S4 preset values.
Outcome s4_values() {
  Outcome o;
  expect(o, preset_eval(parse_preset("s4-gl2f3-7537"), 2777) == CsValue::zero(), "7537 preset at t=2777");
  expect(o, preset_eval(parse_preset("s4-16t65-2777"), 7537) == CsValue::half(), "2777 preset at t=7537");
  expect(o, oracle::legendre(7537, 2777) == -1, "Euler oracle (7537/2777)");
  return o;
}

// 2. Klein Q8 tables against Euler-criterion transcriptions.
Outcome klein_tables() {
  Outcome o;
  const Preset k145 = parse_preset("klein-q8-145");
  const Preset k105 = parse_preset("klein-q8-105");
  std::size_t rows = 0;
  for (std::int64_t t = 2; t <= 5000; ++t) {
    if (admissible(t, 145)) {
      const int l5 = oracle::legendre(t, 5), l29 = oracle::legendre(t, 29);
      expect(o, preset_eval(k145, t, 1) == half_if(t % 5 == 2 || t % 5 == 3), "145 a1 t=" + std::to_string(t));
      expect(o, preset_eval(k145, t, 2) == half_if(l29 == -1), "145 a2 t=" + std::to_string(t));
      expect(o, preset_eval(k145, t, 3) == half_if(l5 == -l29), "145 a3 t=" + std::to_string(t));
      ++rows;
    }
    if (admissible(t, 105)) {
      const int l3 = oracle::legendre(t, 3), l5 = oracle::legendre(t, 5), l7 = oracle::legendre(t, 7);
      expect(o, preset_eval(k105, t, 1) == half_if(l5 == -1), "105 a1 t=" + std::to_string(t));
      expect(o, preset_eval(k105, t, 2) == half_if(l3 == -l7), "105 a2 t=" + std::to_string(t));
      expect(o, preset_eval(k105, t, 3) == half_if(l3 * l5 * l7 == -1), "105 a3 t=" + std::to_string(t));
      ++rows;
    }
  }
  if (o.ok) o.detail = std::to_string(rows) + " t values x 3 actions";
  return o;
}

// 3. Closed forms agree with the inert-count engine.
Outcome engine_equivalence() {
  Outcome o;
  std::vector<Preset> presets = {parse_preset("klein-q8-145"), parse_preset("klein-q8-105"),
                                 parse_preset("klein-d4-145"), parse_preset("s4-gl2f3-7537")};
  for (std::int64_t p : {5, 13, 17, 29}) presets.push_back(Preset::zn2(p));
  std::size_t checked = 0;
  for (const Preset& p : presets) {
    const ConsistencyReport r = consistency_check(p, 2, 5000);
    checked += r.checked;
    expect(o, r.mismatches.empty(), p.name() + " has " + std::to_string(r.mismatches.size()) + " mismatches");
  }
  if (o.ok) o.detail = std::to_string(checked) + " evaluations";
  return o;
}

std::int64_t random_squarefree(std::mt19937_64& rng, bool allow_negative) {
  while (true) {
    std::int64_t v = 2 + static_cast<std::int64_t>(rng() % 999);
    if (!oracle::is_squarefree(static_cast<std::uint64_t>(v))) continue;
    if (allow_negative && rng() % 2) v = -v;
    return v;
  }
}

// 4. Random valid biquadratic data always gives 0.
Outcome biquadratic_vanishing() {
  Outcome o;
  std::mt19937_64 rng(4);
  int made = 0;
  while (made < 1000) {
    BiquadFamilyInput in;
    in.D1 = random_squarefree(rng, true);
    in.D2 = random_squarefree(rng, true);
    in.t1 = random_squarefree(rng, false);
    in.t2 = random_squarefree(rng, false);
    const std::int64_t v[4] = {in.D1, in.D2, in.t1, in.t2};
    bool coprime = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        coprime = coprime && oracle::gcd(static_cast<std::uint64_t>(std::abs(v[i])),
                                         static_cast<std::uint64_t>(std::abs(v[j]))) == 1;
    if (!coprime) continue;
    // D1 D2 is squarefree, so its divisors > 1 are the nonempty prime subsets.
    const std::vector<std::uint64_t> primes =
        oracle::prime_divisors(static_cast<std::uint64_t>(std::abs(in.D1 * in.D2)));
    const std::uint64_t mask = 1 + rng() % ((1ULL << primes.size()) - 1);
    in.M = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) in.M *= static_cast<std::int64_t>(primes[i]);
    expect(o, cs_biquadratic(in) == CsValue::zero(), "nonzero biquadratic value");
    ++made;
  }
  if (o.ok) o.detail = "1000 instances";
  return o;
}

// 5. Id ∪ δ(Id) generates H³(Z/n, Z/n).
Outcome generator_order() {
  Outcome o;
  for (Residue n = 2; n <= 6; ++n) {
    expect(o, class_order(cyclic_generator(n)) == n, "class order for n=" + std::to_string(n));
  }
  const GroupPtr z2 = cyclic_group(2);
  const Cochain gen = cyclic_generator(2).rep();
  const std::vector<Residue> target(gen.values().begin(), gen.values().end());
  for (unsigned code = 0; code < 16; ++code) {
    const std::vector<Residue> b = {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1};
    expect(o, oracle::coboundary(*z2, b, 2, 2) != target, "generator is a coboundary");
  }
  return o;
}

// 6. Twisting by the semidirect-product section.
Outcome twist_verification() {
  Outcome o;
  const std::pair<const char*, SplitGroup> cases[] = {{"S3", symmetric3()},
                                                     {"D4", dihedral4()},
                                                     {"H3(Z/2)", heisenberg(3, 2)},
                                                     {"H3(Z/3)", heisenberg(3, 3)},
                                                     {"GL2(F3)", gl2(3)}};
  for (const auto& [name, s] : cases) {
    expect(o, twist_verify(s.section, s.projection), std::string("twist on ") + name);
  }
  expect(o, class_order(twist_class(gl2(3).projection)) == 2, "det twist class on GL2(F3) has order 2");
  expect(o, enumerate_split_pairs(quaternion_group(), 2).empty(), "Q8 has a section");
  return o;
}

struct AlgebraCase {
  const char* name;
  GroupPtr group;
  Residue n;
  Residue sub;     // proper divisor of n for push_coefficients
  unsigned max_k;  // largest degree with d(d(a)) in budget
};

// 7. Algebraic identities on randomized cochains for each family group.
Outcome algebra_suite() {
  Outcome o;
  std::mt19937_64 rng(7);
  const SplitGroup gl = gl2(3);
  const std::vector<AlgebraCase> cases = {
      {"Z/2", cyclic_group(2), 4, 2, 2},           {"Z/4", cyclic_group(4), 4, 2, 2},
      {"Z/6", cyclic_group(6), 6, 3, 2},           {"S3", symmetric3().group, 6, 2, 2},
      {"D4", dihedral4().group, 4, 2, 2},          {"Q8", quaternion_group(), 4, 2, 2},
      {"H3(Z/2)", heisenberg(3, 2).group, 4, 2, 2}, {"H3(Z/3)", heisenberg(3, 3).group, 9, 3, 2},
      {"GL2(F3)", gl.group, 4, 2, 1}};
  constexpr int kSamples = 100;
  for (const AlgebraCase& c : cases) {
    const std::string tag = std::string(" on ") + c.name;
    const std::vector<GroupHom> to_cyclic = homs_to_cyclic(c.group, c.n);
    const std::vector<GroupHom> from_cyclic = homs_from_cyclic(c.group, c.n);
    for (int i = 0; i < kSamples && o.ok; ++i) {
      const unsigned k = static_cast<unsigned>(i) % (c.max_k + 1);
      const Cochain a = oracle::random_cochain(c.group, k, c.n, rng);
      expect(o, coboundary(coboundary(a)).is_zero(), "d(d(a)) = 0" + tag);

      // Leibniz with a 1-cochain b: d(a ∪ b) = da ∪ b + (-1)^k a ∪ db.
      if (k + 1 <= c.max_k) {
        const Cochain b = oracle::random_cochain(c.group, 1, c.n, rng);
        Cochain rhs = cup(coboundary(a), b);
        const Cochain tail = cup(a, coboundary(b));
        if (k % 2 == 0) {
          rhs += tail;
        } else {
          rhs -= tail;
        }
        expect(o, coboundary(cup(a, b)) == rhs, "Leibniz" + tag);
      }

      // β of a random 1-cocycle: a homomorphism plus the coboundary of a 0-cochain.
      const GroupHom& f = to_cyclic[rng() % to_cyclic.size()];
      Cochain z(c.group, 1, c.n, {f.image().begin(), f.image().end()});
      z += coboundary(oracle::random_cochain(c.group, 0, c.n, rng));
      expect(o, is_cocycle(bockstein(z)), "Bockstein cocycle" + tag);

      // (h ∘ g)* = g* ∘ h* around Z/n → G → Z/n.
      const GroupHom& g = from_cyclic[rng() % from_cyclic.size()];
      const GroupPtr zn = g.source();
      const Cochain on_zn = oracle::random_cochain(zn, 1 + static_cast<unsigned>(rng() % 3), c.n, rng);
      expect(o, pullback(compose(f, g), on_zn) == pullback(g, pullback(f, on_zn)), "pullback Z/n->G->Z/n" + tag);
      expect(o, pullback(compose(g, f), a) == pullback(f, pullback(g, a)), "pullback G->Z/n->G" + tag);

      expect(o, push_coefficients(coboundary(a), c.sub) == coboundary(push_coefficients(a, c.sub)),
             "push commutes with d" + tag);
    }
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " groups x " + std::to_string(kSamples) + " samples";
  return o;
}

// 8. Kronecker against Euler, splitting type against explicit squares.
Outcome number_theory() {
  Outcome o;
  std::size_t primes = 0;
  for (std::int64_t p = 3; p < 10000; p += 2) {
    if (!oracle::is_prime(static_cast<std::uint64_t>(p))) continue;
    ++primes;
    for (std::int64_t a = 1; a < p && o.ok; ++a) {
      expect(o, kronecker(a, p) == oracle::legendre(a, p), "kronecker mismatch at p=" + std::to_string(p));
    }
  }
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 10000 && o.ok) {
    const std::int64_t m = static_cast<std::int64_t>(rng() % 20001) - 10000;
    if (m == 0 || m == 1 || !oracle::is_squarefree(static_cast<std::uint64_t>(std::abs(m)))) continue;
    const std::uint64_t p = 3 + 2 * (rng() % 2000);
    if (!oracle::is_prime(p)) continue;
    const auto pi = static_cast<std::int64_t>(p);
    SplitType expected = SplitType::Ramified;
    if (m % pi != 0) {
      bool square = false;
      for (std::int64_t x = 1; x < pi && !square; ++x) square = (x * x - m) % pi == 0;
      expected = square ? SplitType::Split : SplitType::Inert;
    }
    expect(o, splitting_type(p, m) == expected, "splitting of " + std::to_string(p) + " in m=" + std::to_string(m));
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(primes) + " primes, 10000 splitting samples";
  return o;
}

// 9. Density of the half value along t.
Outcome density() {
  Outcome o;
  const DensityResult k = density_scan(parse_preset("klein-q8-145"), 1, 100000);
  const DensityResult s = density_scan(parse_preset("s4-gl2f3-7537"), 1, 100000);
  expect(o, k.density >= 0.49 && k.density <= 0.51, "klein-q8-145 density " + std::to_string(k.density));
  expect(o, s.count_half == 0 && s.density == 0.0, "s4-gl2f3-7537 density nonzero");
  if (o.ok) o.detail = "klein-q8-145 " + std::to_string(k.density) + ", s4-gl2f3-7537 0";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "s4 preset values", 0.010, s4_values},
      {2, "klein criterion tables", 1.0, klein_tables},
      {3, "preset vs engine", 5.0, engine_equivalence},
      {4, "biquadratic vanishing", 1.0, biquadratic_vanishing},
      {5, "generator order", 30.0, generator_order},
      {6, "twist verification", 120.0, twist_verification},
      {7, "cohomology algebra", 10.0, algebra_suite},
      {8, "number theory oracle", 30.0, number_theory},
      {9, "density", 5.0, density},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.budget_seconds) {
      o = {false, "over budget (" + std::to_string(c.budget_seconds) + " s)"};
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %d %-22s %9.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds, o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
