#include "acs/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "acs/error.hpp"

namespace acs {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::MismatchedContext: return "MismatchedContext";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::NotASection: return "NotASection";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::InvalidFamily: return "InvalidFamily";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

GroupPtr FiniteGroup::make(std::size_t order, std::vector<Element> table,
                           std::string name) {
  if (order == 0) fail(ErrorKind::NotAGroup, "group order must be positive");
  if (order > kMaxGroupOrder) {
    fail(ErrorKind::OrderCapExceeded,
         "group order " + std::to_string(order) + " exceeds cap " +
             std::to_string(kMaxGroupOrder));
  }
  if (table.size() != order * order) {
    fail(ErrorKind::NotAGroup, "multiplication table must have order^2 entries");
  }
  for (Element e : table) {
    if (e >= order) fail(ErrorKind::NotAGroup, "table entry out of range");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->table_ = std::move(table);
  g->name_ = std::move(name);

  bool found = false;
  for (Element e = 0; e < order && !found; ++e) {
    bool two_sided = true;
    for (Element a = 0; a < order && two_sided; ++a) {
      two_sided = g->mul(e, a) == a && g->mul(a, e) == a;
    }
    if (two_sided) {
      g->identity_ = e;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::NotAGroup, "no two-sided identity");

  g->inverse_.assign(order, 0);
  for (Element a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < order; ++b) {
      if (g->mul(a, b) == g->identity_ && g->mul(b, a) == g->identity_) {
        g->inverse_[a] = b;
        has_inverse = true;
        break;
      }
    }
    if (!has_inverse) {
      fail(ErrorKind::NotAGroup,
           "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  const Element* t = g->table_.data();
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const Element* row_ab = t + static_cast<std::size_t>(t[a * order + b]) * order;
      const Element* row_b = t + b * order;
      const Element* row_a = t + a * order;
      for (std::size_t c = 0; c < order; ++c) {
        if (row_ab[c] != row_a[row_b[c]]) {
          fail(ErrorKind::NotAGroup, "multiplication is not associative");
        }
      }
    }
  }
  return g;
}

Element FiniteGroup::pow(Element a, std::size_t k) const noexcept {
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const noexcept {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const noexcept {
  std::size_t e = 1;
  for (Element a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::size_t FiniteGroup::center_size() const noexcept {
  std::size_t count = 0;
  for (Element a = 0; a < order_; ++a) {
    bool central = true;
    for (Element b = 0; b < order_ && central; ++b) {
      central = mul(a, b) == mul(b, a);
    }
    if (central) ++count;
  }
  return count;
}

std::size_t FiniteGroup::count_elements_of_order_at_most(
    std::size_t k) const noexcept {
  std::size_t count = 0;
  for (Element a = 0; a < order_; ++a) {
    if (element_order(a) <= k) ++count;
  }
  return count;
}

GroupPtr make_group(std::size_t order, std::vector<Element> table,
                    std::string name) {
  return FiniteGroup::make(order, std::move(table), std::move(name));
}

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cyclic group order must be >= 1");
  if (n > kMaxGroupOrder) {
    fail(ErrorKind::OrderCapExceeded,
         "Z/" + std::to_string(n) + " exceeds group order cap");
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<Element>((i + j) % n);
    }
  }
  return FiniteGroup::make(n, std::move(table), "Z/" + std::to_string(n));
}

bool is_standard_cyclic(const FiniteGroup& g) noexcept {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g.mul(static_cast<Element>(i), static_cast<Element>(j)) != (i + j) % n) {
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (!source_ || !target_) fail(ErrorKind::InvalidArgument, "null group");
  if (image_.size() != source_->order()) {
    fail(ErrorKind::NotAHomomorphism, "image array length differs from source order");
  }
  for (Element e : image_) {
    if (e >= target_->order()) fail(ErrorKind::NotAHomomorphism, "image out of range");
  }
  if (image_[source_->identity()] != target_->identity()) {
    fail(ErrorKind::NotAHomomorphism, "identity is not preserved");
  }
  const auto n = static_cast<Element>(source_->order());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (image_[source_->mul(a, b)] != target_->mul(image_[a], image_[b])) {
        fail(ErrorKind::NotAHomomorphism, "map is not multiplicative");
      }
    }
  }
}

GroupHom GroupHom::identity(GroupPtr g) {
  std::vector<Element> image(g->order());
  std::iota(image.begin(), image.end(), Element{0});
  return GroupHom(g, g, std::move(image));
}

bool operator==(const GroupHom& a, const GroupHom& b) noexcept {
  return *a.source_ == *b.source_ && *a.target_ == *b.target_ && a.image_ == b.image_;
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!(*inner.target() == *outer.source())) {
    fail(ErrorKind::MismatchedContext, "cannot compose: target/source mismatch");
  }
  std::vector<Element> image(inner.source()->order());
  for (Element a = 0; a < image.size(); ++a) image[a] = outer(inner(a));
  return GroupHom(inner.source(), outer.target(), std::move(image));
}

// ---------------------------------------------------------------------------
// Semidirect products

SplitGroup semidirect_product(const SemidirectSpec& spec) {
  if (!spec.base) fail(ErrorKind::InvalidArgument, "semidirect product needs a base group");
  const FiniteGroup& g = *spec.base;
  const std::size_t m = g.order();
  const std::size_t n = spec.n;
  if (n == 0) fail(ErrorKind::InvalidAction, "n must be positive");
  if (m * n > kMaxGroupOrder) {
    fail(ErrorKind::OrderCapExceeded,
         "semidirect product of order " + std::to_string(m * n) + " exceeds cap");
  }
  if (spec.action.size() != n) {
    fail(ErrorKind::InvalidAction, "action must list one automorphism per residue");
  }
  for (const auto& aut : spec.action) {
    if (aut.size() != m) fail(ErrorKind::InvalidAction, "automorphism table has wrong size");
    std::vector<bool> seen(m, false);
    for (Element x : aut) {
      if (x >= m || seen[x]) fail(ErrorKind::InvalidAction, "action entry is not a permutation");
      seen[x] = true;
    }
    for (Element a = 0; a < m; ++a) {
      for (Element b = 0; b < m; ++b) {
        if (aut[g.mul(a, b)] != g.mul(aut[a], aut[b])) {
          fail(ErrorKind::InvalidAction, "action entry is not an automorphism");
        }
      }
    }
  }
  for (Element a = 0; a < m; ++a) {
    if (spec.action[0][a] != a) fail(ErrorKind::InvalidAction, "action[0] is not the identity");
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& composed = spec.action[(j + k) % n];
      for (Element a = 0; a < m; ++a) {
        if (spec.action[j][spec.action[k][a]] != composed[a]) {
          fail(ErrorKind::InvalidAction, "action is not a homomorphism Z/n -> Aut(G)");
        }
      }
    }
  }

  const std::size_t order = m * n;
  std::vector<Element> table(order * order);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t gi = 0; gi < m; ++gi) {
      const std::size_t left = j * m + gi;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t hi = 0; hi < m; ++hi) {
          const Element twisted = spec.action[j][hi];
          const Element prod = g.mul(static_cast<Element>(gi), twisted);
          table[left * order + k * m + hi] =
              static_cast<Element>(((j + k) % n) * m + prod);
        }
      }
    }
  }
  std::string name = !spec.name.empty() ? spec.name : "(" + (g.name().empty() ? std::string("G") : g.name()) +
                     " x| Z/" + std::to_string(n) + ")";
  GroupPtr a = make_group(order, std::move(table), std::move(name));
  GroupPtr zn = cyclic_group(n);

  std::vector<Element> section(n);
  for (std::size_t k = 0; k < n; ++k) section[k] = static_cast<Element>(k * m + g.identity());
  std::vector<Element> projection(order);
  for (std::size_t x = 0; x < order; ++x) projection[x] = static_cast<Element>(x / m);

  return SplitGroup{a, GroupHom(zn, a, std::move(section)),
                    GroupHom(a, zn, std::move(projection))};
}

namespace {

std::vector<std::vector<Element>> inversion_action(const FiniteGroup& g, std::size_t n) {
  std::vector<std::vector<Element>> action(n, std::vector<Element>(g.order()));
  for (std::size_t k = 0; k < n; ++k) {
    for (Element a = 0; a < g.order(); ++a) action[k][a] = (k % 2 == 0) ? a : g.inv(a);
  }
  return action;
}

}  // namespace

SplitGroup symmetric3() {
  GroupPtr z3 = cyclic_group(3);
  return semidirect_product({z3, 2, inversion_action(*z3, 2), "S3"});
}

SplitGroup dihedral4() {
  GroupPtr z4 = cyclic_group(4);
  return semidirect_product({z4, 2, inversion_action(*z4, 2), "D4"});
}

GroupPtr quaternion_group() {
  // Unit quaternions ±1, ±i, ±j, ±k encoded as 2*basis + sign.
  // basis: 0 = 1, 1 = i, 2 = j, 3 = k; sign bit 1 means negative.
  static constexpr int kBasisProduct[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<Element> table(64);
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      const int bx = static_cast<int>(x / 2), by = static_cast<int>(y / 2);
      const int sign = static_cast<int>(x % 2) ^ static_cast<int>(y % 2) ^ kSign[bx][by];
      table[x * 8 + y] = static_cast<Element>(2 * kBasisProduct[bx][by] + sign);
    }
  }
  return make_group(8, std::move(table), "Q8");
}

// ---------------------------------------------------------------------------
// Homomorphisms to and from cyclic groups

std::vector<GroupHom> homs_from_cyclic(const GroupPtr& a, std::size_t n) {
  GroupPtr zn = cyclic_group(n);
  std::vector<GroupHom> result;
  for (Element x = 0; x < a->order(); ++x) {
    if (a->pow(x, n) != a->identity()) continue;
    std::vector<Element> image(n);
    for (std::size_t k = 0; k < n; ++k) image[k] = a->pow(x, k);
    result.emplace_back(zn, a, std::move(image));
  }
  return result;
}

namespace {

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<bool> in_subgroup(g.order(), false);
  in_subgroup[g.identity()] = true;
  for (Element x = 0; x < g.order(); ++x) {
    if (in_subgroup[x]) continue;
    gens.push_back(x);
    // Recompute closure from scratch; generating sets are tiny.
    std::fill(in_subgroup.begin(), in_subgroup.end(), false);
    std::vector<Element> frontier{g.identity()};
    in_subgroup[g.identity()] = true;
    while (!frontier.empty()) {
      Element y = frontier.back();
      frontier.pop_back();
      for (Element s : gens) {
        Element z = g.mul(y, s);
        if (!in_subgroup[z]) {
          in_subgroup[z] = true;
          frontier.push_back(z);
        }
      }
    }
  }
  return gens;
}

// Extends generator images along the right Cayley graph; returns false on
// any inconsistency.
bool extend_to_hom(const FiniteGroup& g, std::span<const Element> gens,
                   std::span<const std::size_t> gen_images, std::size_t n,
                   std::vector<Element>& image) {
  constexpr Element kUnset = static_cast<Element>(-1);
  image.assign(g.order(), kUnset);
  image[g.identity()] = 0;
  std::vector<Element> frontier{g.identity()};
  while (!frontier.empty()) {
    Element y = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element z = g.mul(y, gens[i]);
      auto value = static_cast<Element>((image[y] + gen_images[i]) % n);
      if (image[z] == kUnset) {
        image[z] = value;
        frontier.push_back(z);
      } else if (image[z] != value) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<GroupHom> homs_to_cyclic(const GroupPtr& a, std::size_t n) {
  GroupPtr zn = cyclic_group(n);
  const std::vector<Element> gens = generating_set(*a);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::size_t ord = a->element_order(gens[i]);
    for (std::size_t v = 0; v < n; ++v) {
      if ((ord * v) % n == 0) candidates[i].push_back(v);
    }
  }

  std::vector<GroupHom> result;
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<std::size_t> images(gens.size());
  std::vector<Element> image;
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][choice[i]];
    if (extend_to_hom(*a, gens, images, n, image)) {
      result.emplace_back(a, zn, image);
    }
    std::size_t i = 0;
    while (i < gens.size() && ++choice[i] == candidates[i].size()) {
      choice[i] = 0;
      ++i;
    }
    if (i == gens.size()) break;
  }
  return result;
}

std::vector<SplitPair> enumerate_split_pairs(const GroupPtr& a, std::size_t n) {
  if (a->order() > kMaxSplitEnumerationOrder) {
    fail(ErrorKind::OrderCapExceeded,
         "split-pair enumeration is limited to groups of order <= " +
             std::to_string(kMaxSplitEnumerationOrder));
  }
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  const std::vector<GroupHom> sections = homs_from_cyclic(a, n);
  const std::vector<GroupHom> projections = homs_to_cyclic(a, n);
  std::vector<SplitPair> pairs;
  for (const GroupHom& psi : projections) {
    for (const GroupHom& phi : sections) {
      // ψ∘φ is determined by the image of 1.
      if (n == 1 || psi(phi(1)) == 1) pairs.push_back({phi, psi});
    }
  }
  return pairs;
}

}  // namespace acs
