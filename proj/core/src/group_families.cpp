#include <array>
#include <string>
#include <vector>

#include "acs/error.hpp"
#include "acs/group.hpp"

namespace acs {

namespace {

// Coordinates of a Heisenberg matrix: top row vector a, right column b,
// corner c; all of length d-2 except c.
struct HeisenbergCoords {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  std::size_t c = 0;
};

class HeisenbergKernelCodec {
 public:
  // The kernel of ψ: matrices with a_{m-1} = 0, m = d - 2.
  HeisenbergKernelCodec(std::size_t m, std::size_t n) : m_(m), n_(n) {
    size_ = 1;
    for (std::size_t i = 0; i < 2 * m; ++i) size_ *= n;
  }

  std::size_t size() const { return size_; }

  HeisenbergCoords decode(std::size_t index) const {
    HeisenbergCoords h;
    h.a.assign(m_, 0);
    h.b.assign(m_, 0);
    h.c = index % n_;
    index /= n_;
    for (std::size_t i = 0; i < m_; ++i) {
      h.b[i] = index % n_;
      index /= n_;
    }
    for (std::size_t i = 0; i + 1 < m_; ++i) {
      h.a[i] = index % n_;
      index /= n_;
    }
    return h;
  }

  std::size_t encode(const HeisenbergCoords& h) const {
    std::size_t index = 0;
    for (std::size_t i = m_ - 1; i-- > 0;) index = index * n_ + h.a[i];
    for (std::size_t i = m_; i-- > 0;) index = index * n_ + h.b[i];
    return index * n_ + h.c;
  }

  HeisenbergCoords mul(const HeisenbergCoords& x, const HeisenbergCoords& y) const {
    HeisenbergCoords z;
    z.a.resize(m_);
    z.b.resize(m_);
    std::size_t dot = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      z.a[i] = (x.a[i] + y.a[i]) % n_;
      z.b[i] = (x.b[i] + y.b[i]) % n_;
      dot = (dot + x.a[i] * y.b[i]) % n_;
    }
    z.c = (x.c + y.c + dot) % n_;
    return z;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::size_t size_;
};

// F_q for the few q with |GL(2, F_q)| within the order cap.
class SmallField {
 public:
  explicit SmallField(std::size_t q) : q_(q) {
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    if (q == 4) {
      // F_2[x]/(x^2 + x + 1); code = c0 + 2*c1.
      for (std::size_t u = 0; u < 4; ++u) {
        for (std::size_t v = 0; v < 4; ++v) {
          add_[u * 4 + v] = u ^ v;
          const std::size_t u0 = u & 1U, u1 = u >> 1U, v0 = v & 1U, v1 = v >> 1U;
          // (u0 + u1 x)(v0 + v1 x) with x^2 = x + 1.
          const std::size_t hi = u1 & v1;
          const std::size_t c0 = (u0 & v0) ^ hi;
          const std::size_t c1 = (u0 & v1) ^ (u1 & v0) ^ hi;
          mul_[u * 4 + v] = c0 | (c1 << 1U);
        }
      }
      generator_ = 2;
    } else {
      for (std::size_t u = 0; u < q; ++u) {
        for (std::size_t v = 0; v < q; ++v) {
          add_[u * q + v] = (u + v) % q;
          mul_[u * q + v] = (u * v) % q;
        }
      }
      generator_ = 2;  // primitive mod 3 and mod 5
    }
    log_.assign(q, 0);
    std::size_t x = 1;
    for (std::size_t k = 0; k + 1 < q; ++k) {
      log_[x] = k;
      powers_.push_back(x);
      x = mul(x, generator_);
    }
  }

  std::size_t add(std::size_t u, std::size_t v) const { return add_[u * q_ + v]; }
  std::size_t mul(std::size_t u, std::size_t v) const { return mul_[u * q_ + v]; }
  std::size_t neg(std::size_t u) const {
    for (std::size_t v = 0; v < q_; ++v) {
      if (add(u, v) == 0) return v;
    }
    return 0;
  }
  std::size_t log(std::size_t u) const { return log_[u]; }
  std::size_t generator_power(std::size_t k) const { return powers_[k % (q_ - 1)]; }

 private:
  std::size_t q_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> log_;
  std::vector<std::size_t> powers_;
  std::size_t generator_ = 0;
};

bool is_prime_power(std::size_t q) {
  if (q < 2) return false;
  std::size_t p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

SplitGroup heisenberg(std::size_t d, std::size_t n) {
  if (d < 3) fail(ErrorKind::InvalidArgument, "Heisenberg group needs d >= 3");
  if (n < 2) fail(ErrorKind::InvalidArgument, "Heisenberg group needs n >= 2");
  std::size_t order = 1;
  for (std::size_t i = 0; i < 2 * d - 3; ++i) {
    order *= n;
    if (order > kMaxGroupOrder) {
      fail(ErrorKind::OrderCapExceeded,
           "H_" + std::to_string(d) + "(Z/" + std::to_string(n) +
               ") exceeds the group order cap");
    }
  }

  const std::size_t m = d - 2;
  HeisenbergKernelCodec codec(m, n);
  const std::size_t k = codec.size();
  std::vector<HeisenbergCoords> elems;
  elems.reserve(k);
  for (std::size_t i = 0; i < k; ++i) elems.push_back(codec.decode(i));

  std::vector<Element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = static_cast<Element>(codec.encode(codec.mul(elems[i], elems[j])));
    }
  }
  GroupPtr kernel = make_group(k, std::move(table));

  // Conjugation by (j e_{m-1}, 0, 0) sends (a, b, c) to (a, b, c + j b_{m-1}).
  SemidirectSpec spec{kernel, n, {}, {}};
  spec.action.assign(n, std::vector<Element>(k));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      HeisenbergCoords h = elems[i];
      h.c = (h.c + j * h.b[m - 1]) % n;
      spec.action[j][i] = static_cast<Element>(codec.encode(h));
    }
  }
  spec.name = "H_" + std::to_string(d) + "(Z/" + std::to_string(n) + ")";
  return semidirect_product(spec);
}

SplitGroup gl2(std::size_t q) {
  if (q < 3 || !is_prime_power(q)) {
    fail(ErrorKind::InvalidArgument, "GL(2, F_q) needs a prime power q >= 3");
  }
  const std::size_t order = (q * q - 1) * (q * q - q);
  if (order > kMaxGroupOrder) {
    fail(ErrorKind::OrderCapExceeded,
         "|GL(2, F_" + std::to_string(q) + ")| = " + std::to_string(order) +
             " exceeds the group order cap");
  }
  const SmallField f(q);
  using Matrix = std::array<std::size_t, 4>;  // a b / c d

  auto det = [&f](const Matrix& x) {
    return f.add(f.mul(x[0], x[3]), f.neg(f.mul(x[1], x[2])));
  };
  auto code = [q](const Matrix& x) { return ((x[0] * q + x[1]) * q + x[2]) * q + x[3]; };

  std::vector<Matrix> elems;
  std::vector<std::size_t> index_of(q * q * q * q, 0);
  for (std::size_t c = 0; c < q * q * q * q; ++c) {
    Matrix x{c / (q * q * q), (c / (q * q)) % q, (c / q) % q, c % q};
    if (det(x) == 0) continue;
    index_of[c] = elems.size();
    elems.push_back(x);
  }

  std::vector<Element> table(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    const Matrix& x = elems[i];
    for (std::size_t j = 0; j < order; ++j) {
      const Matrix& y = elems[j];
      Matrix z{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
               f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
               f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
               f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
      table[i * order + j] = static_cast<Element>(index_of[code(z)]);
    }
  }
  GroupPtr g = make_group(order, std::move(table), "GL2(F" + std::to_string(q) + ")");
  const std::size_t n = q - 1;
  GroupPtr zn = cyclic_group(n);

  std::vector<Element> section(n);
  for (std::size_t k = 0; k < n; ++k) {
    section[k] = static_cast<Element>(index_of[code({f.generator_power(k), 0, 0, 1})]);
  }
  std::vector<Element> projection(order);
  for (std::size_t i = 0; i < order; ++i) {
    projection[i] = static_cast<Element>(f.log(det(elems[i])));
  }
  return SplitGroup{g, GroupHom(zn, g, std::move(section)),
                    GroupHom(g, zn, std::move(projection))};
}

}  // namespace acs
