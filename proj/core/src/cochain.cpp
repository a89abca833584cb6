#include "acs/cochain.hpp"

#include <algorithm>
#include <string>

#include "acs/error.hpp"

namespace acs {

std::size_t cochain_size(std::size_t group_order, unsigned degree) {
  std::size_t size = 1;
  for (unsigned i = 0; i < degree; ++i) {
    size *= group_order;
    if (size > kMaxCochainSize) {
      fail(ErrorKind::SizeCapExceeded,
           "cochain of degree " + std::to_string(degree) + " on a group of order " +
               std::to_string(group_order) + " is too large");
    }
  }
  return size;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) noexcept {
  return &a == &b || a == b;
}

Cochain::Cochain(GroupPtr group, unsigned degree, Residue modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (!group_) fail(ErrorKind::InvalidArgument, "cochain needs a group");
  if (modulus_ < 2) fail(ErrorKind::InvalidArgument, "cochain modulus must be >= 2");
  values_.assign(cochain_size(group_->order(), degree_), 0);
}

Cochain::Cochain(GroupPtr group, unsigned degree, Residue modulus, std::vector<Residue> values)
    : Cochain(std::move(group), degree, modulus) {
  if (values.size() != values_.size()) {
    fail(ErrorKind::InvalidArgument,
         "expected " + std::to_string(values_.size()) + " cochain values, got " +
             std::to_string(values.size()));
  }
  for (Residue v : values) {
    if (v >= modulus_) fail(ErrorKind::InvalidArgument, "cochain value not reduced mod n");
  }
  values_ = std::move(values);
}

Residue Cochain::at(std::span<const Element> args) const {
  if (args.size() != degree_) fail(ErrorKind::InvalidArgument, "wrong number of arguments");
  std::size_t index = 0;
  for (Element g : args) {
    if (g >= group_->order()) fail(ErrorKind::InvalidArgument, "argument out of range");
    index = index * group_->order() + g;
  }
  return values_[index];
}

bool Cochain::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Residue v) { return v == 0; });
}

void Cochain::require_compatible(const Cochain& other) const {
  if (!same_group(*group_, *other.group_) || degree_ != other.degree_ ||
      modulus_ != other.modulus_) {
    fail(ErrorKind::MismatchedContext, "cochains differ in group, degree or modulus");
  }
}

Cochain& Cochain::operator+=(const Cochain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = static_cast<Residue>((std::uint64_t{values_[i]} + other.values_[i]) % modulus_);
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  require_compatible(other);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = static_cast<Residue>(
        (std::uint64_t{values_[i]} + modulus_ - other.values_[i]) % modulus_);
  }
  return *this;
}

Cochain Cochain::scaled(std::uint64_t k) const {
  Cochain out = *this;
  const std::uint64_t kk = k % modulus_;
  for (Residue& v : out.values_) v = static_cast<Residue>(v * kk % modulus_);
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) noexcept {
  return a.degree_ == b.degree_ && a.modulus_ == b.modulus_ &&
         same_group(*a.group_, *b.group_) && a.values_ == b.values_;
}

}  // namespace acs
