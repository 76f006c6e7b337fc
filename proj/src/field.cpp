#include "designforge/field.hpp"

#include <algorithm>

#include "designforge/errors.hpp"

namespace designforge {

namespace {

using Poly = std::vector<std::uint32_t>;

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo m (m nonzero, normalized).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  normalize(a);
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    normalize(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  normalize(f);
  if (f.size() < 2) return false;
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  if (k <= 3) {
    // Reducible iff it has a linear factor.
    for (std::uint32_t x = 0; x < p; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
      if (v == 0) return false;
    }
    return true;
  }
  // gcd(f, x^(p^i) - x) == 1 for 1 <= i <= k/2.
  Poly xp = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t i = 1; i <= k / 2; ++i) {
    Poly acc{1};
    Poly base = xp;
    for (std::uint32_t e = p; e; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
}

Field Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InvalidField(std::to_string(p) + " is not prime");
  if (k == 0) throw InvalidField("extension degree must be at least 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    count *= p;
    if (count > (std::uint64_t{1} << 24)) throw InvalidField("field too large");
  }
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::uint32_t> f(k + 1, 0);
    std::uint64_t m = n;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(m % p);
      m /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return Field(p, k, std::move(f));
  }
  throw InternalInconsistency("no irreducible polynomial found");
}

FieldElem Field::zero() const { return FieldElem{std::vector<std::uint32_t>(k_, 0)}; }

FieldElem Field::one() const { return scalar(1); }

FieldElem Field::scalar(std::int64_t n) const {
  FieldElem a = zero();
  const auto pp = static_cast<std::int64_t>(p_);
  a.coeffs[0] = static_cast<std::uint32_t>(((n % pp) + pp) % pp);
  return a;
}

FieldElem Field::x() const {
  if (k_ == 1) return scalar(0);
  FieldElem a = zero();
  a.coeffs[1] = 1;
  return a;
}

FieldElem Field::element(std::uint32_t index) const {
  if (index >= q_) throw InvalidArgument("field element index out of range");
  FieldElem a = zero();
  for (std::uint32_t i = 0; i < k_; ++i) {
    a.coeffs[i] = index % p_;
    index /= p_;
  }
  return a;
}

std::uint32_t Field::index(const FieldElem& a) const {
  std::uint32_t idx = 0;
  for (std::uint32_t i = k_; i-- > 0;) idx = idx * p_ + a.coeffs[i];
  return idx;
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out.push_back(element(i));
  return out;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
  return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  for (std::uint32_t i = 0; i < k_; ++i) r.coeffs[i] = (a.coeffs[i] + p_ - b.coeffs[i]) % p_;
  return r;
}

FieldElem Field::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  if (k_ == 1)
    return FieldElem{{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coeffs[0]) * b.coeffs[0] % p_)}};
  Poly r = poly_mulmod(a.coeffs, b.coeffs, modulus_, p_);
  r.resize(k_, 0);
  return FieldElem{std::move(r)};
}

bool Field::is_zero(const FieldElem& a) const {
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElem Field::pow(const FieldElem& a, std::uint64_t e) const {
  FieldElem acc = one();
  FieldElem base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
  return pow(a, q_ - 2);
}

bool Field::is_square(const FieldElem& a) const {
  if (is_zero(a)) throw InvalidArgument("is_square is undefined for zero");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

FieldElem Field::frobenius(const FieldElem& a, std::uint32_t i) const {
  FieldElem r = a;
  for (std::uint32_t j = 0; j < i % k_; ++j) r = pow(r, p_);
  return r;
}

std::uint64_t Field::multiplicative_order(const FieldElem& a) const {
  if (is_zero(a)) throw InvalidArgument("zero has no multiplicative order");
  std::uint64_t ord = 1;
  FieldElem x = a;
  while (x != one()) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

FieldElem Field::primitive_element() const {
  for (std::uint32_t i = 1; i < q_; ++i) {
    FieldElem a = element(i);
    if (multiplicative_order(a) == q_ - 1) return a;
  }
  throw InternalInconsistency("multiplicative group is not cyclic");
}

bool Field::sqrt(const FieldElem& a, FieldElem& root) const {
  for (std::uint32_t i = 0; i < q_; ++i) {
    FieldElem b = element(i);
    if (mul(b, b) == a) {
      root = std::move(b);
      return true;
    }
  }
  return false;
}

}  // namespace designforge
