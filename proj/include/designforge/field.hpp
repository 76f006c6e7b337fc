#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace designforge {

/// Element of GF(p^k) in the polynomial basis: coeffs[i] multiplies x^i.
struct FieldElem {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// GF(p^k) = GF(p)[x]/(f), with f the least monic irreducible of degree k
/// when coefficient vectors (c_{k-1}, ..., c_0) are compared as base-p numbers.
class Field {
 public:
  /// Throws InvalidField if p is not prime or k == 0.
  static Field make(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Monic modulus, coefficients from x^0 to x^k.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  /// Image of an integer in the prime field.
  FieldElem scalar(std::int64_t n) const;
  /// The generator x of the polynomial basis (equals scalar(0) when k == 1).
  FieldElem x() const;

  /// Bijection [0, q) <-> elements: index = sum coeffs[i] * p^i.
  FieldElem element(std::uint32_t index) const;
  std::uint32_t index(const FieldElem& a) const;
  std::vector<FieldElem> elements() const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Throws DivisionByZero for a == 0.
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
  FieldElem pow(const FieldElem& a, std::uint64_t e) const;

  bool is_zero(const FieldElem& a) const;
  /// Euler criterion; throws InvalidArgument for zero. Every element is a
  /// square in characteristic 2.
  bool is_square(const FieldElem& a) const;
  /// a^(p^i).
  FieldElem frobenius(const FieldElem& a, std::uint32_t i) const;
  /// Least-index element of multiplicative order q - 1.
  FieldElem primitive_element() const;
  std::uint64_t multiplicative_order(const FieldElem& a) const;
  /// Some b with b*b == a, if one exists.
  bool sqrt(const FieldElem& a, FieldElem& root) const;

 private:
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
};

bool is_prime(std::uint64_t n);

/// Polynomial irreducibility over GF(p); coefficients from x^0 upwards, the
/// leading coefficient nonzero.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace designforge
