#include <vector>

#include "doctest.h"
#include "designforge/errors.hpp"
#include "designforge/field.hpp"

using namespace designforge;

namespace {

// Schoolbook product mod the field's modulus, independent of Field::mul.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t d = prod.size(); d-- > k;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * f[i]) % p;
  }
  std::vector<std::uint32_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

std::vector<std::uint32_t> padded(const FieldElem& a, std::size_t k) {
  auto c = a.coeffs;
  c.resize(k, 0);
  return c;
}

}  // namespace

TEST_CASE("every field of size at most 81, exhaustively") {
  for (std::uint64_t q = 2; q <= 81; ++q) {
    std::uint32_t p = 0, k = 0;
    for (std::uint32_t c = 2; c <= q && !p; ++c) {
      if (!is_prime(c)) continue;
      std::uint64_t x = q;
      std::uint32_t e = 0;
      while (x % c == 0) x /= c, ++e;
      if (x == 1) p = c, k = e;
    }
    if (!p) continue;
    CAPTURE(q);
    const Field F = Field::make(p, k);
    REQUIRE(F.size() == q);
    CHECK(is_irreducible(F.modulus(), p));
    const auto E = F.elements();
    REQUIRE(E.size() == q);
    for (std::uint32_t i = 0; i < q; ++i) CHECK(F.index(E[i]) == i);

    std::vector<bool> is_sq(q, false);
    for (std::uint32_t i = 0; i < q; ++i) {
      const FieldElem& a = E[i];
      CHECK(F.add(a, F.neg(a)) == F.zero());
      CHECK(F.mul(a, F.one()) == a);
      CHECK(F.frobenius(a, k) == a);
      is_sq[F.index(F.mul(a, a))] = true;
      if (!F.is_zero(a)) {
        CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.pow(a, q - 1) == F.one());
      }
      for (std::uint32_t j = 0; j < q; ++j) {
        const FieldElem& b = E[j];
        CHECK(padded(F.mul(a, b), k) == poly_mulmod(padded(a, k), padded(b, k), F.modulus(), p));
        CHECK(F.sub(F.add(a, b), b) == a);
        CHECK(F.frobenius(F.mul(a, b), 1) == F.mul(F.frobenius(a, 1), F.frobenius(b, 1)));
        CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
      }
    }
    if (q <= 27) {
      for (const auto& a : E)
        for (const auto& b : E)
          for (const auto& c : E) {
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
          }
    }
    CHECK(F.multiplicative_order(F.primitive_element()) == q - 1);
    for (std::uint32_t i = 1; i < q; ++i) {
      CHECK(F.is_square(E[i]) == is_sq[i]);
      FieldElem r;
      CHECK(F.sqrt(E[i], r) == is_sq[i]);
      if (is_sq[i]) CHECK(F.mul(r, r) == E[i]);
    }
    CHECK_THROWS_AS(F.inv(F.zero()), DivisionByZero);
  }
}

TEST_CASE("bad field parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), InvalidField);
  CHECK_THROWS_AS(Field::make(3, 0), InvalidField);
}

TEST_CASE("irreducibility over small primes") {
  CHECK(is_irreducible({1, 1, 1}, 2));       // x^2+x+1
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2)); // (x+1)^2
  CHECK(is_irreducible({1, 0, 1}, 3));       // x^2+1 over GF(3)
  CHECK_FALSE(is_irreducible({1, 0, 1}, 5)); // 2^2 = -1 mod 5
}
