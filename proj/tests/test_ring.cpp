#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "zdg/finite_ring.hpp"
#include "zdg/ring.hpp"

using namespace zdg;

namespace {

Int power(Int b, int e) {
  Int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::size_t zd_count(Int n) { return zero_divisor_set(make_ring(n, RingKind::ZnGaussian)).size(); }

}  // namespace

TEST_CASE("norm criterion agrees with brute force for n <= 30") {
  for (Int n = 1; n <= 30; ++n) {
    for (RingKind kind : {RingKind::Zn, RingKind::ZnGaussian}) {
      const RingSpec ring = make_ring(n, kind);
      for (const auto& x : ring_elements(ring)) {
        const bool zd = oracle::zero_divisor(x, kind);
        CHECK_MESSAGE(is_zero_divisor(x) == zd, ring.name() << " " << x.to_string());
        CHECK(is_unit(x) == oracle::unit(x, kind));
        if (!x.is_zero() && n > 1) CHECK(is_unit(x) != zd);
      }
    }
  }
}

TEST_CASE("zero divisor set is exactly the brute-force set, in lexicographic order") {
  for (Int n : {6, 9, 10, 12, 25}) {
    const RingSpec ring = make_ring(n, RingKind::ZnGaussian);
    std::vector<GaussianResidue> expect;
    for (const auto& x : ring_elements(ring))
      if (oracle::zero_divisor(x, ring.kind)) expect.push_back(x);
    CHECK(zero_divisor_set(ring) == expect);
  }
}

TEST_CASE("zero divisor counts for the prime power families") {
  for (int m : {1, 2, 3}) CHECK(zd_count(power(2, m)) == static_cast<std::size_t>(power(2, 2 * m - 1) - 1));
  for (auto [p, m] : {std::pair{5, 1}, {13, 1}, {5, 2}})
    CHECK(zd_count(power(p, m)) == static_cast<std::size_t>(2 * power(p, 2 * m - 1) - power(p, 2 * m - 2) - 1));
  for (auto [q, m] : {std::pair{3, 2}, {7, 2}, {3, 3}})
    CHECK(zd_count(power(q, m)) == static_cast<std::size_t>(power(q, 2 * m - 2) - 1));
}

TEST_CASE("fields and the zero ring have no zero divisors") {
  CHECK(zd_count(1) == 0);
  CHECK(zd_count(3) == 0);
  CHECK(zd_count(7) == 0);
  CHECK(zero_divisor_set(make_ring(13, RingKind::Zn)).empty());
}

TEST_CASE("prime classification") {
  CHECK(classify_prime(2).tag == PrimeClass::Tag::Ramified);
  CHECK(classify_prime(3).tag == PrimeClass::Tag::Inert);
  CHECK(classify_prime(7).tag == PrimeClass::Tag::Inert);
  CHECK(classify_prime(5) == PrimeClass{PrimeClass::Tag::Split, 1, 2});
  CHECK(classify_prime(13) == PrimeClass{PrimeClass::Tag::Split, 2, 3});
  for (Int p = 5; p < 200; ++p) {
    if (!is_prime(p) || p % 4 != 1) continue;
    const auto c = classify_prime(p);
    CHECK(c.a < c.b);
    CHECK(c.a * c.a + c.b * c.b == p);
  }
}

TEST_CASE("trial division factorization") {
  CHECK(factorize(360) == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(1).empty());
  for (Int n = 2; n < 2000; ++n) {
    Int prod = 1;
    for (const auto& f : factorize(n)) {
      CHECK(is_prime(f.prime));
      prod *= f.value();
    }
    CHECK(prod == n);
  }
}

TEST_CASE("CRT decomposition is a bijection") {
  for (Int n : {6, 12, 15, 20}) {
    for (RingKind kind : {RingKind::Zn, RingKind::ZnGaussian}) {
      const RingSpec ring = make_ring(n, kind);
      std::set<std::vector<std::pair<Int, Int>>> images;
      for (const auto& x : ring_elements(ring)) {
        const auto parts = crt_decompose(x, ring);
        CHECK(crt_recombine(parts, ring) == x);
        std::vector<std::pair<Int, Int>> key;
        for (const auto& p : parts) key.emplace_back(p.re(), p.im());
        images.insert(key);
      }
      CHECK(images.size() == ring_elements(ring).size());
    }
  }
}

TEST_CASE("arithmetic stays canonical") {
  const GaussianResidue x(3, 4, 5), y(2, 1, 5);
  CHECK((x * y) == GaussianResidue(2, 1, 5));  // (3+4i)(2+i) = 2+11i
  CHECK((x + y) == GaussianResidue(0, 0, 5));
  CHECK(GaussianResidue(-1, -7, 5) == GaussianResidue(4, 3, 5));
  CHECK(x.norm() == 0);
  CHECK(element_label(GaussianResidue(2, 0, 4), RingKind::ZnGaussian) == "2+0i");
  CHECK(element_label(GaussianResidue(2, 0, 4), RingKind::Zn) == "2");
}

TEST_CASE("table rings agree with residue arithmetic") {
  const RingSpec ring = make_ring(6, RingKind::ZnGaussian);
  const FiniteRing t = table_ring(ring);
  const auto els = ring_elements(ring);
  REQUIRE(t.order() == els.size());
  for (std::size_t a = 0; a < els.size(); ++a)
    for (std::size_t b = 0; b < els.size(); ++b) CHECK(els[t.mul(a, b)] == els[a] * els[b]);
  CHECK(t.zero_divisors().size() == zero_divisor_set(ring).size());
}

TEST_CASE("galois fields are integral domains of the right order") {
  for (auto [p, k] : {std::pair{2, 2}, {3, 1}, {2, 3}, {3, 2}, {5, 1}}) {
    const FiniteRing f = galois_field(p, k);
    CHECK(f.order() == static_cast<std::size_t>(power(p, k)));
    CHECK(f.is_integral_domain());
    for (std::size_t x = 1; x < f.order(); ++x) {
      bool inverse = false;
      for (std::size_t y = 1; y < f.order(); ++y) inverse = inverse || f.mul(x, y) == 1;
      CHECK(inverse);
    }
  }
  CHECK_FALSE(table_ring(make_ring(4, RingKind::Zn)).is_integral_domain());
}
