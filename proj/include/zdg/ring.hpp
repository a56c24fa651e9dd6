#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace zdg {

using Int = std::int64_t;

enum class RingKind { Zn, ZnGaussian };

std::string to_string(RingKind kind);
RingKind ring_kind_from_string(const std::string& s);

/// An element re + im*i of Z_n[i], always held in canonical form 0 <= re, im < n.
/// Elements of Z_n are represented with im == 0.
class GaussianResidue {
 public:
  GaussianResidue(Int re, Int im, Int modulus);

  Int re() const { return re_; }
  Int im() const { return im_; }
  Int modulus() const { return modulus_; }

  /// re^2 + im^2 reduced mod n.
  Int norm() const;
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  /// "a+bi" form, e.g. "2+0i".
  std::string to_string() const;

  auto operator<=>(const GaussianResidue&) const = default;

 private:
  Int re_;
  Int im_;
  Int modulus_;
};

GaussianResidue add(const GaussianResidue& x, const GaussianResidue& y);
GaussianResidue mul(const GaussianResidue& x, const GaussianResidue& y);
GaussianResidue negate(const GaussianResidue& x);

inline GaussianResidue operator+(const GaussianResidue& x, const GaussianResidue& y) { return add(x, y); }
inline GaussianResidue operator*(const GaussianResidue& x, const GaussianResidue& y) { return mul(x, y); }

/// Norm criterion: nonzero x is a zero divisor iff gcd(N(x) mod n, n) > 1.
bool is_zero_divisor(const GaussianResidue& x);
bool is_unit(const GaussianResidue& x);

struct PrimeClass {
  enum class Tag { Ramified, Inert, Split };
  Tag tag;
  // For Split: prime = a^2 + b^2 with a < b.
  Int a = 0;
  Int b = 0;

  bool operator==(const PrimeClass&) const = default;
};

std::string to_string(PrimeClass::Tag tag);

struct PrimePower {
  Int prime;
  int exponent;

  Int value() const;
  bool operator==(const PrimePower&) const = default;
};

struct RingSpec {
  Int n = 1;
  RingKind kind = RingKind::ZnGaussian;
  std::vector<PrimePower> factors;
  std::vector<PrimeClass> classes;

  /// Number of ring elements: n for Z_n, n^2 for Z_n[i].
  Int cardinality() const;
  std::string name() const;
};

std::vector<PrimePower> factorize(Int n);
PrimeClass classify_prime(Int prime);
bool is_prime(Int n);

RingSpec make_ring(Int n, RingKind kind);

/// Label of an element inside a ring of the given kind ("a" for Z_n, "a+bi" for Z_n[i]).
std::string element_label(const GaussianResidue& x, RingKind kind);

/// All ring elements in lexicographic (re, im) order.
std::vector<GaussianResidue> ring_elements(const RingSpec& ring);

/// Nonzero zero divisors in lexicographic (re, im) order.
std::vector<GaussianResidue> zero_divisor_set(const RingSpec& ring);

/// Componentwise reduction modulo each prime-power factor.
std::vector<GaussianResidue> crt_decompose(const GaussianResidue& x, const RingSpec& ring);
GaussianResidue crt_recombine(const std::vector<GaussianResidue>& parts, const RingSpec& ring);

Int gcd(Int a, Int b);
Int mod_inverse(Int a, Int m);

}  // namespace zdg
