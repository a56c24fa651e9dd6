#include "zdg/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace zdg {

namespace {

Int reduce(Int x, Int n) {
  Int r = x % n;
  return r < 0 ? r + n : r;
}

void require_same_modulus(const GaussianResidue& x, const GaussianResidue& y) {
  if (x.modulus() != y.modulus()) {
    throw std::invalid_argument("modulus mismatch: " + std::to_string(x.modulus()) + " vs " +
                                std::to_string(y.modulus()));
  }
}

}  // namespace

std::string to_string(RingKind kind) { return kind == RingKind::Zn ? "zn" : "zni"; }

RingKind ring_kind_from_string(const std::string& s) {
  if (s == "zn") return RingKind::Zn;
  if (s == "zni") return RingKind::ZnGaussian;
  throw std::invalid_argument("unknown ring kind '" + s + "' (expected zn or zni)");
}

GaussianResidue::GaussianResidue(Int re, Int im, Int modulus) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  re_ = reduce(re, modulus);
  im_ = reduce(im, modulus);
}

Int GaussianResidue::norm() const { return (re_ * re_ + im_ * im_) % modulus_; }

std::string GaussianResidue::to_string() const {
  return std::to_string(re_) + "+" + std::to_string(im_) + "i";
}

GaussianResidue add(const GaussianResidue& x, const GaussianResidue& y) {
  require_same_modulus(x, y);
  return {x.re() + y.re(), x.im() + y.im(), x.modulus()};
}

GaussianResidue mul(const GaussianResidue& x, const GaussianResidue& y) {
  require_same_modulus(x, y);
  const Int n = x.modulus();
  return {reduce(x.re() * y.re() - x.im() * y.im(), n), reduce(x.re() * y.im() + x.im() * y.re(), n),
          n};
}

GaussianResidue negate(const GaussianResidue& x) { return {-x.re(), -x.im(), x.modulus()}; }

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int mod_inverse(Int a, Int m) {
  Int old_r = reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
  return reduce(old_s, m);
}

bool is_zero_divisor(const GaussianResidue& x) {
  if (x.is_zero()) return false;
  if (x.modulus() == 1) return false;
  return gcd(x.norm(), x.modulus()) > 1;
}

bool is_unit(const GaussianResidue& x) {
  if (x.modulus() == 1) return true;
  return gcd(x.norm(), x.modulus()) == 1;
}

std::string to_string(PrimeClass::Tag tag) {
  switch (tag) {
    case PrimeClass::Tag::Ramified: return "ramified";
    case PrimeClass::Tag::Inert: return "inert";
    case PrimeClass::Tag::Split: return "split";
  }
  return "?";
}

Int PrimePower::value() const {
  Int v = 1;
  for (int k = 0; k < exponent; ++k) v *= prime;
  return v;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<PrimePower> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  for (Int d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.push_back({d, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

PrimeClass classify_prime(Int prime) {
  if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  if (prime == 2) return {PrimeClass::Tag::Ramified};
  if (prime % 4 == 3) return {PrimeClass::Tag::Inert};
  for (Int a = 1; a * a <= prime; ++a) {
    const Int rest = prime - a * a;
    Int b = 0;
    while (b * b < rest) ++b;
    if (b * b == rest && a < b) return {PrimeClass::Tag::Split, a, b};
  }
  throw std::logic_error("no two-square decomposition for " + std::to_string(prime));
}

Int RingSpec::cardinality() const { return kind == RingKind::Zn ? n : n * n; }

std::string RingSpec::name() const {
  return kind == RingKind::Zn ? "Z_" + std::to_string(n) : "Z_" + std::to_string(n) + "[i]";
}

RingSpec make_ring(Int n, RingKind kind) {
  if (n < 1) throw std::invalid_argument("make_ring: n must be >= 1");
  RingSpec ring;
  ring.n = n;
  ring.kind = kind;
  ring.factors = factorize(n);
  for (const auto& f : ring.factors) ring.classes.push_back(classify_prime(f.prime));
  return ring;
}

std::string element_label(const GaussianResidue& x, RingKind kind) {
  return kind == RingKind::Zn ? std::to_string(x.re()) : x.to_string();
}

std::vector<GaussianResidue> ring_elements(const RingSpec& ring) {
  std::vector<GaussianResidue> out;
  out.reserve(static_cast<std::size_t>(ring.cardinality()));
  const Int im_range = ring.kind == RingKind::Zn ? 1 : ring.n;
  for (Int a = 0; a < ring.n; ++a)
    for (Int b = 0; b < im_range; ++b) out.emplace_back(a, b, ring.n);
  return out;
}

std::vector<GaussianResidue> zero_divisor_set(const RingSpec& ring) {
  std::vector<GaussianResidue> out;
  if (ring.n < 2) return out;
  for (const auto& x : ring_elements(ring))
    if (is_zero_divisor(x)) out.push_back(x);
  return out;
}

std::vector<GaussianResidue> crt_decompose(const GaussianResidue& x, const RingSpec& ring) {
  if (x.modulus() != ring.n) throw std::invalid_argument("crt_decompose: element not in ring");
  std::vector<GaussianResidue> parts;
  parts.reserve(ring.factors.size());
  for (const auto& f : ring.factors) parts.emplace_back(x.re(), x.im(), f.value());
  return parts;
}

GaussianResidue crt_recombine(const std::vector<GaussianResidue>& parts, const RingSpec& ring) {
  if (parts.size() != ring.factors.size())
    throw std::invalid_argument("crt_recombine: wrong number of components");
  Int re = 0, im = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const Int mk = ring.factors[k].value();
    if (parts[k].modulus() != mk) throw std::invalid_argument("crt_recombine: component modulus mismatch");
    const Int rest = ring.n / mk;
    // basis element: == 1 mod mk, == 0 mod the other factors
    const Int e = reduce(rest * mod_inverse(rest % mk, mk), ring.n);
    re = reduce(re + reduce(parts[k].re() * e, ring.n), ring.n);
    im = reduce(im + reduce(parts[k].im() * e, ring.n), ring.n);
  }
  return {re, im, ring.n};
}

}  // namespace zdg
