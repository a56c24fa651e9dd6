#include "zdg/finite_ring.hpp"

#include <stdexcept>

namespace zdg {

FiniteRing::FiniteRing(std::string name, std::vector<std::string> labels, std::vector<std::uint32_t> mul_table)
    : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(mul_table)) {
  if (labels_.empty()) throw std::invalid_argument("FiniteRing: empty ring");
  if (table_.size() != labels_.size() * labels_.size())
    throw std::invalid_argument("FiniteRing: multiplication table has wrong size");
}

bool FiniteRing::is_zero_divisor(std::size_t x) const {
  if (x == 0) return false;
  for (std::size_t y = 1; y < order(); ++y)
    if (mul(x, y) == 0) return true;
  return false;
}

std::vector<std::size_t> FiniteRing::zero_divisors() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 1; x < order(); ++x)
    if (is_zero_divisor(x)) out.push_back(x);
  return out;
}

bool FiniteRing::is_integral_domain() const { return order() > 1 && zero_divisors().empty(); }

FiniteRing table_ring(const RingSpec& ring) {
  const auto elems = ring_elements(ring);
  const std::size_t order = elems.size();
  const Int im_range = ring.kind == RingKind::Zn ? 1 : ring.n;
  std::vector<std::string> labels;
  labels.reserve(order);
  for (const auto& x : elems) labels.push_back(element_label(x, ring.kind));
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) {
      const auto p = mul(elems[i], elems[j]);
      table[i * order + j] = static_cast<std::uint32_t>(p.re() * im_range + p.im());
    }
  return {ring.name(), std::move(labels), std::move(table)};
}

namespace {

using Poly = std::vector<Int>;  // coefficients, low degree first, fixed length

Poly poly_from_index(std::size_t idx, Int p, int len) {
  Poly c(len);
  for (int j = 0; j < len; ++j) {
    c[j] = static_cast<Int>(idx % p);
    idx /= p;
  }
  return c;
}

std::size_t poly_index(const Poly& c, Int p) {
  std::size_t idx = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) idx = idx * p + static_cast<std::size_t>(*it);
  return idx;
}

// Multiply a, b (degree < k) modulo the monic polynomial x^k + low(x).
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& low, Int p) {
  const int k = static_cast<int>(low.size());
  std::vector<Int> prod(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    const Int c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^(d-k) * x^k = -x^(d-k) * low(x)
    for (int j = 0; j < k; ++j) prod[d - k + j] = ((prod[d - k + j] - c * low[j]) % p + p) % p;
  }
  return Poly(prod.begin(), prod.begin() + k);
}

// x^k + low(x) is irreducible iff the quotient ring has no zero divisors.
bool quotient_is_field(const Poly& low, Int p) {
  const int k = static_cast<int>(low.size());
  std::size_t q = 1;
  for (int j = 0; j < k; ++j) q *= static_cast<std::size_t>(p);
  for (std::size_t a = 1; a < q; ++a)
    for (std::size_t b = a; b < q; ++b) {
      const auto c = poly_mulmod(poly_from_index(a, p, k), poly_from_index(b, p, k), low, p);
      if (poly_index(c, p) == 0) return false;
    }
  return true;
}

std::string poly_label(const Poly& c) {
  std::string out;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    if (c[j] == 0) continue;
    if (!out.empty()) out += "+";
    const std::string coeff = std::to_string(c[j]);
    if (j == 0)
      out += coeff;
    else
      out += (c[j] == 1 ? "" : coeff) + (j == 1 ? "x" : "x^" + std::to_string(j));
  }
  return out.empty() ? "0" : out;
}

}  // namespace

FiniteRing galois_field(Int p, int k) {
  if (!is_prime(p) || k < 1) throw std::invalid_argument("galois_field: need prime p and k >= 1");
  std::size_t q = 1;
  for (int j = 0; j < k; ++j) q *= static_cast<std::size_t>(p);
  if (q > 4096) throw std::invalid_argument("galois_field: order too large");

  Poly low;
  for (std::size_t idx = 0; idx < q; ++idx) {
    Poly cand = poly_from_index(idx, p, k);
    if (quotient_is_field(cand, p)) {
      low = std::move(cand);
      break;
    }
  }
  if (low.empty()) throw std::logic_error("galois_field: no irreducible polynomial found");

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) labels.push_back(poly_label(poly_from_index(a, p, k)));
  std::vector<std::uint32_t> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      table[a * q + b] = static_cast<std::uint32_t>(
          poly_index(poly_mulmod(poly_from_index(a, p, k), poly_from_index(b, p, k), low, p), p));
  return {"F_" + std::to_string(q), std::move(labels), std::move(table)};
}

FiniteRing product_ring(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t n1 = r1.order(), n2 = r2.order(), order = n1 * n2;
  std::vector<std::string> labels;
  labels.reserve(order);
  for (std::size_t x = 0; x < n1; ++x)
    for (std::size_t y = 0; y < n2; ++y) labels.push_back("(" + r1.label(x) + "," + r2.label(y) + ")");
  std::vector<std::uint32_t> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] =
          static_cast<std::uint32_t>(r1.mul(a / n2, b / n2) * n2 + r2.mul(a % n2, b % n2));
  return {r1.name() + " x " + r2.name(), std::move(labels), std::move(table)};
}

}  // namespace zdg
