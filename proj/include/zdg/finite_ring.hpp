#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

/// A finite commutative ring given by its multiplication table over element indices.
/// Index 0 is always the zero element.
class FiniteRing {
 public:
  FiniteRing(std::string name, std::vector<std::string> labels, std::vector<std::uint32_t> mul_table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  std::size_t mul(std::size_t x, std::size_t y) const { return table_[x * order() + y]; }

  /// Definitional check: x != 0 and x*y == 0 for some y != 0.
  bool is_zero_divisor(std::size_t x) const;
  std::vector<std::size_t> zero_divisors() const;
  bool is_integral_domain() const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> table_;
};

/// Z_n or Z_n[i] as an explicit table (elements in lexicographic (re, im) order).
FiniteRing table_ring(const RingSpec& ring);

/// GF(p^k) built from a brute-force irreducible polynomial of degree k.
FiniteRing galois_field(Int p, int k);

/// R1 x R2 with componentwise multiplication; element labels "(x,y)".
FiniteRing product_ring(const FiniteRing& r1, const FiniteRing& r2);

}  // namespace zdg
