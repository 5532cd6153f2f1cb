#pragma once

#include <cstdint>

namespace qstrat {

using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a small prime p (p < 2^16).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; a must be nonzero.
  Coeff inv(Coeff a) const;
  Coeff from_int(long long v) const noexcept;
  /// Symmetric lift to (-p/2, p/2].
  long long lift(Coeff a) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// Binomial coefficient C(n, k) reduced mod p (Lucas' theorem).
Coeff binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

}  // namespace qstrat
