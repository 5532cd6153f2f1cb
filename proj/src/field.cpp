#include "qstrat/field.hpp"

#include <string>

#include "qstrat/errors.hpp"

namespace qstrat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p))
    throw Error(ErrorKind::Validation, "not a supported prime: " + std::to_string(p));
}

Coeff PrimeField::pow(Coeff a, std::uint64_t e) const noexcept {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Coeff PrimeField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Coeff>(r);
}

long long PrimeField::lift(Coeff a) const noexcept {
  long long v = a;
  return 2 * v > static_cast<long long>(p_) ? v - p_ : v;
}

Coeff binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  // Lucas: C(n,k) = prod C(n_i, k_i) over base-p digits.
  PrimeField f(p);
  Coeff result = 1;
  while (n || k) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    Coeff num = 1, den = 1;
    for (std::uint64_t j = 0; j < ki; ++j) {
      num = f.mul(num, static_cast<Coeff>(ni - j));
      den = f.mul(den, static_cast<Coeff>(j + 1));
    }
    result = f.mul(result, f.mul(num, f.inv(den)));
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace qstrat
