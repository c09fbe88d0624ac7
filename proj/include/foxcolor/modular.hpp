#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace foxcolor {

/// Residue of a modulo m in [0, m).
constexpr int mod(std::int64_t a, int m) {
  std::int64_t r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

constexpr bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Inverse of a modulo m; throws when gcd(a, m) != 1.
inline int inverse_mod(int a, int m) {
  std::int64_t r0 = m, r1 = mod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1)
    throw std::domain_error(std::to_string(a) + " is not a unit modulo " +
                            std::to_string(m));
  return mod(s0, m);
}

/// The coloring modulus m >= 2.
class Modulus {
 public:
  explicit Modulus(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  }

  int value() const { return m_; }
  bool is_odd() const { return m_ % 2 == 1; }
  bool is_prime() const { return foxcolor::is_prime(m_); }

  /// k with m = 2k + 1.
  int half_k() const {
    if (!is_odd()) throw std::domain_error("half_k is defined for odd moduli");
    return (m_ - 1) / 2;
  }

  int reduce(std::int64_t a) const { return mod(a, m_); }
  bool is_unit(int a) const { return std::gcd(mod(a, m_), m_) == 1; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  int m_;
};

inline void require_odd_prime(const Modulus& m, const char* what) {
  if (!m.is_odd() || !m.is_prime())
    throw std::domain_error(std::string(what) + " requires an odd prime modulus, got " +
                            std::to_string(m.value()));
}

}  // namespace foxcolor
