#pragma once

// Prime-field scalars and base-p digit combinatorics.

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace charclass {

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is prime.
void require_prime(std::uint64_t p, const char* what);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// An element of Z/p. The modulus travels with the value so mixing fields is
/// detected at the operation rather than silently reduced.
class PrimeFieldElement {
public:
    PrimeFieldElement(std::int64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    PrimeFieldElement operator+(const PrimeFieldElement& o) const;
    PrimeFieldElement operator-(const PrimeFieldElement& o) const;
    PrimeFieldElement operator*(const PrimeFieldElement& o) const;
    PrimeFieldElement operator-() const;
    PrimeFieldElement inverse() const;
    PrimeFieldElement pow(std::uint64_t e) const;

    bool operator==(const PrimeFieldElement&) const = default;

private:
    struct Unchecked {};
    PrimeFieldElement(Unchecked, std::uint64_t value, std::uint64_t modulus) noexcept
        : value_(value), modulus_(modulus) {}
    void check_same_field(const PrimeFieldElement& o) const;

    std::uint64_t value_;
    std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);

/// C(n, k) mod p as the product of digit binomials in base p.
std::uint64_t lucas_binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Sum of base-p digits of k (alpha_p(k)); alpha(k) is the p = 2 case.
std::uint64_t digit_sum_base_p(std::uint64_t k, std::uint64_t p);

/// [log2 m] computed from the bit length, exact at powers of two.
inline int floor_log2(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("floor_log2: argument must be positive");
    return static_cast<int>(std::bit_width(m)) - 1;
}

inline std::int64_t pow2(int e) {
    if (e < 0 || e > 62) throw std::out_of_range("pow2: exponent out of range");
    return std::int64_t{1} << e;
}

}  // namespace charclass
