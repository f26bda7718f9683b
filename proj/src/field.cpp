#include "charclass/field.hpp"

#include <array>
#include <string>

namespace charclass {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void require_prime(std::uint64_t p, const char* what) {
    if (!is_prime(p)) {
        throw std::invalid_argument(std::string(what) + ": modulus " + std::to_string(p) + " is not prime");
    }
}

PrimeFieldElement::PrimeFieldElement(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus > static_cast<std::uint64_t>(INT64_MAX)) {
        throw std::invalid_argument("PrimeFieldElement: modulus must be below 2^63");
    }
    require_prime(modulus, "PrimeFieldElement");
    auto m = static_cast<std::int64_t>(modulus);
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint64_t>(r);
}

void PrimeFieldElement::check_same_field(const PrimeFieldElement& o) const {
    if (modulus_ != o.modulus_) throw std::logic_error("PrimeFieldElement: mixed moduli");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
    check_same_field(o);
    std::uint64_t s = value_ + o.value_;
    if (s >= modulus_ || s < value_) s -= modulus_;
    return {Unchecked{}, s, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
    check_same_field(o);
    std::uint64_t d = value_ >= o.value_ ? value_ - o.value_ : modulus_ - (o.value_ - value_);
    return {Unchecked{}, d, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
    check_same_field(o);
    return {Unchecked{}, mul_mod(value_, o.value_, modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    return {Unchecked{}, value_ == 0 ? 0 : modulus_ - value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (value_ == 0) throw std::domain_error("PrimeFieldElement: zero has no inverse");
    return pow(modulus_ - 2);
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
    return {Unchecked{}, pow_mod(value_, e, modulus_), modulus_};
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) {
    return os << x.value() << " (mod " << x.modulus() << ")";
}

namespace {

// C(a, b) mod p for 0 <= b <= a < p; every factor is a unit.
std::uint64_t small_binom_mod_p(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = mul_mod(num, (a - i) % p, p);
        den = mul_mod(den, (i + 1) % p, p);
    }
    return mul_mod(num, pow_mod(den, p - 2, p), p);
}

}  // namespace

std::uint64_t lucas_binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    require_prime(p, "lucas_binom_mod_p");
    if (p == 2) return (k & ~n) == 0 ? 1 : 0;  // digit dominance
    std::uint64_t result = 1;
    while (k > 0 || n > 0) {
        std::uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        result = mul_mod(result, small_binom_mod_p(nd, kd, p), p);
        n /= p;
        k /= p;
    }
    return result;
}

std::uint64_t digit_sum_base_p(std::uint64_t k, std::uint64_t p) {
    if (k == 0) throw std::invalid_argument("digit_sum_base_p: k must be positive");
    require_prime(p, "digit_sum_base_p");
    if (p == 2) return static_cast<std::uint64_t>(std::popcount(k));
    std::uint64_t sum = 0;
    for (; k > 0; k /= p) sum += k % p;
    return sum;
}

}  // namespace charclass
