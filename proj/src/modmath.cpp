// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#include "authlab/modmath.hpp"

#include <stdexcept>
#include <vector>

#include "authlab/errors.hpp"

namespace authlab {

namespace {

// All odd primes below 2^16, built once.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1u << 16;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t(i) * i; j < limit; j += i) {
                composite[static_cast<std::size_t>(j)] = true;
            }
        }
        return out;
    }();
    return primes;
}

BigUint mod_pow_raw(const BigUint& base, const BigUint& exp, const BigUint& m) {
    BigUint result = 1;
    BigUint b = base % m;
    const std::size_t bits = bit_length(exp);
    for (std::size_t i = 0; i < bits; ++i) {
        if (boost::multiprecision::bit_test(exp, static_cast<unsigned>(i))) {
            result = (result * b) % m;
        }
        b = (b * b) % m;
    }
    return result;
}

// Extended Euclid over signed cpp_int; returns x with a*x = gcd(a, m) (mod m).
BigUint euclid_inverse(const BigUint& a, const BigUint& m, BigUint& gcd_out) {
    BigUint old_r = a, r = m;
    BigUint old_s = 1, s = 0;
    while (!r.is_zero()) {
        const BigUint q = old_r / r;
        BigUint tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    gcd_out = old_r;
    BigUint x = old_s % m;
    if (x.sign() < 0) {
        x += m;
    }
    return x;
}

bool miller_rabin(const BigUint& n, unsigned rounds, SeededRng& rng) {
    // n odd, n > 3, survives trial division.
    BigUint d = n - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    const BigUint n_minus_1 = n - 1;
    for (unsigned round = 0; round < rounds; ++round) {
        const BigUint a = rng.uniform(2, n - 2);
        BigUint x = mod_pow_raw(a, d, n);
        if (x == 1 || x == n_minus_1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t fold_to_seed(const BigUint& n) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    BigUint v = n;
    while (!v.is_zero()) {
        h = (h ^ static_cast<std::uint64_t>(v & 0xffffffffffffffffULL)) * 0x100000001b3ULL;
        v >>= 64;
    }
    return h;
}

}  // namespace

bool is_prime(const BigUint& n) {
    if (n < 2) return false;
    for (std::uint32_t q : small_primes()) {
        const BigUint qq = BigUint(q) * q;
        if (qq > n) return true;
        if (n % q == 0) return n == q;
    }
    // n >= 2^32 from here. 40 rounds bound the error by 4^-40 = 2^-80.
    SeededRng rng(fold_to_seed(n));
    return miller_rabin(n, 40, rng);
}

Prime::Prime(BigUint value) : value_(std::move(value)) {
    if (value_ < 23) {
        throw std::invalid_argument("Prime: modulus must be >= 23");
    }
    if (!is_prime(value_)) {
        throw std::invalid_argument("Prime: value is not prime");
    }
}

BigUint mod_pow(const BigUint& base, const BigUint& exp, const Prime& m) {
    if (base.sign() < 0 || base >= m.value()) {
        throw std::invalid_argument("mod_pow: base must be in [0, p)");
    }
    if (exp.sign() < 0) {
        throw std::invalid_argument("mod_pow: negative exponent");
    }
    return mod_pow_raw(base, exp, m.value());
}

BigUint mod_inv(const BigUint& a, const Prime& m) {
    if (a.is_zero()) {
        throw ZeroNotInvertible();
    }
    if (a.sign() < 0 || a >= m.value()) {
        throw std::invalid_argument("mod_inv: a must be in [1, p)");
    }
    BigUint gcd;
    BigUint inv = euclid_inverse(a, m.value(), gcd);
    // gcd is 1 by primality of m and 1 <= a < m.
    return inv;
}

BigUint exp_inv(const BigUint& k, const BigUint& group_order) {
    if (k < 1) {
        throw std::invalid_argument("exp_inv: k must be >= 1");
    }
    if (group_order < 1) {
        throw std::invalid_argument("exp_inv: group order must be >= 1");
    }
    BigUint gcd;
    BigUint inv = euclid_inverse(k % group_order, group_order, gcd);
    if (gcd != 1) {
        throw NotCoprime();
    }
    return inv;
}

BigUint sample_exponent(const Prime& p, SeededRng& rng) {
    return rng.uniform(1, p.value() - 2);
}

Prime gen_prime(unsigned bits, SeededRng& rng) {
    if (bits < 5) {
        throw std::invalid_argument("gen_prime: need at least 5 bits");
    }
    const BigUint lo = BigUint(1) << (bits - 1);
    const BigUint hi = (BigUint(1) << bits) - 1;
    for (;;) {
        BigUint candidate = rng.uniform(lo, hi);
        boost::multiprecision::bit_set(candidate, 0);
        if (is_prime(candidate)) {
            return Prime(std::move(candidate), Prime::AlreadyVerified{});
        }
    }
}

}  // namespace authlab
