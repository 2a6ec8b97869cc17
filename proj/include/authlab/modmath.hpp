// authlab: smart-card remote user authentication laboratory
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "authlab/biguint.hpp"
#include "authlab/rng.hpp"

namespace authlab {

// Prime modulus of the multiplicative group all four schemes work in.
// Construction validates: value >= 23 (the smallest modulus the lab runs at)
// and primality with error probability <= 2^-80. None of this arithmetic is
// constant-time; this is a cryptanalysis bench, not a credential store.
class Prime {
public:
    explicit Prime(BigUint value);

    const BigUint& value() const { return value_; }

    // Group order of Z_p^*, the modulus for exponent arithmetic.
    BigUint group_order() const { return value_ - 1; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }

private:
    struct AlreadyVerified {};
    Prime(BigUint value, AlreadyVerified) : value_(std::move(value)) {}

    BigUint value_;

    friend Prime gen_prime(unsigned bits, SeededRng& rng);
};

// base^exp mod m by square-and-multiply. Requires base < m.
BigUint mod_pow(const BigUint& base, const BigUint& exp, const Prime& m);

// b with a*b = 1 (mod m), for 1 <= a < m. Throws ZeroNotInvertible for a = 0.
BigUint mod_inv(const BigUint& a, const Prime& m);

// k^-1 mod group_order, for k >= 1. Exponents invert modulo the group order
// p-1 (not p): this is what turns "the k-th root of pw" into pw^exp_inv(k).
// Throws NotCoprime when gcd(k, group_order) != 1.
BigUint exp_inv(const BigUint& k, const BigUint& group_order);

// Uniform blinding exponent r in [1, p-2], reproducible under a fixed seed.
BigUint sample_exponent(const Prime& p, SeededRng& rng);

// Random prime of exactly `bits` bits, bits >= 5.
Prime gen_prime(unsigned bits, SeededRng& rng);

// Deterministic trial division below 2^16 (exact for n < 2^32), then 40
// Miller-Rabin rounds with bases derived from n.
bool is_prime(const BigUint& n);

}  // namespace authlab
