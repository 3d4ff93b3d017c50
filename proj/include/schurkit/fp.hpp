#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace schurkit {

// Arithmetic mod a prime p. p must fit in a byte so matrix entries can be
// stored densely as uint8_t; every prime used by the library is tiny anyway.
struct Fp {
    int p;
    std::vector<uint8_t> inv_table;

    explicit Fp(int prime) : p(prime) {
        if (p < 2 || p > 251) throw std::invalid_argument("Fp: prime out of range");
        for (int a = 2; a * a <= p; ++a)
            if (p % a == 0) throw std::invalid_argument("Fp: modulus not prime");
        inv_table.assign(p, 0);
        for (int a = 1; a < p; ++a) inv_table[a] = pow_mod(a, p - 2);
    }

    uint8_t reduce(long long v) const {
        long long r = v % p;
        if (r < 0) r += p;
        return static_cast<uint8_t>(r);
    }
    uint8_t add(uint8_t a, uint8_t b) const {
        int s = a + b;
        return static_cast<uint8_t>(s >= p ? s - p : s);
    }
    uint8_t sub(uint8_t a, uint8_t b) const {
        int s = a - b;
        return static_cast<uint8_t>(s < 0 ? s + p : s);
    }
    uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>(a * b % p); }
    uint8_t neg(uint8_t a) const { return static_cast<uint8_t>(a == 0 ? 0 : p - a); }
    uint8_t inv(uint8_t a) const {
        if (a == 0) throw std::domain_error("Fp: inverse of zero");
        return inv_table[a];
    }

  private:
    uint8_t pow_mod(int a, int e) const {
        long long r = 1, base = a;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint8_t>(r);
    }
};

} // namespace schurkit
