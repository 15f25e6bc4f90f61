#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stw {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int mod_reduce(long long v, int p) {
    long long r = v % p;
    return int(r < 0 ? r + p : r);
}

inline int mod_inverse(int a, int p) {
    a = mod_reduce(a, p);
    if (a == 0) throw std::domain_error("mod_inverse: zero has no inverse mod " + std::to_string(p));
    // extended Euclid
    int t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    return t < 0 ? t + p : t;
}

// Scalar in F_p carrying its modulus. Mixed-modulus arithmetic is a hard error.
struct Fp {
    int value = 0;
    int p = 2;

    Fp() = default;
    Fp(long long v, int prime) : value(mod_reduce(v, prime)), p(prime) {
        if (!is_prime(prime)) throw std::invalid_argument("Fp: modulus " + std::to_string(prime) + " is not prime");
    }

    static void check_same(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p) + " and " + std::to_string(b.p));
    }

    friend Fp operator+(const Fp& a, const Fp& b) { check_same(a, b); return Fp(a.value + b.value, a.p); }
    friend Fp operator-(const Fp& a, const Fp& b) { check_same(a, b); return Fp(a.value - b.value + a.p, a.p); }
    friend Fp operator*(const Fp& a, const Fp& b) { check_same(a, b); return Fp((long long)a.value * b.value, a.p); }
    Fp inv() const { return Fp(mod_inverse(value, p), p); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.value == b.value; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

} // namespace stw
