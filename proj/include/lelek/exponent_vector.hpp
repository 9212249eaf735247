#pragma once

#include <lelek/rational.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>

namespace lelek {

/// Prime factorization of a positive rational, as prime -> signed exponent.
/// Reconstructing the product of p^e recovers the rational exactly.
struct ExponentVector {
    std::map<mpz_class, long> exponents;

    Rational reconstruct() const {
        Rational r(1);
        for (const auto& [p, e] : exponents) {
            Rational pe = pow_nonneg(Rational(p), static_cast<unsigned long>(e < 0 ? -e : e));
            if (e >= 0)
                r *= pe;
            else
                r /= pe;
        }
        return r;
    }
};

namespace detail {

inline mpz_class pollard_rho(const mpz_class& n, gmp_randstate_t rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        mpz_class x, c, y, d(1);
        mpz_urandomm(x.get_mpz_t(), rng, n.get_mpz_t());
        mpz_urandomm(c.get_mpz_t(), rng, n.get_mpz_t());
        if (c == 0) c = 1;
        y = x;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor, retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 0 && d != 1 && d != n) return d;
    }
}

inline void factor_into(mpz_class n, std::map<mpz_class, long>& out, long sign) {
    if (n <= 0) throw std::invalid_argument("factor_into: positive integers only");
    // Trial division covers every input this library meets in practice.
    for (unsigned long p = 2; p <= 100000 && n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += sign;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        out[n] += sign;
        return;
    }
    static gmp_randstate_t rng;
    static bool init = [] {
        gmp_randinit_mt(rng);
        gmp_randseed_ui(rng, 0x5e1ecul);
        return true;
    }();
    (void)init;
    mpz_class d = pollard_rho(n, rng);
    factor_into(d, out, sign);
    factor_into(n / d, out, sign);
}

}  // namespace detail

/// Exact factorization of a positive rational.
inline ExponentVector factor_rational(const Rational& r) {
    if (r <= Rational(0)) throw std::invalid_argument("factor_rational: input must be positive");
    ExponentVector v;
    detail::factor_into(r.num(), v.exponents, +1);
    detail::factor_into(r.den(), v.exponents, -1);
    std::erase_if(v.exponents, [](const auto& kv) { return kv.second == 0; });
    return v;
}

/// True iff r^k = rho^l has no solution in integers besides k = l = 0.
/// Decided by testing whether the prime exponent vectors are parallel over Q.
inline bool multiplicatively_independent(const Rational& r, const Rational& rho) {
    if (r <= Rational(0) || rho <= Rational(0))
        throw std::invalid_argument("multiplicatively_independent: inputs must be positive");
    if (r.is_one() || rho.is_one()) return false;  // 1^k = rho^0 for any k
    ExponentVector a = factor_rational(r);
    ExponentVector b = factor_rational(rho);
    if (a.exponents.size() != b.exponents.size()) return true;
    // Parallel iff same support and all cross products a_p * b_q == a_q * b_p.
    auto ia = a.exponents.begin();
    auto ib = b.exponents.begin();
    long ka = 0, kb = 0;  // reference ratio kb/ka from the first prime
    for (; ia != a.exponents.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return true;
        if (ka == 0 && kb == 0) {
            ka = ia->second;
            kb = ib->second;
            continue;
        }
        if (static_cast<long long>(ia->second) * kb != static_cast<long long>(ib->second) * ka)
            return true;
    }
    return false;
}

}  // namespace lelek
