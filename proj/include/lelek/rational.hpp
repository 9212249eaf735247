#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lelek {

/// Exact rational with arbitrary-precision parts. Always reduced, denominator >= 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "p/q" or a bare integer, both in decimal. No floating point accepted.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(mpz_class(std::string(s)));
            mpz_class n{std::string(s.substr(0, slash))};
            mpz_class d{std::string(s.substr(slash + 1))};
            if (d == 0) throw std::invalid_argument("Rational: zero denominator");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

    static Rational from_strings(const std::string& num, const std::string& den) {
        return Rational(mpz_class(num), mpz_class(den));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_str();
    }

    /// Truncated decimal expansion with the given number of fractional digits.
    /// Deterministic; used only for annotation columns, never for arithmetic.
    std::string decimal(unsigned digits = 12) const {
        mpz_class scaled = v_.get_num();
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
        scaled *= pow10;
        scaled /= v_.get_den();
        std::string s = scaled.get_str();
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
        if (neg) s.insert(0, "-");
        return s;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Approximate double value; for sort keys and rendering only.
    double to_double() const { return v_.get_d(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// 2^k for any integer k (negative gives 1/2^|k|).
inline Rational pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
    return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

/// r^k for nonnegative k.
inline Rational pow_nonneg(const Rational& r, unsigned long k) {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), k);
    return Rational(n, d);
}

/// Smallest N >= 0 with 1/2^N < eps. Requires eps > 0.
inline unsigned ceil_log2_inverse(const Rational& eps) {
    if (eps <= Rational(0)) throw std::invalid_argument("ceil_log2_inverse: eps must be positive");
    unsigned n = 0;
    Rational w(1);
    while (w >= eps) {
        w /= Rational(2);
        ++n;
        if (n > 1u << 20) throw std::runtime_error("ceil_log2_inverse: eps unreasonably small");
    }
    return n;
}

}  // namespace lelek
