#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace hdx {

/// Exact rational, always kept in canonical reduced form.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(std::int64_t num, std::int64_t den = 1) {
    Rat r{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
    Rat r{num, den};
    r.canonicalize();
    return r;
}

inline Rat pow(const Rat& base, unsigned long exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return make_rat(num, den);
}

inline BigInt big_pow(unsigned long base, unsigned long exponent) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
    return r;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// log2 of a positive rational without converting it to a double first;
/// the constants of the cosystolic criterion underflow any float.
inline double log2_of(const Rat& value) {
    long num_exp = 0, den_exp = 0;
    double num_mant = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
    double den_mant = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
    return std::log2(num_mant) - std::log2(den_mant) + static_cast<double>(num_exp - den_exp);
}

inline bool fits_int64(const BigInt& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

/// Smallest rational with denominator 2^bits that is >= value^(1/root).
Rat rational_root_ceil(const Rat& value, unsigned long root, unsigned long bits = 32);

/// A rational or +infinity; minima over empty candidate sets report infinity.
class ExtRat {
public:
    ExtRat() = default;  // infinity
    ExtRat(Rat v) : value_(std::move(v)) {}

    static ExtRat infinity() { return {}; }

    bool is_infinite() const { return !value_.has_value(); }
    const Rat& value() const { return *value_; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
        return a.value() == b.value();
    }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.value() < b.value();
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return !(b < a); }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return !(a < b); }

    std::string str() const { return is_infinite() ? std::string("inf") : value_->get_str(); }

private:
    std::optional<Rat> value_;
};

}  // namespace hdx
