#include "hdx/rational.hpp"

namespace hdx {

Rat rational_root_ceil(const Rat& value, unsigned long root, unsigned long bits) {
    if (value <= 0) return Rat(0);
    // smallest m with m^root * den >= num * 2^(bits*root)
    BigInt target = value.get_num() << (bits * root);
    BigInt den = value.get_den();
    BigInt quotient = (target + den - 1) / den;
    BigInt m;
    mpz_root(m.get_mpz_t(), quotient.get_mpz_t(), root);
    auto reaches = [&](const BigInt& candidate) {
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), candidate.get_mpz_t(), root);
        return p * den >= target;
    };
    while (m > 0 && reaches(m - 1)) --m;
    while (!reaches(m)) ++m;
    return make_rat(m, BigInt(1) << bits);
}

}  // namespace hdx
