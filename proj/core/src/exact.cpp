#include "allmatch/exact.hpp"

#include "allmatch/errors.hpp"

namespace allmatch {

ExactCount factorial(unsigned n) {
    ExactCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactCount binomial(const ExactCount& n, unsigned long k) {
    if (n < 0) return 0;
    ExactCount r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

ExactCount binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    ExactCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactCount arrangements(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    ExactCount r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= ExactCount(n - i);
    return r;
}

ExactCount pow2(unsigned long e) {
    ExactCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

ExactRational make_rational(const ExactCount& num, const ExactCount& den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const ExactRational& q) { return q.get_d(); }

double to_double(const ExactCount& z) { return z.get_d(); }

std::string to_decimal(const ExactCount& z) { return z.get_str(); }

ExactCount parse_decimal(const std::string& text) {
    if (text.empty()) throw ValidationError("empty integer literal");
    ExactCount z;
    if (mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0)
        throw ValidationError("invalid integer literal: " + text);
    return z;
}

} // namespace allmatch
