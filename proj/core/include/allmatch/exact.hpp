#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace allmatch {

// Arbitrary-precision signed integer. All counting results are exact; nothing
// in the library rounds unless quiesced through to_double().
using ExactCount = mpz_class;

// Arbitrary-precision rational, always canonicalized (lowest terms, den > 0).
using ExactRational = mpq_class;

ExactCount factorial(unsigned n);

// C(n, k); zero when k > n or k < 0 by convention.
ExactCount binomial(const ExactCount& n, unsigned long k);
ExactCount binomial(unsigned long n, unsigned long k);

// Falling factorial P(n, k) = n! / (n-k)!; zero when k > n.
ExactCount arrangements(unsigned long n, unsigned long k);

ExactCount pow2(unsigned long e);

ExactRational make_rational(const ExactCount& num, const ExactCount& den);

// Nearest double; best-effort for magnitudes beyond double range (inf).
double to_double(const ExactRational& q);
double to_double(const ExactCount& z);

std::string to_decimal(const ExactCount& z);

ExactCount parse_decimal(const std::string& text);

} // namespace allmatch
