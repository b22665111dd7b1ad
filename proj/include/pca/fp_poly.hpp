#pragma once

// Dense univariate polynomials over a prime field F_p with machine-word
// residues. Coefficients are stored low-to-high and kept trimmed (no
// trailing zeros); the zero polynomial is the empty vector.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace pca::fp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t reduce(long long v, std::uint64_t p);

bool is_prime(std::uint64_t n);

void trim(Poly& f);
int degree(const Poly& f);
bool is_one(const Poly& f);
Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p);
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(const Poly& f, const Poly& g, std::uint64_t p);
Poly monic(const Poly& f, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);
// Returns (g, s, t) with s*f + t*h = g, g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly& f, const Poly& h, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly pow_mod(const Poly& base, const mpz_class& e, const Poly& modulus, std::uint64_t p);

// Monic irreducible factors with multiplicity, sorted by degree then
// coefficients. The input must be nonzero; its leading coefficient is dropped.
std::vector<std::pair<Poly, int>> factor(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace pca::fp
