#pragma once

// Dense polynomials over F_p for word-size primes, used by the modular
// stages of factorization and root finding.

#include <cstdint>
#include <random>
#include <vector>

namespace itg::zp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // lowest degree first, no trailing zeros

struct Field {
    u64 p;
    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return (unsigned __int128)a * b % p; }
    u64 pow(u64 a, u64 e) const;
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(Poly& a);
int deg(const Poly& a);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
void divmod(const Field& F, const Poly& a, const Poly& b, Poly* q, Poly* r);
Poly mod(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
Poly gcd(const Field& F, Poly a, Poly b);
// s*a + t*b = gcd (monic)
Poly xgcd(const Field& F, const Poly& a, const Poly& b, Poly* s, Poly* t);
Poly derivative(const Field& F, const Poly& a);
Poly powmod(const Field& F, const Poly& base, u64 e, const Poly& m);
u64 eval(const Field& F, const Poly& a, u64 x);

bool is_squarefree(const Field& F, const Poly& f);
// Monic irreducible factors of a squarefree polynomial (p odd).
std::vector<Poly> factor_squarefree(const Field& F, const Poly& f, std::mt19937_64& rng);
// Distinct roots of f in F_p (p odd).
std::vector<u64> roots(const Field& F, const Poly& f, std::mt19937_64& rng);

}  // namespace itg::zp
