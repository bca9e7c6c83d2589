// Dense univariate polynomials over F_q: irreducibility, counting,
// deterministic enumeration and the pairwise-coprime degree-m families.
#ifndef MRLRC_POLY_HPP
#define MRLRC_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mrlrc/gf.hpp"

namespace mrlrc {

// Coefficients low-to-high, no trailing zeros; zero polynomial is empty.
struct Poly {
    std::vector<std::uint32_t> c;

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const Poly& o) const { return c == o.c; }

    static Poly x();                       // the monomial x
    static Poly constant(std::uint32_t v);
    static Poly from_coeffs(std::vector<std::uint32_t> v);  // normalizes
};

namespace poly {

Poly add(const Fq& k, const Poly& a, const Poly& b);
Poly sub(const Fq& k, const Poly& a, const Poly& b);
Poly mul(const Fq& k, const Poly& a, const Poly& b);
Poly scalar_mul(const Fq& k, std::uint32_t s, const Poly& a);
void divmod(const Fq& k, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly mod(const Fq& k, const Poly& a, const Poly& b);
Poly monic(const Fq& k, const Poly& a);
Poly gcd(const Fq& k, Poly a, Poly b);  // monic gcd
Poly powmod(const Fq& k, const Poly& base, std::uint64_t e, const Poly& m);
std::uint32_t eval(const Fq& k, const Poly& a, std::uint32_t x);
bool is_monic(const Poly& a);

// h with f*h == 1 (mod Q); requires gcd(f, Q) = 1.
Poly mod_inverse(const Fq& k, const Poly& f, const Poly& Q);

// Rabin test: x^(q^d) == x mod f and gcd(x^(q^(d/p)) - x, f) = 1.
bool is_irreducible(const Fq& k, const Poly& f);

// Number of monic irreducible degree-d polynomials, by Moebius inversion
// of sum_{d|m} d N_q(d) = q^m. Saturates at UINT64_MAX.
std::uint64_t count_irreducible(const Fq& k, unsigned d);

// Canonical enumeration order for monic polynomials of fixed degree:
// ascending coefficient encoding sum c_i q^i. `digits` holds c_0..c_{d-1};
// next_digits steps the odometer and returns false after the last tuple.
Poly monic_from_digits(unsigned d, const std::vector<std::uint32_t>& digits);
bool next_digits(const Fq& k, std::vector<std::uint32_t>& digits);

// Lexicographically smallest monic irreducible of degree d not in exclude.
Poly find_irreducible(const Fq& k, unsigned d, const std::vector<Poly>& exclude = {});

std::string to_text(const Poly& a);        // "1,1,0,1" = 1 + x + x^3
Poly from_text(const std::string& s);

}  // namespace poly

// g pairwise-coprime monic degree-m polynomials: all degree-m irreducibles
// first (canonical order), then p(x)^(m/d) for degree-d irreducibles p,
// proper divisors d of m taken in decreasing order.
struct CoprimeFamily {
    FqPtr ctx;
    unsigned m = 0;
    std::vector<Poly> members;
};

CoprimeFamily coprime_family(FqPtr ctx, unsigned m, unsigned g);

}  // namespace mrlrc

#endif
