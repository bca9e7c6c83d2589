#include "mrlrc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mrlrc {

Poly Poly::x() { return Poly{{0, 1}}; }

Poly Poly::constant(std::uint32_t v) { return v ? Poly{{v}} : Poly{}; }

Poly Poly::from_coeffs(std::vector<std::uint32_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return Poly{std::move(v)};
}

namespace poly {

namespace {

void trim(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

std::vector<unsigned> divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

int moebius(unsigned n) {
    int mu = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

Poly add(const Fq& k, const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = k.add(x, y);
    }
    trim(out);
    return out;
}

Poly sub(const Fq& k, const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
        std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = k.sub(x, y);
    }
    trim(out);
    return out;
}

Poly mul(const Fq& k, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) out.c[i + j] = k.add(out.c[i + j], k.mul(a.c[i], b.c[j]));
    }
    return out;
}

Poly scalar_mul(const Fq& k, std::uint32_t s, const Poly& a) {
    if (s == 0) return {};
    Poly out = a;
    for (auto& c : out.c) c = k.mul(s, c);
    return out;
}

void divmod(const Fq& k, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw Error("division by zero polynomial");
    rem = a;
    quot = {};
    int db = b.deg();
    if (a.deg() < db) return;
    quot.c.assign(a.deg() - db + 1, 0);
    std::uint32_t lead_inv = k.inv(b.c.back());
    for (int i = rem.deg(); i >= db; --i) {
        std::uint32_t coeff = static_cast<std::size_t>(i) < rem.c.size() ? rem.c[i] : 0;
        if (coeff == 0) continue;
        std::uint32_t f = k.mul(coeff, lead_inv);
        quot.c[i - db] = f;
        for (int j = 0; j <= db; ++j)
            rem.c[i - db + j] = k.sub(rem.c[i - db + j], k.mul(f, b.c[j]));
    }
    trim(rem);
    trim(quot);
}

Poly mod(const Fq& k, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(k, a, b, q, r);
    return r;
}

Poly monic(const Fq& k, const Poly& a) {
    if (a.is_zero()) return {};
    return scalar_mul(k, k.inv(a.c.back()), a);
}

bool is_monic(const Poly& a) { return !a.is_zero() && a.c.back() == 1; }

Poly gcd(const Fq& k, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = mod(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(k, a);
}

Poly powmod(const Fq& k, const Poly& base, std::uint64_t e, const Poly& m) {
    Poly r = Poly::constant(1);
    Poly b = mod(k, base, m);
    while (e) {
        if (e & 1) r = mod(k, mul(k, r, b), m);
        b = mod(k, mul(k, b, b), m);
        e >>= 1;
    }
    return r;
}

std::uint32_t eval(const Fq& k, const Poly& a, std::uint32_t x) {
    std::uint32_t v = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) v = k.add(k.mul(v, x), *it);
    return v;
}

Poly mod_inverse(const Fq& k, const Poly& f, const Poly& Q) {
    // extended Euclid on (Q, f); invariant r = s*Q + t*f, inverse is t
    Poly r0 = Q, r1 = mod(k, f, Q);
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        Poly q, r2;
        divmod(k, r0, r1, q, r2);
        Poly t2 = sub(k, t0, mul(k, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.deg() != 0) throw Error("mod_inverse: inputs are not coprime");
    return scalar_mul(k, k.inv(r0.c[0]), t0);
}

bool is_irreducible(const Fq& k, const Poly& f) {
    if (f.is_zero()) throw Error("irreducibility of the zero polynomial");
    if (f.deg() == 0) return false;
    Poly m = monic(k, f);
    unsigned d = static_cast<unsigned>(m.deg());
    if (d == 1) return true;
    // iterated Frobenius powers x^(q^i) mod f for i = 1..d
    std::vector<Poly> frob(d + 1);
    frob[0] = Poly::x();
    for (unsigned i = 1; i <= d; ++i) frob[i] = powmod(k, frob[i - 1], k.q(), m);
    if (!(frob[d] == mod(k, Poly::x(), m))) return false;
    for (unsigned pd = 2; pd <= d; ++pd) {
        if (d % pd != 0 || !is_prime_u64(pd)) continue;
        Poly diff = sub(k, frob[d / pd], Poly::x());
        if (gcd(k, diff, m).deg() != 0) return false;
    }
    return true;
}

std::uint64_t count_irreducible(const Fq& k, unsigned d) {
    if (d < 1) throw Error("degree must be >= 1");
    // N_q(d) = (1/d) sum_{e|d} mu(e) q^(d/e)
    std::uint64_t pos = 0, neg = 0;
    for (unsigned e : divisors(d)) {
        int mu = moebius(e);
        if (mu == 0) continue;
        std::uint64_t term = sat_pow(k.q(), d / e);
        if (mu > 0)
            pos = pos > UINT64_MAX - term ? UINT64_MAX : pos + term;
        else
            neg = neg > UINT64_MAX - term ? UINT64_MAX : neg + term;
    }
    if (pos == UINT64_MAX) return UINT64_MAX;
    return (pos - neg) / d;
}

Poly monic_from_digits(unsigned d, const std::vector<std::uint32_t>& digits) {
    Poly out;
    out.c = digits;
    out.c.resize(d, 0);
    out.c.push_back(1);
    return out;
}

bool next_digits(const Fq& k, std::vector<std::uint32_t>& digits) {
    for (auto& v : digits) {
        if (++v < k.q()) return true;
        v = 0;
    }
    return false;
}

Poly find_irreducible(const Fq& k, unsigned d, const std::vector<Poly>& exclude) {
    if (d < 1) throw Error("degree must be >= 1");
    std::vector<std::uint32_t> digits(d, 0);
    do {
        Poly cand = monic_from_digits(d, digits);
        if (!is_irreducible(k, cand)) continue;
        if (std::find(exclude.begin(), exclude.end(), cand) != exclude.end()) continue;
        return cand;
    } while (next_digits(k, digits));
    throw Error("no irreducible polynomial of the requested degree remains");
}

std::string to_text(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.c[i]);
    }
    return s;
}

Poly from_text(const std::string& s) {
    std::vector<std::uint32_t> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        c.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    return Poly::from_coeffs(std::move(c));
}

}  // namespace poly

CoprimeFamily coprime_family(FqPtr ctx, unsigned m, unsigned g) {
    if (m < 1 || g < 1) throw Error("coprime family needs m >= 1, g >= 1");
    const Fq& k = *ctx;
    std::uint64_t supply = 0;
    std::vector<unsigned> divs;
    for (unsigned d = 1; d <= m; ++d)
        if (m % d == 0) divs.push_back(d);
    for (unsigned d : divs) {
        std::uint64_t n = poly::count_irreducible(k, d);
        supply = supply > UINT64_MAX - n ? UINT64_MAX : supply + n;
    }
    if (supply < g) throw Error("insufficient supply of pairwise-coprime polynomials");

    CoprimeFamily fam;
    fam.ctx = ctx;
    fam.m = m;
    // all degree-m irreducibles in canonical order, then prime powers
    // p(x)^(m/d) for proper divisors d in decreasing order
    for (auto it = divs.rbegin(); it != divs.rend() && fam.members.size() < g; ++it) {
        unsigned d = *it;
        std::uint64_t avail = poly::count_irreducible(k, d);
        std::vector<std::uint32_t> digits(d, 0);
        std::uint64_t seen = 0;
        do {
            if (seen == avail || fam.members.size() == g) break;
            Poly cand = poly::monic_from_digits(d, digits);
            if (!poly::is_irreducible(k, cand)) continue;
            ++seen;
            Poly member = cand;
            for (unsigned rep = 1; rep < m / d; ++rep) member = poly::mul(k, member, cand);
            fam.members.push_back(std::move(member));
        } while (poly::next_digits(k, digits));
    }
    if (fam.members.size() < g) throw Error("insufficient supply of pairwise-coprime polynomials");
    return fam;
}

}  // namespace mrlrc
