#include "mrlrc/gf.hpp"

#include <algorithm>

#include "mrlrc/poly.hpp"

namespace mrlrc {

namespace {

constexpr std::uint32_t kTableCap = 1u << 16;  // log/antilog tables up to this q

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(static_cast<std::uint32_t>(d));
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
    return out;
}

}  // namespace

Fq::Fq(std::uint32_t p, unsigned t, std::vector<std::uint32_t> modulus)
    : p_(p), t_(t), modulus_(std::move(modulus)) {
    if (!is_prime_u64(p_)) throw Error("characteristic is not prime");
    if (t_ < 1) throw Error("extension degree must be >= 1");
    std::uint64_t q = sat_pow(p_, t_);
    if (q > (std::uint64_t(1) << 30)) throw Error("field too large");
    q_ = static_cast<std::uint32_t>(q);
    if (modulus_.size() != t_ + 1 || modulus_.back() != 1)
        throw Error("modulus must be monic of degree t");
    for (auto c : modulus_)
        if (c >= p_) throw Error("modulus coefficient out of range");
    if (t_ > 1) {
        Fq fp(p_, 1, {0, 1});
        if (!poly::is_irreducible(fp, Poly::from_coeffs(modulus_)))
            throw Error("modulus is reducible over the prime field");
    }
    generator_ = find_generator();
    if (q_ <= kTableCap && q_ > 2) {
        exp_.resize(q_ - 1);
        log_.assign(q_, 0);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = v;
            log_[v] = i;
            v = mul_slow(v, generator_);
        }
        if (v != 1) throw Error("generator order mismatch while building tables");
        has_tables_ = true;
    }
}

std::uint32_t Fq::add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0, shift = 1;
    for (unsigned i = 0; i < t_; ++i) {
        out += (a % p_ + b % p_) % p_ * shift;
        a /= p_;
        b /= p_;
        shift *= p_;
    }
    return out;
}

std::uint32_t Fq::neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    if (t_ == 1) return a ? p_ - a : 0;
    std::uint32_t out = 0, shift = 1;
    for (unsigned i = 0; i < t_; ++i) {
        std::uint32_t d = a % p_;
        out += (d ? p_ - d : 0) * shift;
        a /= p_;
        shift *= p_;
    }
    return out;
}

std::uint32_t Fq::mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (t_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    // schoolbook product of base-p digit vectors, then reduce by the modulus
    std::uint32_t da[64], db[64];
    std::uint64_t prod[128] = {0};
    for (unsigned i = 0; i < t_; ++i, a /= p_) da[i] = a % p_;
    for (unsigned i = 0; i < t_; ++i, b /= p_) db[i] = b % p_;
    for (unsigned i = 0; i < t_; ++i)
        if (da[i])
            for (unsigned j = 0; j < t_; ++j) prod[i + j] += std::uint64_t(da[i]) * db[j];
    for (unsigned i = 0; i < 2 * t_ - 1; ++i) prod[i] %= p_;
    for (unsigned i = 2 * t_ - 2; i >= t_; --i) {
        std::uint64_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (unsigned j = 0; j < t_; ++j) {
                std::uint64_t s = prod[i - t_ + j] + c * (p_ - modulus_[j]) % p_;
                prod[i - t_ + j] = s % p_;
            }
        }
        if (i == t_) break;
    }
    std::uint32_t out = 0, shift = 1;
    for (unsigned i = 0; i < t_; ++i) {
        out += static_cast<std::uint32_t>(prod[i]) * shift;
        shift *= p_;
    }
    return out;
}

std::uint32_t Fq::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Fq::inv(std::uint32_t a) const {
    if (a == 0) throw Error("inversion of zero");
    check_elem(a);
    if (has_tables_) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    // Fermat; only used above the table cap
    std::uint32_t r = 1, b = a;
    std::uint64_t e = q_ - 2;
    while (e) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t Fq::find_generator() const {
    if (q_ == 2) return 1;
    auto factors = prime_factors(q_ - 1);
    for (std::uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (auto f : factors) {
            // g^((q-1)/f) via slow path (tables not built yet)
            std::uint32_t r = 1, b = g;
            std::uint64_t e = (q_ - 1) / f;
            while (e) {
                if (e & 1) r = mul_slow(r, b);
                b = mul_slow(b, b);
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("no multiplicative generator found");
}

FqPtr field_make(std::uint32_t p, unsigned t, std::uint64_t cap) {
    if (!is_prime_u64(p)) throw Error("p is not prime");
    if (t < 1) throw Error("t must be >= 1");
    if (sat_pow(p, t) > cap) throw Error("field cardinality exceeds cap");
    if (t == 1) return std::make_shared<Fq>(p, 1, std::vector<std::uint32_t>{0, 1});
    Fq fp(p, 1, {0, 1});
    Poly mod = poly::find_irreducible(fp, t);
    return std::make_shared<Fq>(p, t, mod.c);
}

ExtField::ExtField(FqPtr base, const Poly& Q) : base_(std::move(base)) {
    if (!base_) throw Error("null base field");
    if (Q.is_zero() || !poly::is_monic(Q)) throw Error("Q must be monic");
    if (Q.deg() < 1) throw Error("Q must have degree >= 1");
    if (!poly::is_irreducible(*base_, Q)) throw Error("Q is reducible over the base field");
    d_ = static_cast<unsigned>(Q.deg());
    q_coeffs_ = Q.c;
    // column j of the Frobenius matrix is (x^j)^q mod Q = (x^q)^j mod Q
    Poly xq = poly::powmod(*base_, Poly::x(), base_->q(), Q);
    frob_.assign(std::size_t(d_) * d_, 0);
    Poly cur = Poly::constant(1);
    for (unsigned j = 0; j < d_; ++j) {
        for (unsigned i = 0; i < cur.c.size(); ++i) frob_[std::size_t(i) * d_ + j] = cur.c[i];
        cur = poly::mod(*base_, poly::mul(*base_, cur, xq), Poly::from_coeffs(q_coeffs_));
    }
}

ExtElem ExtField::one() const {
    ExtElem e(d_, 0);
    e[0] = 1;
    return e;
}

ExtElem ExtField::embed(std::uint32_t c) const {
    base_->check_elem(c);
    ExtElem e(d_, 0);
    e[0] = c;
    return e;
}

bool ExtField::is_zero(std::span<const std::uint32_t> a) const {
    for (auto c : a)
        if (c) return false;
    return true;
}

void ExtField::add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                   std::span<std::uint32_t> out) const {
    for (unsigned i = 0; i < d_; ++i) out[i] = base_->add(a[i], b[i]);
}

void ExtField::sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                   std::span<std::uint32_t> out) const {
    for (unsigned i = 0; i < d_; ++i) out[i] = base_->sub(a[i], b[i]);
}

void ExtField::neg(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const {
    for (unsigned i = 0; i < d_; ++i) out[i] = base_->neg(a[i]);
}

void ExtField::scalar_mul(std::uint32_t c, std::span<const std::uint32_t> a,
                          std::span<std::uint32_t> out) const {
    for (unsigned i = 0; i < d_; ++i) out[i] = base_->mul(c, a[i]);
}

void ExtField::mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                   std::span<std::uint32_t> out) const {
    const Fq& k = *base_;
    std::uint32_t prod[256] = {0};
    if (2 * d_ - 1 > 256) throw Error("extension degree too large");
    for (unsigned i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d_; ++j)
            if (b[j]) prod[i + j] = k.add(prod[i + j], k.mul(a[i], b[j]));
    }
    for (unsigned i = 2 * d_ - 2; i >= d_; --i) {
        std::uint32_t c = prod[i];
        if (c) {
            prod[i] = 0;
            for (unsigned j = 0; j < d_; ++j)
                prod[i - d_ + j] = k.sub(prod[i - d_ + j], k.mul(c, q_coeffs_[j]));
        }
        if (i == d_) break;
    }
    for (unsigned i = 0; i < d_; ++i) out[i] = prod[i];
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
    check_elem(a);
    check_elem(b);
    ExtElem out(d_);
    add(std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b),
        std::span<std::uint32_t>(out));
    return out;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
    check_elem(a);
    check_elem(b);
    ExtElem out(d_);
    mul(std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b),
        std::span<std::uint32_t>(out));
    return out;
}

ExtElem ExtField::neg(const ExtElem& a) const {
    check_elem(a);
    ExtElem out(d_);
    neg(std::span<const std::uint32_t>(a), std::span<std::uint32_t>(out));
    return out;
}

ExtElem ExtField::inv(const ExtElem& a) const {
    check_elem(a);
    if (is_zero(a)) throw Error("inversion of zero");
    Poly pa = Poly::from_coeffs(a);
    Poly h = poly::mod_inverse(*base_, pa, Poly::from_coeffs(q_coeffs_));
    ExtElem out(d_, 0);
    for (unsigned i = 0; i < h.c.size(); ++i) out[i] = h.c[i];
    return out;
}

ExtElem ExtField::frobenius(const ExtElem& a, unsigned k) const {
    check_elem(a);
    ExtElem cur = a, nxt(d_);
    for (unsigned rep = 0; rep < k; ++rep) {
        for (unsigned i = 0; i < d_; ++i) {
            std::uint32_t s = 0;
            const std::uint32_t* row = &frob_[std::size_t(i) * d_];
            for (unsigned j = 0; j < d_; ++j)
                if (cur[j]) s = base_->add(s, base_->mul(row[j], cur[j]));
            nxt[i] = s;
        }
        cur.swap(nxt);
    }
    return cur;
}

std::string ExtField::to_decimal(const ExtElem& a) const {
    check_elem(a);
    BigDec n;
    for (unsigned i = d_; i-- > 0;) n.mul_add(base_->q(), a[i]);
    return n.str();
}

ExtElem ExtField::from_decimal(const std::string& s) const {
    BigDec n = BigDec::parse(s);
    ExtElem out(d_, 0);
    for (unsigned i = 0; i < d_; ++i) out[i] = n.divmod(base_->q());
    if (!n.is_zero()) throw Error("encoded value out of range for this extension");
    return out;
}

ExtPtr ext_make(FqPtr base, const Poly& Q) { return std::make_shared<ExtField>(std::move(base), Q); }

}  // namespace mrlrc
