// Exact arithmetic for the two-level field tower F_p <= F_q <= F_ell.
//
// Base-field elements of F_q (q = p^t) are canonical integers in [0, q):
// the encoding of c_0 + c_1 x + ... + c_{t-1} x^{t-1} is sum c_i p^i.
// Extension elements of F_ell = F_q[y]/(Q) are fixed-length coefficient
// vectors of length deg Q over F_q; their canonical textual form is the
// base-q integer sum c_i q^i printed in decimal.
#ifndef MRLRC_GF_HPP
#define MRLRC_GF_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mrlrc/common.hpp"

namespace mrlrc {

struct Poly;  // poly.hpp

class Fq {
  public:
    // Builds F_{p^t} with the given monic irreducible modulus over F_p
    // (coefficients low-to-high, length t+1). Prefer field_make().
    Fq(std::uint32_t p, unsigned t, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const { return p_; }
    unsigned t() const { return t_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (t_ == 1) return (a + b) % p_;
        return add_digits(a, b);
    }
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables_)
            return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
        return mul_slow(a, b);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Smallest canonical encoding that generates the multiplicative group.
    std::uint32_t generator() const { return generator_; }

    void check_elem(std::uint32_t a) const {
        if (a >= q_) throw Error("element encoding out of range for this field");
    }

  private:
    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t find_generator() const;

    std::uint32_t p_;
    unsigned t_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::uint32_t generator_ = 1;
    bool has_tables_ = false;
    std::vector<std::uint32_t> exp_, log_;
};

using FqPtr = std::shared_ptr<const Fq>;

// Context whose modulus is the lexicographically smallest monic irreducible
// degree-t polynomial over F_p (smallest coefficient encoding sum c_i p^i).
FqPtr field_make(std::uint32_t p, unsigned t, std::uint64_t cap = kDefaultFieldCap);

using ExtElem = std::vector<std::uint32_t>;  // length D, coeffs over F_q

class ExtField {
  public:
    ExtField(FqPtr base, const Poly& Q);  // Q monic irreducible over base

    const Fq& base() const { return *base_; }
    FqPtr base_ptr() const { return base_; }
    unsigned degree() const { return d_; }
    const std::vector<std::uint32_t>& modulus() const { return q_coeffs_; }

    ExtElem zero() const { return ExtElem(d_, 0); }
    ExtElem one() const;
    ExtElem embed(std::uint32_t c) const;
    bool is_zero(std::span<const std::uint32_t> a) const;

    void add(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) const;
    void sub(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) const;
    void neg(std::span<const std::uint32_t> a, std::span<std::uint32_t> out) const;
    void mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
             std::span<std::uint32_t> out) const;
    void scalar_mul(std::uint32_t c, std::span<const std::uint32_t> a,
                    std::span<std::uint32_t> out) const;
    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem inv(const ExtElem& a) const;

    // a^(q^k); x -> x^q is F_q-linear, applied via the cached D x D matrix.
    ExtElem frobenius(const ExtElem& a, unsigned k) const;

    std::string to_decimal(const ExtElem& a) const;
    ExtElem from_decimal(const std::string& s) const;

    void check_elem(const ExtElem& a) const {
        if (a.size() != d_) throw Error("element does not belong to this extension context");
        for (auto c : a) base_->check_elem(c);
    }

  private:
    FqPtr base_;
    unsigned d_;
    std::vector<std::uint32_t> q_coeffs_;  // modulus Q, low-to-high, length d_+1
    std::vector<std::uint32_t> frob_;      // D x D, column j = (x^j)^q mod Q
};

using ExtPtr = std::shared_ptr<const ExtField>;

ExtPtr ext_make(FqPtr base, const Poly& Q);

}  // namespace mrlrc

#endif
