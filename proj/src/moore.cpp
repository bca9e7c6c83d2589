#include "mrlrc/moore.hpp"

namespace mrlrc {

ExtMatrix moore_matrix(ExtPtr ctx, const std::vector<ExtElem>& elems, int h) {
    const ExtField& F = *ctx;
    for (const auto& e : elems) F.check_elem(e);
    ExtMatrix m(ctx, h, static_cast<int>(elems.size()));
    std::vector<ExtElem> row = elems;
    for (int k = 0; k < h; ++k) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (k) row[j] = F.frobenius(row[j], 1);
            m.set(k, static_cast<int>(j), row[j]);
        }
    }
    return m;
}

bool moore_det_nonzero(ExtPtr ctx, const std::vector<ExtElem>& elems) {
    if (elems.empty()) throw Error("empty element sequence");
    return ext_invertible(moore_matrix(ctx, elems, static_cast<int>(elems.size())));
}

ExtElem moore_det(ExtPtr ctx, const std::vector<ExtElem>& elems) {
    const ExtField& F = *ctx;
    ExtMatrix m = moore_matrix(ctx, elems, static_cast<int>(elems.size()));
    int n = m.rows;
    ExtElem det = F.one();
    bool negate = false;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!F.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) return F.zero();
        if (piv != col) {
            for (int j = col; j < n; ++j) {
                auto a = m.at(piv, j), b = m.at(col, j);
                std::swap_ranges(a.begin(), a.end(), b.begin());
            }
            negate = !negate;
        }
        ExtElem pivot = m.get(col, col);
        det = F.mul(det, pivot);
        ExtElem inv_p = F.inv(pivot);
        std::vector<std::uint32_t> t(m.d);
        for (int i = col + 1; i < n; ++i) {
            if (F.is_zero(m.at(i, col))) continue;
            ExtElem f = F.mul(m.get(i, col), inv_p);
            for (int j = col; j < n; ++j) {
                F.mul(f, m.at(col, j), t);
                F.sub(m.at(i, j), t, m.at(i, j));
            }
        }
    }
    return negate ? F.neg(det) : det;
}

ExtElem moore_det_product_formula(ExtPtr ctx, const std::vector<ExtElem>& elems) {
    const ExtField& F = *ctx;
    const Fq& k = F.base();
    int h = static_cast<int>(elems.size());
    ExtElem prod = F.one();
    std::vector<std::uint32_t> combo(h, 0);
    ExtElem sum(F.degree()), term(F.degree());
    // direction vectors: last nonzero coordinate fixed to 1
    for (int last = 0; last < h; ++last) {
        std::vector<std::uint32_t> digits(last, 0);
        for (;;) {
            std::fill(sum.begin(), sum.end(), 0);
            for (int i = 0; i < last; ++i) {
                if (!digits[i]) continue;
                F.scalar_mul(digits[i], elems[i], term);
                F.add(sum, term, sum);
            }
            F.add(sum, elems[last], sum);
            prod = F.mul(prod, sum);
            // odometer over the free coordinates
            int pos = 0;
            while (pos < last && ++digits[pos] == k.q()) digits[pos++] = 0;
            if (pos == last) break;
        }
    }
    return prod;
}

bool fq_independent(ExtPtr ctx, const std::vector<ExtElem>& elems, std::uint64_t cap) {
    const ExtField& F = *ctx;
    const Fq& k = F.base();
    for (const auto& e : elems) F.check_elem(e);
    int w = static_cast<int>(elems.size());
    if (sat_pow(k.q(), static_cast<unsigned>(w)) > cap)
        throw CapExceeded("combination count exceeds enumeration cap");
    std::vector<std::uint32_t> digits(w, 0);
    ExtElem sum(F.degree()), term(F.degree());
    for (;;) {
        int pos = 0;
        while (pos < w && ++digits[pos] == k.q()) digits[pos++] = 0;
        if (pos == w) break;  // wrapped to all-zero: done
        std::fill(sum.begin(), sum.end(), 0);
        for (int i = 0; i < w; ++i) {
            if (!digits[i]) continue;
            F.scalar_mul(digits[i], elems[i], term);
            F.add(sum, term, sum);
        }
        if (F.is_zero(sum)) return false;
    }
    return true;
}

int fq_span_rank(ExtPtr ctx, const std::vector<ExtElem>& elems) {
    const ExtField& F = *ctx;
    MatrixFq m(F.base_ptr(), static_cast<int>(F.degree()), static_cast<int>(elems.size()));
    for (std::size_t j = 0; j < elems.size(); ++j) {
        F.check_elem(elems[j]);
        for (unsigned i = 0; i < F.degree(); ++i) m.at(static_cast<int>(i), static_cast<int>(j)) = elems[j][i];
    }
    return fq_rank(std::move(m));
}

}  // namespace mrlrc
