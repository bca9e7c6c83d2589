#include "mrlrc/innercodes.hpp"

#include <omp.h>

#include <algorithm>

#include "mrlrc/poly.hpp"

namespace mrlrc {

MatrixFq vandermonde_mds(FqPtr ctx, int r, int a) {
    const Fq& k = *ctx;
    if (a < 0 || a > r) throw Error("need 0 <= a <= r");
    if (r > static_cast<int>(k.q()) + 1) throw Error("MDS generator needs r <= q+1");
    MatrixFq m(ctx, a, r);
    int finite = std::min<int>(r, k.q());
    std::uint32_t x = 0;
    for (int j = 0; j < finite; ++j) {
        std::uint32_t v = 1;
        for (int i = 0; i < a; ++i) {
            m.at(i, j) = v;
            v = k.mul(v, x);
        }
        x = (j == 0) ? 1 : k.mul(x, k.generator());
    }
    if (r == static_cast<int>(k.q()) + 1 && a > 0) m.at(a - 1, r - 1) = 1;
    return m;
}

IndependentFamily identity_family(FqPtr ctx, int m, int r) {
    if (m < r) throw Error("identity family needs m >= r");
    IndependentFamily fam;
    fam.ctx = ctx;
    fam.m = m;
    fam.r = r;
    fam.s = r;
    fam.m_used = r;
    fam.cols = MatrixFq(ctx, m, r);
    for (int j = 0; j < r; ++j) fam.cols.at(j, j) = 1;
    fam.route = "identity";
    return fam;
}

IndependentFamily mds_family(FqPtr ctx, int m, int r) {
    if (m > r) throw Error("mds family needs m <= r");
    IndependentFamily fam;
    fam.ctx = ctx;
    fam.m = m;
    fam.r = r;
    fam.s = m;
    fam.m_used = m;
    fam.cols = vandermonde_mds(ctx, r, m);
    fam.route = "mds";
    return fam;
}

int bch_required_m(int r, int d) {
    int t = 0;
    while ((1 << t) < r) ++t;
    return (d - 1) / 2 * t + 1;
}

IndependentFamily bch_family(int r, int d) {
    if (r < 2 || d < 2) throw Error("bch family needs r >= 2, d >= 2");
    int m = bch_required_m(r, d);
    if (m >= r) throw Error("bch family parameters force m >= r; use the identity family");
    FqPtr f2 = field_make(2, 1);

    IndependentFamily fam;
    fam.ctx = f2;
    fam.m = m;
    fam.r = r;
    fam.s = d - 1;
    fam.cols = MatrixFq(f2, m, r);
    fam.route = "bch";

    if (d == 2) {
        // overall parity only
        fam.m_used = 1;
        for (int j = 0; j < r; ++j) fam.cols.at(0, j) = 1;
        return fam;
    }

    int t = 0;
    while ((1 << t) < r) ++t;
    int n1 = (1 << t) - 1;  // BCH length before extension
    FqPtr gft = field_make(2, t);
    const Fq& K = *gft;
    std::uint32_t alpha = K.generator();

    // generator polynomial: lcm of minimal polynomials of alpha^1..alpha^(d-2),
    // via cyclotomic cosets mod 2^t - 1
    std::vector<bool> covered(n1, false);
    Poly gen = Poly::constant(1);
    Fq f2k(2, 1, {0, 1});
    for (int j = 1; j <= d - 2; ++j) {
        int e = j % n1;
        if (e == 0 || covered[e]) continue;
        // minimal polynomial of alpha^e: product over the 2-power coset of e
        Poly mp = Poly::constant(1);
        int cur = e;
        do {
            covered[cur] = true;
            Poly lin;
            lin.c = {K.pow(alpha, cur), 1};  // y + alpha^cur (char 2)
            mp = poly::mul(K, mp, lin);
            cur = (cur * 2) % n1;
        } while (cur != e);
        for (auto c : mp.c)
            if (c > 1) throw Error("minimal polynomial has a coefficient outside F_2");
        gen = poly::mul(f2k, gen, mp);
    }

    int k1 = n1 - gen.deg();
    // cyclic generator matrix, extended by overall parity
    MatrixFq gmat(f2, k1, n1 + 1);
    for (int i = 0; i < k1; ++i) {
        std::uint32_t parity = 0;
        for (int j = 0; j <= gen.deg(); ++j) {
            gmat.at(i, i + j) = gen.c[j];
            parity ^= gen.c[j];
        }
        gmat.at(i, n1) = parity;
    }
    MatrixFq ns = fq_nullspace(gmat);  // (n1+1) x m', columns span the dual
    int m_used = ns.cols;
    if (m_used > m) throw Error("bch redundancy exceeds the expected bound");
    fam.m_used = m_used;
    // parity-check columns of the extended code, punctured to the first r
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < m_used; ++i) fam.cols.at(i, j) = ns.at(j, i);
    return fam;
}

bool verify_family(const IndependentFamily& fam, std::uint64_t cap) {
    int s = std::min(fam.s, fam.r);
    if (s <= 0) return true;
    std::uint64_t total = binom(fam.r, s);
    if (total > cap) throw CapExceeded("subset count exceeds enumeration cap");
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t rank = 0; rank < static_cast<std::int64_t>(total); ++rank) {
        auto subset = unrank_subset(fam.r, s, static_cast<std::uint64_t>(rank));
        MatrixFq sel = fq_columns(fam.cols, subset);
        if (fq_rank(std::move(sel)) != s) ok = false;
    }
    return ok;
}

namespace {

struct ScaledRows {
    // scaled[i*q + c] holds c * row_i so the DFS only adds precomputed rows
    std::vector<std::uint32_t> data;
    int r;
    std::uint32_t q;
    const std::uint32_t* row(int i, std::uint32_t c) const { return &data[(std::size_t(i) * q + c) * r]; }
};

// depth-first over message digits with partial row sums kept per depth
void min_weight_dfs(const Fq& k, const ScaledRows& sc, int depth, int kk, bool nonzero,
                    std::vector<std::vector<std::uint32_t>>& scratch, int& best) {
    const auto& acc = scratch[depth];
    if (depth == kk) {
        if (nonzero) {
            int w = 0;
            for (int j = 0; j < sc.r; ++j) w += acc[j] != 0;
            if (w < best) best = w;
        }
        return;
    }
    auto& next = scratch[depth + 1];
    std::copy(acc.begin(), acc.end(), next.begin());
    min_weight_dfs(k, sc, depth + 1, kk, nonzero, scratch, best);
    for (std::uint32_t c = 1; c < sc.q; ++c) {
        const std::uint32_t* row = sc.row(depth, c);
        for (int j = 0; j < sc.r; ++j) next[j] = k.add(acc[j], row[j]);
        min_weight_dfs(k, sc, depth + 1, kk, true, scratch, best);
    }
}

}  // namespace

int brute_min_distance(const MatrixFq& generator, std::uint64_t cap) {
    const Fq& k = *generator.ctx;
    const int kk = generator.rows, r = generator.cols;
    if (kk < 1) throw Error("generator has no rows");
    if (sat_pow(k.q(), kk) > cap) throw CapExceeded("codeword count exceeds enumeration cap");
    const std::uint32_t q = k.q();

    ScaledRows sc{std::vector<std::uint32_t>(std::size_t(kk) * q * r, 0), r, q};
    for (int i = 0; i < kk; ++i)
        for (std::uint32_t c = 1; c < q; ++c) {
            std::uint32_t* row = &sc.data[(std::size_t(i) * q + c) * r];
            for (int j = 0; j < r; ++j) row[j] = k.mul(c, generator.at(i, j));
        }

    int best = r + 1;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (std::int64_t c0 = 0; c0 < static_cast<std::int64_t>(q); ++c0) {
        std::vector<std::vector<std::uint32_t>> scratch(kk + 1, std::vector<std::uint32_t>(r, 0));
        if (c0) {
            const std::uint32_t* row = sc.row(0, static_cast<std::uint32_t>(c0));
            std::copy(row, row + r, scratch[1].begin());
        }
        int local = r + 1;
        min_weight_dfs(k, sc, 1, kk, c0 != 0, scratch, local);
        best = std::min(best, local);
    }
    if (best > r) return 0;  // no nonzero codeword (degenerate generator)
    return best;
}

}  // namespace mrlrc
