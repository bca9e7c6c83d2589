#include <algorithm>
#include <ostream>

#include "mrlrc/verify.hpp"

namespace mrlrc {

std::vector<int> ErasurePattern::flat(int r) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < groups.size(); ++i)
        for (int j : groups[i]) out.push_back(static_cast<int>(i) * r + j);
    std::sort(out.begin(), out.end());
    return out;
}

bool admissible(const ErasurePattern& pat, const LrcParams& params) {
    if (static_cast<int>(pat.groups.size()) != params.g) throw Error("pattern has wrong group count");
    long long extra = 0, total = 0;
    for (const auto& grp : pat.groups) {
        int prev = -1;
        for (int j : grp) {
            if (j < 0 || j >= params.r) throw Error("pattern index out of range");
            if (j <= prev) throw Error("pattern indices must be strictly increasing");
            prev = j;
        }
        total += static_cast<long long>(grp.size());
        extra += std::max<long long>(0, static_cast<long long>(grp.size()) - params.a);
    }
    return extra <= params.h && total <= static_cast<long long>(params.g) * params.a + params.h;
}

std::uint64_t parity_pattern_count(const LrcParams& p) {
    std::uint64_t per_group = binom(static_cast<unsigned>(p.r), static_cast<unsigned>(p.a));
    std::uint64_t total = 1;
    for (int i = 0; i < p.g; ++i) total = sat_mul(total, per_group);
    return sat_mul(total, binom(static_cast<unsigned>(p.n - p.g * p.a), static_cast<unsigned>(p.h)));
}

namespace {

std::uint64_t composition_count(const LrcParams& p, int group, int left) {
    if (group == p.g) return left == 0 ? 1 : 0;
    int lim = std::min(p.r - p.a, left);
    std::uint64_t total = 0;
    for (int v = 0; v <= lim; ++v) {
        std::uint64_t term =
            sat_mul(binom(static_cast<unsigned>(p.r), static_cast<unsigned>(v)),
                    composition_count(p, group + 1, left - v));
        total = total > UINT64_MAX - term ? UINT64_MAX : total + term;
    }
    return total;
}

}  // namespace

// number of k x k column selections with at most r-a columns per block
std::uint64_t generator_selection_count(const LrcParams& p) {
    return composition_count(p, 0, p.k());
}

ErasurePattern pattern_from_mask(const LrcParams& params, const std::vector<bool>& erased) {
    if (static_cast<int>(erased.size()) != params.n) throw Error("mask has wrong length");
    ErasurePattern pat;
    pat.groups.assign(params.g, {});
    for (int i = 0; i < params.n; ++i)
        if (erased[i]) pat.groups[i / params.r].push_back(i % params.r);
    return pat;
}

ExtMatrix nullspace_encoder(const MrLrcCode& code) {
    if (code.params.form != CodeForm::Parity) throw Error("encoder needs the parity form");
    ExtMatrix ns = ext_nullspace(code.mat);
    if (ns.cols != code.params.k())
        throw Error("parity-check matrix is rank deficient");
    // rows of the encoder are the basis vectors
    ExtMatrix enc(code.ext, ns.cols, ns.rows);
    for (int i = 0; i < ns.rows; ++i)
        for (int j = 0; j < ns.cols; ++j) enc.set(j, i, ns.get(i, j));
    return enc;
}

std::vector<ExtElem> encode(const ExtMatrix& encoder, const std::vector<ExtElem>& message) {
    if (static_cast<int>(message.size()) != encoder.rows) throw Error("message length != k");
    const ExtField& F = *encoder.ctx;
    std::vector<ExtElem> out(encoder.cols, F.zero());
    std::vector<std::uint32_t> t(F.degree());
    for (int i = 0; i < encoder.rows; ++i) {
        F.check_elem(message[i]);
        if (F.is_zero(message[i])) continue;
        for (int j = 0; j < encoder.cols; ++j) {
            F.mul(message[i], encoder.at(i, j), t);
            F.add(out[j], t, out[j]);
        }
    }
    return out;
}

std::vector<ExtElem> encode(const MrLrcCode& code, const std::vector<ExtElem>& message) {
    return encode(nullspace_encoder(code), message);
}

std::vector<ExtElem> decode_erasures(const MrLrcCode& code, const std::vector<ExtElem>& word,
                                     const std::vector<bool>& erased) {
    if (code.params.form != CodeForm::Parity) throw Error("decoding needs the parity form");
    const ExtField& F = *code.ext;
    const int n = code.params.n;
    if (static_cast<int>(word.size()) != n || static_cast<int>(erased.size()) != n)
        throw Error("word length != n");
    ErasurePattern pat = pattern_from_mask(code.params, erased);
    if (!admissible(pat, code.params)) throw Error("erasure pattern is not admissible");

    std::vector<int> unknown;
    for (int j = 0; j < n; ++j)
        if (erased[j]) unknown.push_back(j);
    if (unknown.empty()) return word;

    // syndrome of the known part: H_E x_E = -sum_known H_j x_j
    const int rows = code.mat.rows;
    std::vector<ExtElem> rhs(rows, F.zero());
    std::vector<std::uint32_t> t(F.degree());
    for (int j = 0; j < n; ++j) {
        if (erased[j]) continue;
        F.check_elem(word[j]);
        if (F.is_zero(word[j])) continue;
        for (int i = 0; i < rows; ++i) {
            F.mul(word[j], code.mat.at(i, j), t);
            F.add(rhs[i], t, rhs[i]);
        }
    }
    for (auto& v : rhs) v = F.neg(v);

    ExtMatrix he = ext_columns(code.mat, unknown);
    std::vector<ExtElem> x;
    try {
        x = ext_solve(he, rhs);
    } catch (const Error&) {
        throw Error("erasure system is singular; the code is not maximally recoverable");
    }
    std::vector<ExtElem> out = word;
    for (std::size_t i = 0; i < unknown.size(); ++i) out[unknown[i]] = x[i];
    return out;
}

ReductionCheck moore_reduction_check(const MrLrcCode& code,
                                     const std::vector<std::vector<int>>& T,
                                     const std::vector<std::vector<int>>& S) {
    if (code.params.form != CodeForm::Parity) throw Error("reduction check needs the parity form");
    const LrcParams& p = code.params;
    const ExtField& F = *code.ext;
    if (static_cast<int>(T.size()) != p.g || static_cast<int>(S.size()) != p.g)
        throw Error("selection has wrong group count");

    // full side: rank of the selected (ga+h) columns of H
    std::vector<int> cols;
    for (int i = 0; i < p.g; ++i) {
        if (static_cast<int>(T[i].size()) != p.a) throw Error("each T_i must have size a");
        for (int j : T[i]) cols.push_back(i * p.r + j);
        for (int j : S[i]) cols.push_back(i * p.r + j);
    }
    std::sort(cols.begin(), cols.end());
    int h_total = static_cast<int>(cols.size()) - p.g * p.a;
    if (h_total != p.h) throw Error("selection must pick exactly h extra columns");
    ReductionCheck out{};
    out.full_rank_nonzero = ext_rank(ext_columns(code.mat, cols)) == static_cast<int>(cols.size());

    // reduced side: concatenate L_i - K_i M_i^{-1} N_i and test invertibility
    ExtMatrix reduced(code.ext, p.h, p.h);
    int col_off = 0;
    for (int i = 0; i < p.g; ++i) {
        if (S[i].empty()) continue;
        int si = static_cast<int>(S[i].size());
        ExtMatrix contrib(code.ext, p.h, si);
        // L_i
        for (int row = 0; row < p.h; ++row)
            for (int j = 0; j < si; ++j)
                contrib.set(row, j, code.mat.get(p.g * p.a + row, i * p.r + S[i][j]));
        if (p.a > 0) {
            // P = M_i^{-1} N_i over F_q, then K_i * P over F_ell
            MatrixFq Mi(code.fq, p.a, p.a), Ni(code.fq, p.a, si);
            for (int row = 0; row < p.a; ++row) {
                for (int j = 0; j < p.a; ++j) Mi.at(row, j) = code.inner_mds.at(row, T[i][j]);
                for (int j = 0; j < si; ++j) Ni.at(row, j) = code.inner_mds.at(row, S[i][j]);
            }
            MatrixFq P = fq_mul(fq_inverse(Mi), Ni);
            std::vector<std::uint32_t> t(F.degree());
            for (int row = 0; row < p.h; ++row)
                for (int j = 0; j < si; ++j) {
                    ExtElem acc = F.zero();
                    for (int l = 0; l < p.a; ++l) {
                        auto kil = code.mat.at(p.g * p.a + row, i * p.r + T[i][l]);
                        F.scalar_mul(P.at(l, j), kil, t);
                        F.add(acc, t, acc);
                    }
                    ExtElem v = contrib.get(row, j);
                    F.sub(v, acc, v);
                    contrib.set(row, j, v);
                }
        }
        for (int row = 0; row < p.h; ++row)
            for (int j = 0; j < si; ++j) reduced.set(row, col_off + j, contrib.get(row, j));
        col_off += si;
    }
    out.reduced_invertible = ext_invertible(reduced);
    return out;
}

std::ostream& operator<<(std::ostream& os, const ErasurePattern& p) {
    os << "{";
    for (std::size_t i = 0; i < p.groups.size(); ++i) {
        if (i) os << " ";
        os << i << ":[";
        for (std::size_t j = 0; j < p.groups[i].size(); ++j) {
            if (j) os << ",";
            os << p.groups[i][j];
        }
        os << "]";
    }
    return os << "}";
}

}  // namespace mrlrc
