// Internal helpers shared by the serial and OpenMP verifiers: index <->
// pattern decoding for the lexicographic enumeration, sampling, and the
// per-pattern rank test.
#ifndef MRLRC_VERIFY_DETAIL_HPP
#define MRLRC_VERIFY_DETAIL_HPP

#include <algorithm>

#include "mrlrc/verify.hpp"

namespace mrlrc::detail {

// Maximal parity patterns: exactly a per group (T_i) plus exactly h extra
// (S). Enumeration is lexicographic over (T_1..T_g), then over S; index 0
// is the lexicographically first pattern.
struct ParityIndex {
    int r, a, g, h, n;
    std::uint64_t per_group, s_count, total;

    explicit ParityIndex(const LrcParams& p)
        : r(p.r), a(p.a), g(p.g), h(p.h), n(p.n),
          per_group(binom(static_cast<unsigned>(p.r), static_cast<unsigned>(p.a))),
          s_count(binom(static_cast<unsigned>(p.n - p.g * p.a), static_cast<unsigned>(p.h))),
          total(parity_pattern_count(p)) {}

    void decode(std::uint64_t idx, std::vector<std::vector<int>>& T,
                std::vector<int>& s_global) const {
        std::uint64_t s_rank = idx % s_count;
        idx /= s_count;
        T.assign(g, {});
        for (int i = g - 1; i >= 0; --i) {
            T[i] = unrank_subset(static_cast<unsigned>(r), static_cast<unsigned>(a),
                                 idx % per_group);
            idx /= per_group;
        }
        map_extra(T, unrank_subset(static_cast<unsigned>(n - g * a), static_cast<unsigned>(h), s_rank),
                  s_global);
    }

    // maps positions within the complement of the T's to global coordinates
    void map_extra(const std::vector<std::vector<int>>& T, const std::vector<int>& s_pos,
                   std::vector<int>& s_global) const {
        s_global.clear();
        std::vector<int> complement;
        complement.reserve(n - g * a);
        for (int i = 0; i < g; ++i) {
            std::size_t c = 0;
            for (int j = 0; j < r; ++j) {
                if (c < T[i].size() && T[i][c] == j) {
                    ++c;
                    continue;
                }
                complement.push_back(i * r + j);
            }
        }
        for (int pos : s_pos) s_global.push_back(complement[pos]);
    }
};

inline ErasurePattern to_pattern(int g, int r, const std::vector<std::vector<int>>& T,
                                 const std::vector<int>& s_global) {
    ErasurePattern pat;
    pat.groups.assign(g, {});
    for (int i = 0; i < g; ++i) pat.groups[i] = T[i];
    for (int c : s_global) pat.groups[c / r].push_back(c % r);
    for (auto& grp : pat.groups) std::sort(grp.begin(), grp.end());
    return pat;
}

inline bool columns_full_rank(const MrLrcCode& code, std::vector<int> cols) {
    std::sort(cols.begin(), cols.end());
    return ext_rank(ext_columns(code.mat, cols)) == static_cast<int>(cols.size());
}

inline std::vector<int> pattern_columns(int r, const std::vector<std::vector<int>>& T,
                                        const std::vector<int>& s_global) {
    std::vector<int> cols;
    for (std::size_t i = 0; i < T.size(); ++i)
        for (int j : T[i]) cols.push_back(static_cast<int>(i) * r + j);
    cols.insert(cols.end(), s_global.begin(), s_global.end());
    return cols;
}

// Generator-form selections: k columns with at most r-a per block, as a
// list of compositions with per-composition subset products.
struct GeneratorIndex {
    int r, a, g, k;
    std::vector<std::vector<int>> comps;
    std::vector<std::uint64_t> weight, cum;
    std::uint64_t total = 0;

    explicit GeneratorIndex(const LrcParams& p) : r(p.r), a(p.a), g(p.g), k(p.k()) {
        std::vector<int> c(g, 0);
        rec(c, 0, k);
        cum.resize(comps.size() + 1, 0);
        for (std::size_t i = 0; i < comps.size(); ++i) cum[i + 1] = cum[i] + weight[i];
        total = cum.back();
    }

    void rec(std::vector<int>& c, int i, int left) {
        if (i == g) {
            if (left) return;
            std::uint64_t w = 1;
            for (int v : c) w = sat_mul(w, binom(static_cast<unsigned>(r), static_cast<unsigned>(v)));
            comps.push_back(c);
            weight.push_back(w);
            return;
        }
        for (int v = 0; v <= std::min(r - a, left); ++v) {
            c[i] = v;
            rec(c, i + 1, left - v);
        }
        c[i] = 0;
    }

    void decode(std::uint64_t idx, std::vector<std::vector<int>>& sel) const {
        std::size_t ci =
            std::upper_bound(cum.begin(), cum.end(), idx) - cum.begin() - 1;
        std::uint64_t rest = idx - cum[ci];
        const auto& comp = comps[ci];
        sel.assign(g, {});
        for (int i = g - 1; i >= 0; --i) {
            std::uint64_t w = binom(static_cast<unsigned>(r), static_cast<unsigned>(comp[i]));
            sel[i] = unrank_subset(static_cast<unsigned>(r), static_cast<unsigned>(comp[i]),
                                   rest % w);
            rest /= w;
        }
    }
};

inline std::vector<int> selection_columns(int r, const std::vector<std::vector<int>>& sel) {
    std::vector<int> cols;
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (int j : sel[i]) cols.push_back(static_cast<int>(i) * r + j);
    return cols;
}

// Seeded maximal-pattern sample: a random a-subset per group plus a random
// h-subset of the complement.
inline void sample_parity(const LrcParams& p, Rng& rng, std::vector<std::vector<int>>& T,
                          std::vector<int>& s_global) {
    T.assign(p.g, {});
    std::vector<int> idx(p.r);
    for (int i = 0; i < p.g; ++i) {
        for (int j = 0; j < p.r; ++j) idx[j] = j;
        for (int j = 0; j < p.a; ++j)
            std::swap(idx[j], idx[j + rng.below(p.r - j)]);
        T[i].assign(idx.begin(), idx.begin() + p.a);
        std::sort(T[i].begin(), T[i].end());
    }
    std::vector<int> complement;
    for (int i = 0; i < p.g; ++i)
        for (int j = 0; j < p.r; ++j)
            if (std::find(T[i].begin(), T[i].end(), j) == T[i].end())
                complement.push_back(i * p.r + j);
    for (int j = 0; j < p.h; ++j)
        std::swap(complement[j], complement[j + rng.below(complement.size() - j)]);
    s_global.assign(complement.begin(), complement.begin() + p.h);
    std::sort(s_global.begin(), s_global.end());
}

inline void sample_generator(const GeneratorIndex& gi, Rng& rng,
                             std::vector<std::vector<int>>& sel) {
    // composition by weight, then a uniform subset per group
    long double pick = static_cast<long double>(rng.next() >> 11) / 9007199254740992.0L;
    long double acc = 0;
    std::size_t ci = gi.comps.size() - 1;
    for (std::size_t i = 0; i < gi.comps.size(); ++i) {
        acc += static_cast<long double>(gi.weight[i]) / static_cast<long double>(gi.total);
        if (pick < acc) {
            ci = i;
            break;
        }
    }
    const auto& comp = gi.comps[ci];
    sel.assign(gi.g, {});
    std::vector<int> idx(gi.r);
    for (int i = 0; i < gi.g; ++i) {
        for (int j = 0; j < gi.r; ++j) idx[j] = j;
        for (int j = 0; j < comp[i]; ++j)
            std::swap(idx[j], idx[j + rng.below(gi.r - j)]);
        sel[i].assign(idx.begin(), idx.begin() + comp[i]);
        std::sort(sel[i].begin(), sel[i].end());
    }
}

}  // namespace mrlrc::detail

#endif
