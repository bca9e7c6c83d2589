// Plain single-threaded reference implementation of the MR checks. The
// enumeration here walks subset odometers directly (no index decoding) so
// it cross-checks the chunked OpenMP kernel in tests and benchmarks.
#include <chrono>

#include "verify_detail.hpp"

namespace mrlrc {

namespace {

using Clock = std::chrono::steady_clock;

void note_failure(VerifyReport& rep, ErasurePattern pat) {
    ++rep.failure_count;
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(std::move(pat));
}

// first a-subset of each group
std::vector<std::vector<int>> first_tuple(int g, int a) {
    std::vector<int> first(a);
    for (int j = 0; j < a; ++j) first[j] = j;
    return std::vector<std::vector<int>>(g, first);
}

// lex successor over the tuple (T_1..T_g); the last group varies fastest
bool next_tuple(std::vector<std::vector<int>>& T, int r, int a) {
    for (int i = static_cast<int>(T.size()) - 1; i >= 0; --i) {
        if (next_subset(T[i], r)) return true;
        for (int j = 0; j < a; ++j) T[i][j] = j;
    }
    return false;
}

}  // namespace

VerifyReport check_mr_parity_serial(const MrLrcCode& code, const VerifyOptions& opts) {
    if (code.params.form != CodeForm::Parity) throw Error("code is not in parity form");
    const LrcParams& p = code.params;
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.mode = opts.mode;

    if (opts.mode == VerifyMode::Exhaustive) {
        std::uint64_t total = parity_pattern_count(p);
        if (total == 0) throw Error("empty pattern space");
        if (total > opts.cap) throw CapExceeded("pattern count exceeds cap");
        auto T = first_tuple(p.g, p.a);
        do {
            std::vector<int> complement;
            for (int i = 0; i < p.g; ++i) {
                std::size_t c = 0;
                for (int j = 0; j < p.r; ++j) {
                    if (c < T[i].size() && T[i][c] == j) {
                        ++c;
                        continue;
                    }
                    complement.push_back(i * p.r + j);
                }
            }
            std::vector<int> s_pos(p.h);
            for (int j = 0; j < p.h; ++j) s_pos[j] = j;
            bool more_s = p.h >= 0;
            while (more_s) {
                std::vector<int> s_global;
                for (int pos : s_pos) s_global.push_back(complement[pos]);
                ++rep.patterns_checked;
                if (!detail::columns_full_rank(code, detail::pattern_columns(p.r, T, s_global)))
                    note_failure(rep, detail::to_pattern(p.g, p.r, T, s_global));
                more_s = p.h > 0 && next_subset(s_pos, static_cast<int>(complement.size()));
                if (p.h == 0) break;
            }
        } while (next_tuple(T, p.r, p.a));
    } else {
        rep.seed = opts.seed;
        Rng rng(opts.seed);
        std::vector<std::vector<int>> T;
        std::vector<int> s_global;
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            detail::sample_parity(p, rng, T, s_global);
            ++rep.patterns_checked;
            if (!detail::columns_full_rank(code, detail::pattern_columns(p.r, T, s_global)))
                note_failure(rep, detail::to_pattern(p.g, p.r, T, s_global));
        }
    }
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

VerifyReport check_mr_generator_serial(const MrLrcCode& code, const VerifyOptions& opts) {
    if (code.params.form != CodeForm::Generator) throw Error("code is not in generator form");
    const LrcParams& p = code.params;
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.mode = opts.mode;
    detail::GeneratorIndex gi(p);

    if (opts.mode == VerifyMode::Exhaustive) {
        if (gi.total == 0) throw Error("empty selection space");
        if (gi.total > opts.cap) throw CapExceeded("selection count exceeds cap");
        // walk compositions, then per-group subsets, last group fastest
        for (std::size_t ci = 0; ci < gi.comps.size(); ++ci) {
            const auto& comp = gi.comps[ci];
            std::vector<std::vector<int>> sel(p.g);
            for (int i = 0; i < p.g; ++i) {
                sel[i].resize(comp[i]);
                for (int j = 0; j < comp[i]; ++j) sel[i][j] = j;
            }
            for (;;) {
                ++rep.patterns_checked;
                if (!detail::columns_full_rank(code, detail::selection_columns(p.r, sel))) {
                    ErasurePattern pat;
                    pat.groups = sel;
                    note_failure(rep, std::move(pat));
                }
                int i = p.g - 1;
                while (i >= 0 && !next_subset(sel[i], p.r)) {
                    for (int j = 0; j < comp[i]; ++j) sel[i][j] = j;
                    --i;
                }
                if (i < 0) break;
            }
        }
    } else {
        rep.seed = opts.seed;
        Rng rng(opts.seed);
        std::vector<std::vector<int>> sel;
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            detail::sample_generator(gi, rng, sel);
            ++rep.patterns_checked;
            if (!detail::columns_full_rank(code, detail::selection_columns(p.r, sel))) {
                ErasurePattern pat;
                pat.groups = sel;
                note_failure(rep, std::move(pat));
            }
        }
    }
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

}  // namespace mrlrc
