// OpenMP verifier. The pattern space is split by lexicographic index and
// each thread decodes its indices independently; failure witnesses are
// merged and ordered by index, so the report does not depend on
// scheduling.
#include <omp.h>

#include <chrono>

#include "verify_detail.hpp"

namespace mrlrc {

namespace {

using Clock = std::chrono::steady_clock;

struct Failure {
    std::uint64_t idx;
    ErasurePattern pat;
};

void merge_failures(VerifyReport& rep, std::vector<std::vector<Failure>>& per_thread) {
    std::vector<Failure> all;
    for (auto& v : per_thread) {
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
        v.clear();
    }
    std::sort(all.begin(), all.end(), [](const Failure& a, const Failure& b) { return a.idx < b.idx; });
    rep.failure_count = all.size();
    for (std::size_t i = 0; i < all.size() && i < 8; ++i)
        rep.witnesses.push_back(std::move(all[i].pat));
}

int resolve_threads(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

VerifyReport check_mr_parity(const MrLrcCode& code, const VerifyOptions& opts) {
    if (code.params.form != CodeForm::Parity) throw Error("code is not in parity form");
    const LrcParams& p = code.params;
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.mode = opts.mode;
    const int nt = resolve_threads(opts.jobs);
    detail::ParityIndex pi(p);
    std::vector<std::vector<Failure>> fails(nt);

    if (opts.mode == VerifyMode::Exhaustive) {
        if (pi.total == 0) throw Error("empty pattern space");
        if (pi.total > opts.cap) throw CapExceeded("pattern count exceeds cap");
#pragma omp parallel num_threads(nt)
        {
            std::vector<std::vector<int>> T;
            std::vector<int> s_global;
            auto& local = fails[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(pi.total); ++idx) {
                pi.decode(static_cast<std::uint64_t>(idx), T, s_global);
                if (!detail::columns_full_rank(code, detail::pattern_columns(p.r, T, s_global)))
                    local.push_back({static_cast<std::uint64_t>(idx),
                                     detail::to_pattern(p.g, p.r, T, s_global)});
            }
        }
        rep.patterns_checked = pi.total;
    } else {
        rep.seed = opts.seed;
        Rng rng(opts.seed);
        // sample sequentially (the stream is part of the contract), check in parallel
        std::vector<std::vector<std::vector<int>>> Ts(opts.samples);
        std::vector<std::vector<int>> Ss(opts.samples);
        for (std::uint64_t s = 0; s < opts.samples; ++s) detail::sample_parity(p, rng, Ts[s], Ss[s]);
#pragma omp parallel num_threads(nt)
        {
            auto& local = fails[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(opts.samples); ++s) {
                if (!detail::columns_full_rank(code, detail::pattern_columns(p.r, Ts[s], Ss[s])))
                    local.push_back({static_cast<std::uint64_t>(s),
                                     detail::to_pattern(p.g, p.r, Ts[s], Ss[s])});
            }
        }
        rep.patterns_checked = opts.samples;
    }
    merge_failures(rep, fails);
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

VerifyReport check_mr_generator(const MrLrcCode& code, const VerifyOptions& opts) {
    if (code.params.form != CodeForm::Generator) throw Error("code is not in generator form");
    const LrcParams& p = code.params;
    auto t0 = Clock::now();
    VerifyReport rep;
    rep.mode = opts.mode;
    const int nt = resolve_threads(opts.jobs);
    detail::GeneratorIndex gi(p);
    std::vector<std::vector<Failure>> fails(nt);

    if (opts.mode == VerifyMode::Exhaustive) {
        if (gi.total == 0) throw Error("empty selection space");
        if (gi.total > opts.cap) throw CapExceeded("selection count exceeds cap");
#pragma omp parallel num_threads(nt)
        {
            std::vector<std::vector<int>> sel;
            auto& local = fails[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 64)
            for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(gi.total); ++idx) {
                gi.decode(static_cast<std::uint64_t>(idx), sel);
                if (!detail::columns_full_rank(code, detail::selection_columns(p.r, sel))) {
                    ErasurePattern pat;
                    pat.groups = sel;
                    local.push_back({static_cast<std::uint64_t>(idx), std::move(pat)});
                }
            }
        }
        rep.patterns_checked = gi.total;
    } else {
        rep.seed = opts.seed;
        Rng rng(opts.seed);
        std::vector<std::vector<std::vector<int>>> sels(opts.samples);
        for (std::uint64_t s = 0; s < opts.samples; ++s) detail::sample_generator(gi, rng, sels[s]);
#pragma omp parallel num_threads(nt)
        {
            auto& local = fails[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
            for (std::int64_t s = 0; s < static_cast<std::int64_t>(opts.samples); ++s) {
                if (!detail::columns_full_rank(code, detail::selection_columns(p.r, sels[s]))) {
                    ErasurePattern pat;
                    pat.groups = sels[s];
                    local.push_back({static_cast<std::uint64_t>(s), std::move(pat)});
                }
            }
        }
        rep.patterns_checked = opts.samples;
    }
    merge_failures(rep, fails);
    rep.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

}  // namespace mrlrc
