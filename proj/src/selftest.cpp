#include "mrlrc/selftest.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <vector>

#include "mrlrc/bounds.hpp"
#include "mrlrc/innercodes.hpp"
#include "mrlrc/moore.hpp"
#include "verify_detail.hpp"

namespace mrlrc {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

void report(std::ostream& os, int num, const std::string& name, const Outcome& out, int& failed,
            double secs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    os << (out.pass ? "[PASS]" : "[FAIL]") << " criterion " << num << ": " << name << " — "
       << out.detail << " (" << buf << ")\n";
    if (!out.pass) ++failed;
}

struct Instance {
    int n, r, h, a;
};

// ---- criterion 1 & 2: exhaustive MR verification of constructed codes ----

Outcome exhaustive_parity(const std::vector<MrLrcCode>& codes, const SelftestOptions& o) {
    std::ostringstream d;
    bool ok = true;
    for (const auto& code : codes) {
        VerifyOptions vo;
        vo.cap = o.pattern_cap;
        vo.jobs = o.jobs;
        VerifyReport rep = check_mr_parity(code, vo);
        const LrcParams& p = code.params;
        d << "(" << p.n << "," << p.r << "," << p.h << "," << p.a << ")@q=" << p.q
          << ",m=" << p.m << ":" << rep.patterns_checked << (rep.pass() ? " ok; " : " FAIL; ");
        ok = ok && rep.pass();
    }
    return {ok, d.str()};
}

// ---- criterion 8 oracle: irreducibility by trial division ----

bool irreducible_by_trial_division(const Fq& k, const Poly& f) {
    int d = f.deg();
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e) {
        std::vector<std::uint32_t> digits(e, 0);
        do {
            Poly div = poly::monic_from_digits(static_cast<unsigned>(e), digits);
            if (poly::mod(k, f, div).is_zero()) return false;
        } while (poly::next_digits(k, digits));
    }
    return true;
}

std::uint64_t brute_count_irreducible(const Fq& k, unsigned d) {
    std::uint64_t count = 0;
    std::vector<std::uint32_t> digits(d, 0);
    do {
        if (irreducible_by_trial_division(k, poly::monic_from_digits(d, digits))) ++count;
    } while (poly::next_digits(k, digits));
    return count;
}

}  // namespace

int run_acceptance(std::ostream& os, const SelftestOptions& opts) {
    int failed = 0;
    auto timed = [&](int num, const std::string& name, auto&& fn) {
        auto t0 = Clock::now();
        Outcome out = fn();
        report(os, num, name, out, failed, std::chrono::duration<double>(Clock::now() - t0).count());
    };

    // built once, reused by criteria 1, 3, 7, 9
    std::vector<MrLrcCode> parity_codes;
    for (Instance inst : std::vector<Instance>{{8, 4, 2, 1}, {9, 3, 2, 1}, {8, 4, 1, 2},
                                               {12, 4, 2, 1}, {12, 3, 3, 1}})
        parity_codes.push_back(
            build_parity(plan(inst.n, inst.r, inst.h, inst.a, Route::Auto, CodeForm::Parity)));

    std::vector<MrLrcCode> generator_codes;
    generator_codes.push_back(
        build_generator(plan(8, 4, 1, 1, Route::Manual, CodeForm::Generator, 2, 4)));
    generator_codes.push_back(build_generator(plan(6, 3, 1, 1, Route::Auto, CodeForm::Generator)));

    timed(1, "exhaustive MR verification, parity-check constructions",
          [&]() -> Outcome { return exhaustive_parity(parity_codes, opts); });

    timed(2, "exhaustive block-invertibility verification, generator constructions",
          [&]() -> Outcome {
              std::ostringstream d;
              bool ok = true;
              for (const auto& code : generator_codes) {
                  VerifyOptions vo;
                  vo.cap = opts.pattern_cap;
                  vo.jobs = opts.jobs;
                  VerifyReport rep = check_mr_generator(code, vo);
                  const LrcParams& p = code.params;
                  d << "(" << p.n << "," << p.r << "," << p.h << "," << p.a << ")@q=" << p.q
                    << ",m=" << p.m << ":" << rep.patterns_checked
                    << (rep.pass() ? " ok; " : " FAIL; ");
                  ok = ok && rep.pass();
              }
              return {ok, d.str()};
          });

    timed(3, "exact field sizes match the Q-degree formula", [&]() -> Outcome {
        std::ostringstream d;
        bool ok = true;
        for (const auto& code : parity_codes) {
            const LrcParams& p = code.params;
            unsigned expect = p.m * static_cast<unsigned>(std::min(p.h, p.g));
            if (code.ext->degree() != expect) ok = false;
            d << "q^" << code.ext->degree() << (code.ext->degree() == expect ? " ok; " : " MISMATCH; ");
        }
        for (const auto& code : generator_codes) {
            const LrcParams& p = code.params;
            unsigned expect = p.m * static_cast<unsigned>(std::min(p.k(), p.g));
            if (code.ext->degree() != expect) ok = false;
            d << "q^" << code.ext->degree() << (code.ext->degree() == expect ? " ok; " : " MISMATCH; ");
        }
        return {ok, d.str()};
    });

    timed(4, "Moore determinant nonzero iff base-field independent, 500 tuples per tower",
          [&]() -> Outcome {
              struct Tower {
                  std::uint32_t p;
                  unsigned t, d;
              };
              std::uint64_t checked = 0, agree = 0;
              for (Tower tw : std::vector<Tower>{{2, 1, 3}, {2, 1, 4}, {2, 2, 2}}) {
                  FqPtr base = field_make(tw.p, tw.t);
                  ExtPtr ext = ext_make(base, poly::find_irreducible(*base, tw.d));
                  Rng rng(0x4d4f4f52u + tw.d + 16 * tw.t);
                  for (int trial = 0; trial < 500; ++trial) {
                      int w = 1 + static_cast<int>(rng.below(tw.d));
                      std::vector<ExtElem> elems(w, ext->zero());
                      for (auto& e : elems)
                          for (auto& c : e) c = static_cast<std::uint32_t>(rng.below(base->q()));
                      ++checked;
                      if (moore_det_nonzero(ext, elems) == fq_independent(ext, elems)) ++agree;
                  }
              }
              std::ostringstream d;
              d << agree << "/" << checked << " agree";
              return {agree == checked, d.str()};
          });

    timed(5, "binary family oracle: strength, distance and redundancy", [&]() -> Outcome {
        std::ostringstream d;
        bool ok = true;
        int cases = 0;
        for (int r : {4, 8, 16})
            for (int dd = 2; dd <= 6; ++dd) {
                if (bch_required_m(r, dd) >= r) continue;  // construction precondition
                IndependentFamily fam = bch_family(r, dd);
                bool family_ok = verify_family(fam, opts.pattern_cap);
                bool bound_ok = fam.m_used <= bch_required_m(r, dd);
                // the punctured code with these parity-check columns
                MatrixFq h(fam.ctx, fam.m_used, r);
                for (int i = 0; i < fam.m_used; ++i)
                    for (int j = 0; j < r; ++j) h.at(i, j) = fam.cols.at(i, j);
                MatrixFq ns = fq_nullspace(h);
                MatrixFq gen(fam.ctx, ns.cols, r);
                for (int i = 0; i < ns.cols; ++i)
                    for (int j = 0; j < r; ++j) gen.at(i, j) = ns.at(j, i);
                int dist = brute_min_distance(gen, opts.codeword_cap);
                bool dist_ok = dist >= dd;
                if (!(family_ok && bound_ok && dist_ok)) {
                    ok = false;
                    d << "r=" << r << ",d=" << dd << " FAIL; ";
                }
                ++cases;
            }
        d << cases << " cases";
        return {ok, d.str()};
    });

    timed(6, "MDS generators have distance exactly r-a+1", [&]() -> Outcome {
        bool ok = true;
        int cases = 0, skipped = 0;
        std::ostringstream d;
        for (unsigned t : {1u, 2u, 3u}) {
            FqPtr ctx = field_make(2, t);
            const std::uint32_t q = ctx->q();
            for (int r = 1; r <= static_cast<int>(q) + 1; ++r)
                for (int a = 1; a <= r; ++a) {
                    if (sat_pow(q, static_cast<unsigned>(a)) > opts.codeword_cap) {
                        ++skipped;
                        continue;
                    }
                    int dist = brute_min_distance(vandermonde_mds(ctx, r, a), opts.codeword_cap);
                    if (dist != r - a + 1) {
                        ok = false;
                        d << "q=" << q << ",r=" << r << ",a=" << a << " got d=" << dist << "; ";
                    }
                    ++cases;
                }
        }
        d << cases << " cases";
        if (skipped) d << ", " << skipped << " beyond cap";
        return {ok, d.str()};
    });

    timed(7, "decode round-trip over 1000 seeded message/pattern pairs", [&]() -> Outcome {
        const MrLrcCode& code = parity_codes[0];  // the (8,4,2,1) instance
        const LrcParams& p = code.params;
        ExtMatrix enc = nullspace_encoder(code);
        Rng rng(0xDEC0DEull);
        int failures = 0;
        std::vector<std::vector<int>> T;
        std::vector<int> s_global;
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<ExtElem> msg(p.k(), code.ext->zero());
            for (auto& e : msg)
                for (auto& c : e) c = static_cast<std::uint32_t>(rng.below(p.q));
            std::vector<ExtElem> word = encode(enc, msg);
            detail::sample_parity(p, rng, T, s_global);
            std::vector<bool> erased(p.n, false);
            for (int i = 0; i < p.g; ++i)
                for (int j : T[i]) erased[i * p.r + j] = true;
            for (int cidx : s_global) erased[cidx] = true;
            std::vector<ExtElem> damaged = word;
            for (int i = 0; i < p.n; ++i)
                if (erased[i]) damaged[i] = code.ext->zero();
            std::vector<ExtElem> fixed = decode_erasures(code, damaged, erased);
            if (fixed != word) ++failures;
        }
        std::ostringstream d;
        d << failures << " failures in 1000 trials";
        return {failures == 0, d.str()};
    });

    timed(8, "irreducible counting vs brute force and the degree identity", [&]() -> Outcome {
        bool ok = true;
        std::ostringstream d;
        for (std::uint32_t qp : {2u, 3u, 4u}) {
            FqPtr ctx = qp == 4 ? field_make(2, 2) : field_make(qp, 1);
            for (unsigned deg = 1; deg <= 6; ++deg)
                if (poly::count_irreducible(*ctx, deg) != brute_count_irreducible(*ctx, deg)) {
                    ok = false;
                    d << "count mismatch q=" << qp << ",d=" << deg << "; ";
                }
            for (unsigned mm = 1; mm <= 8; ++mm) {
                std::uint64_t sum = 0;
                for (unsigned deg = 1; deg <= mm; ++deg)
                    if (mm % deg == 0) sum += deg * poly::count_irreducible(*ctx, deg);
                if (sum != sat_pow(qp, mm)) {
                    ok = false;
                    d << "identity fails q=" << qp << ",m=" << mm << "; ";
                }
            }
        }
        d << "q in {2,3,4}, d <= 6, m <= 8";
        return {ok, d.str()};
    });

    timed(9, "block reduction: full determinant iff reduced Moore block invertible",
          [&]() -> Outcome {
              const MrLrcCode& code = parity_codes[0];
              const LrcParams& p = code.params;
              Rng rng(0x524544u);
              int agree = 0;
              std::vector<std::vector<int>> T;
              std::vector<int> s_global;
              for (int trial = 0; trial < 50; ++trial) {
                  detail::sample_parity(p, rng, T, s_global);
                  std::vector<std::vector<int>> S(p.g);
                  for (int cidx : s_global) S[cidx / p.r].push_back(cidx % p.r);
                  ReductionCheck rc = moore_reduction_check(code, T, S);
                  if (rc.full_rank_nonzero == rc.reduced_invertible) ++agree;
              }
              std::ostringstream d;
              d << agree << "/50 agree";
              return {agree == 50, d.str()};
          });

    timed(10, "field-size comparison claims at sampled parameter points", [&]() -> Outcome {
        ComparisonReport rep = check_comparison_claims();
        bool ok = rep.all_ok();
        std::ostringstream d;
        for (const auto& c : rep.claims) {
            if (c.points < 20) ok = false;
            d << c.holds << "/" << c.points << "; ";
        }
        if (!ok) d << "\n" << render_comparison_report(rep);
        return {ok, d.str()};
    });

    os << (failed == 0 ? "acceptance: all criteria passed\n"
                       : "acceptance: " + std::to_string(failed) + " criteria FAILED\n");
    return failed;
}

}  // namespace mrlrc
