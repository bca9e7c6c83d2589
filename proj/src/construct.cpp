#include "mrlrc/construct.hpp"

#include <cmath>

namespace mrlrc {

std::string route_name(Route r) {
    switch (r) {
        case Route::Manual: return "manual";
        case Route::Auto: return "auto";
        case Route::T33: return "T3.3";
        case Route::T35: return "T3.5";
        case Route::T39: return "T3.9";
        case Route::T310: return "T3.10";
        case Route::T312: return "T3.12";
        case Route::T313: return "T3.13";
    }
    throw Error("bad route");
}

Route route_from_name(const std::string& s) {
    for (Route r : {Route::Manual, Route::Auto, Route::T33, Route::T35, Route::T39,
                    Route::T310, Route::T312, Route::T313})
        if (route_name(r) == s) return r;
    throw Error("unknown route: " + s);
}

std::string form_name(CodeForm f) { return f == CodeForm::Parity ? "parity" : "generator"; }

CodeForm form_from_name(const std::string& s) {
    if (s == "parity") return CodeForm::Parity;
    if (s == "generator") return CodeForm::Generator;
    throw Error("unknown form: " + s);
}

int required_strength(const LrcParams& p) {
    return p.form == CodeForm::Parity ? std::min(p.h + p.a, p.r) : p.r - p.a;
}

void LrcParams::validate() const {
    if (r < 1 || g < 1 || n != g * r) throw Error("need n = g*r with g >= 1, r >= 1");
    if (a < 0 || h < 0) throw Error("a and h must be nonnegative");
    if (a > r) throw Error("need a <= r");
    if (g * a + h >= n) throw Error("need g*a + h < n");
    std::uint64_t p;
    unsigned t;
    if (!factor_prime_power(q, p, t)) throw Error("q must be a prime power");
    if (m < 1) throw Error("need m >= 1");
    if (form == CodeForm::Parity && r > static_cast<int>(q) + 1)
        throw Error("parity form needs r <= q+1 for the local MDS rows");
    // coprime-polynomial supply condition of the rational construction
    if (sat_pow(q, m) < sat_mul(m, static_cast<std::uint64_t>(g)))
        throw Error("supply condition q^m >= m*g fails");
    if (!family_route_available(q, m, r, required_strength(*this)))
        throw Error("no inner family route available for these (q, m, r)");
    if (form == CodeForm::Generator && k() < 1) throw Error("generator form needs k >= 1");
}

bool family_route_available(std::uint32_t q, int m, int r, int s) {
    if (s <= 0) return true;
    if (m >= r) return true;                                    // identity
    if (r <= static_cast<int>(q) + 1 && s <= m) return true;    // mds columns
    if (q == 2 && r >= 2 && bch_required_m(r, s + 1) <= m && bch_required_m(r, s + 1) < r)
        return true;                                            // binary bch
    return false;
}

IndependentFamily family_dispatch(FqPtr ctx, int m, int r, int s) {
    const std::uint32_t q = ctx->q();
    if (m >= r) return identity_family(ctx, m, r);
    if (s <= 0) {  // no strength required (no heavy parities); any columns do
        IndependentFamily fam;
        fam.ctx = ctx;
        fam.m = m;
        fam.r = r;
        fam.s = 0;
        fam.m_used = 0;
        fam.cols = MatrixFq(ctx, m, r);
        fam.route = "trivial";
        return fam;
    }
    if (r <= static_cast<int>(q) + 1 && s <= m) return mds_family(ctx, m, r);
    if (q == 2 && r >= 2 && bch_required_m(r, s + 1) <= m && bch_required_m(r, s + 1) < r) {
        IndependentFamily fam = bch_family(r, s + 1);
        if (fam.m < m) {  // zero-pad the ambient dimension up to m
            MatrixFq padded(ctx, m, r);
            for (int i = 0; i < fam.m; ++i)
                for (int j = 0; j < r; ++j) padded.at(i, j) = fam.cols.at(i, j);
            fam.cols = std::move(padded);
            fam.m = m;
        }
        return fam;
    }
    throw Error("no inner family route available for these (q, m, r)");
}

namespace {

unsigned ceil_log2(std::uint64_t n) {
    unsigned b = 0;
    while ((std::uint64_t(1) << b) < n) ++b;
    return b;
}

// smallest m the coprime-supply log term prescribes: ceil(log_q g + 2 log_q log_q g)
unsigned supply_log_term(std::uint32_t q, int g) {
    if (g <= 1) return 1;
    double lg = std::log2(static_cast<double>(g)) / std::log2(static_cast<double>(q));
    double llg = lg > 1.0 ? std::log2(lg) / std::log2(static_cast<double>(q)) : 0.0;
    double v = std::ceil(lg + 2.0 * llg);
    return v < 1.0 ? 1u : static_cast<unsigned>(v);
}

bool is_prime_power_u32(std::uint32_t q) {
    std::uint64_t p;
    unsigned t;
    return factor_prime_power(q, p, t);
}

}  // namespace

LrcParams plan(int n, int r, int h, int a, Route route, CodeForm form,
               std::optional<std::uint32_t> qopt, std::optional<unsigned> mopt) {
    if (r < 1 || n < 1 || n % r != 0) throw Error("need r >= 1 and r | n");
    LrcParams p;
    p.n = n;
    p.r = r;
    p.g = n / r;
    p.h = h;
    p.a = a;
    p.route = route;
    p.form = form;

    switch (route) {
        case Route::Manual:
            if (!qopt || !mopt) throw Error("manual route needs q and m");
            p.q = *qopt;
            p.m = *mopt;
            break;
        case Route::Auto: {
            // smallest valid q (prime powers ascending), then smallest m
            bool found = false;
            for (std::uint32_t q = 2; q <= (1u << 16) && !found; ++q) {
                if (!is_prime_power_u32(q)) continue;
                if (form == CodeForm::Parity && r > static_cast<int>(q) + 1) continue;
                for (unsigned m = 1; m <= static_cast<unsigned>(r) + 64; ++m) {
                    p.q = q;
                    p.m = m;
                    if (!family_route_available(q, m, r, required_strength(p))) continue;
                    if (sat_pow(q, m) < sat_mul(m, static_cast<std::uint64_t>(p.g))) continue;
                    found = true;
                    break;
                }
            }
            if (!found) throw Error("no feasible (q, m) found");
            break;
        }
        case Route::T33: {
            p.form = CodeForm::Generator;
            p.q = 2;
            // statement and proof disagree on the branch split; the proof's
            // choice is m = r when 2^r >= n, else m = ceil(log2 n)
            if ((std::uint64_t(1) << std::min(r, 63)) >= static_cast<std::uint64_t>(n))
                p.m = static_cast<unsigned>(r);
            else
                p.m = ceil_log2(static_cast<std::uint64_t>(n));
            break;
        }
        case Route::T35: {
            p.form = CodeForm::Generator;
            p.q = 2;
            p.m = static_cast<unsigned>(bch_required_m(r, r - a + 1));
            break;
        }
        case Route::T39: {
            p.form = CodeForm::Parity;
            if (a != 1) throw Error("route T3.9 needs a = 1");
            if (r < h + 2) throw Error("route T3.9 needs r >= h+2");
            p.q = 2;
            p.m = std::max<unsigned>(static_cast<unsigned>(bch_required_m(r, h + 2)),
                                     supply_log_term(2, p.g));
            break;
        }
        case Route::T310: {
            p.form = CodeForm::Parity;
            if (a != 1) throw Error("route T3.10 needs a = 1");
            p.q = 2;
            p.m = std::max<unsigned>(static_cast<unsigned>(r), supply_log_term(2, p.g));
            break;
        }
        case Route::T312: {
            p.form = CodeForm::Parity;
            p.q = 1u << ceil_log2(static_cast<std::uint64_t>(r) + 1);  // q - 1 >= r
            p.m = std::max<unsigned>(static_cast<unsigned>(h + a), supply_log_term(p.q, p.g));
            break;
        }
        case Route::T313: {
            p.form = CodeForm::Parity;
            p.q = 1u << ceil_log2(static_cast<std::uint64_t>(r));
            p.m = std::max<unsigned>(static_cast<unsigned>(r), supply_log_term(p.q, p.g));
            break;
        }
    }
    p.validate();
    return p;
}

namespace {

// Evaluations of the group's rational functions at Q: g_ij = f_j / p_i mod Q.
std::vector<ExtElem> group_evaluations(const Fq& k, const ExtField& F,
                                       const std::vector<Poly>& numerators, const Poly& p_i,
                                       const Poly& Q) {
    Poly inv_pi = poly::mod_inverse(k, p_i, Q);
    std::vector<ExtElem> out;
    out.reserve(numerators.size());
    for (const Poly& f : numerators) {
        Poly val = poly::mod(k, poly::mul(k, f, inv_pi), Q);
        ExtElem e(F.degree(), 0);
        for (std::size_t i = 0; i < val.c.size(); ++i) e[i] = val.c[i];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<Poly> family_numerators(const IndependentFamily& fam) {
    std::vector<Poly> out;
    out.reserve(fam.r);
    for (int j = 0; j < fam.r; ++j) {
        std::vector<std::uint32_t> coeffs(fam.m);
        for (int i = 0; i < fam.m; ++i) coeffs[i] = fam.cols.at(i, j);
        out.push_back(Poly::from_coeffs(std::move(coeffs)));
    }
    return out;
}

MrLrcCode build_common(const LrcParams& params) {
    params.validate();
    MrLrcCode code;
    code.params = params;
    std::uint64_t p;
    unsigned t;
    factor_prime_power(params.q, p, t);
    code.fq = field_make(static_cast<std::uint32_t>(p), t);
    code.family = family_dispatch(code.fq, params.m, params.r, required_strength(params));
    code.numerators = family_numerators(code.family);
    code.coprime = coprime_family(code.fq, params.m, static_cast<unsigned>(params.g));
    // Q must be coprime with every group polynomial; excluding the members
    // suffices (only a degree collision could share a factor)
    code.Q = poly::find_irreducible(*code.fq, params.deg_q_poly(), code.coprime.members);
    code.ext = ext_make(code.fq, code.Q);
    return code;
}

}  // namespace

double MrLrcCode::log2_field_size() const {
    return static_cast<double>(ext->degree()) * std::log2(static_cast<double>(params.q));
}

MrLrcCode build_parity(const LrcParams& params) {
    if (params.form != CodeForm::Parity) throw Error("params are not parity form");
    MrLrcCode code = build_common(params);
    const Fq& k = *code.fq;
    const ExtField& F = *code.ext;
    const int r = params.r, g = params.g, a = params.a, h = params.h;

    code.inner_mds = vandermonde_mds(code.fq, r, a);
    code.mat = ExtMatrix(code.ext, g * a + h, params.n);
    for (int i = 0; i < g; ++i) {
        for (int row = 0; row < a; ++row)
            for (int j = 0; j < r; ++j)
                code.mat.set(i * a + row, i * r + j, F.embed(code.inner_mds.at(row, j)));
        if (h > 0) {
            auto evals = group_evaluations(k, F, code.numerators, code.coprime.members[i], code.Q);
            for (int j = 0; j < r; ++j) {
                ExtElem cur = evals[j];
                for (int row = 0; row < h; ++row) {
                    if (row) cur = F.frobenius(cur, 1);
                    code.mat.set(g * a + row, i * r + j, cur);
                }
            }
        }
    }
    return code;
}

MrLrcCode build_generator(const LrcParams& params) {
    if (params.form != CodeForm::Generator) throw Error("params are not generator form");
    MrLrcCode code = build_common(params);
    const Fq& k = *code.fq;
    const ExtField& F = *code.ext;
    const int r = params.r, g = params.g, kk = params.k();

    code.mat = ExtMatrix(code.ext, kk, params.n);
    for (int i = 0; i < g; ++i) {
        auto evals = group_evaluations(k, F, code.numerators, code.coprime.members[i], code.Q);
        for (int j = 0; j < r; ++j) {
            ExtElem cur = evals[j];
            for (int row = 0; row < kk; ++row) {
                if (row) cur = F.frobenius(cur, 1);
                code.mat.set(row, i * r + j, cur);
            }
        }
    }
    return code;
}

MrLrcCode build(const LrcParams& params) {
    return params.form == CodeForm::Parity ? build_parity(params) : build_generator(params);
}

}  // namespace mrlrc
