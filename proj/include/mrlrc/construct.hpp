// Assembly of maximally recoverable local reconstruction codes over the
// rational function field: parity-check form (block-diagonal local MDS
// checks over stacked Moore blocks of rational-function evaluations) and
// generator form (Moore blocks per group), plus the parameter planner.
#ifndef MRLRC_CONSTRUCT_HPP
#define MRLRC_CONSTRUCT_HPP

#include <optional>
#include <string>

#include "mrlrc/innercodes.hpp"
#include "mrlrc/matrix.hpp"
#include "mrlrc/poly.hpp"

namespace mrlrc {

enum class CodeForm { Parity, Generator };

enum class Route { Manual, Auto, T33, T35, T39, T310, T312, T313 };

std::string route_name(Route r);
Route route_from_name(const std::string& s);
std::string form_name(CodeForm f);
CodeForm form_from_name(const std::string& s);

struct LrcParams {
    int n = 0, r = 0, g = 0, h = 0, a = 0;
    std::uint32_t q = 0;  // base field size (prime power)
    unsigned m = 0;       // degree of the per-group coprime polynomials
    Route route = Route::Manual;
    CodeForm form = CodeForm::Parity;

    int k() const { return n - g * a - h; }
    unsigned deg_q_poly() const {  // degree of the evaluation modulus Q
        int mult = form == CodeForm::Parity ? std::min(h, g) : std::min(k(), g);
        return mult == 0 ? 1 : m * static_cast<unsigned>(mult);
    }
    void validate() const;  // throws Error on violated invariants
};

// Family strength each form requires of the r per-group numerators.
int required_strength(const LrcParams& p);

// Inner-family selection per the construction's assumptions: the identity
// family when m >= r, MDS parity columns when r <= q+1, else the binary
// BCH family; the result always has ambient dimension exactly m.
IndependentFamily family_dispatch(FqPtr ctx, int m, int r, int s);
bool family_route_available(std::uint32_t q, int m, int r, int s);

// Fixes (q, m) for the requested route; Manual takes both from the caller,
// Auto picks the smallest valid q (prime powers ascending) then smallest m.
LrcParams plan(int n, int r, int h, int a, Route route,
               CodeForm form = CodeForm::Parity,
               std::optional<std::uint32_t> q = std::nullopt,
               std::optional<unsigned> m = std::nullopt);

struct MrLrcCode {
    LrcParams params;
    FqPtr fq;                      // F_q
    ExtPtr ext;                    // F_ell = F_q[x]/(Q)
    ExtMatrix mat;                 // H ((ga+h) x n) or G (k x n)
    MatrixFq inner_mds;            // A (a x r); parity form only
    IndependentFamily family;      // numerator family
    CoprimeFamily coprime;         // one polynomial per group
    std::vector<Poly> numerators;  // family columns as polynomials, r of them
    Poly Q;

    // log2 of the field size ell = q^deg(Q)
    double log2_field_size() const;
};

MrLrcCode build_parity(const LrcParams& params);
MrLrcCode build_generator(const LrcParams& params);
MrLrcCode build(const LrcParams& params);  // dispatches on params.form

}  // namespace mrlrc

#endif
