// Per-group ingredient codes: [r,a] MDS generator matrices and families of
// r vectors in F_q^m with any s of them linearly independent (equivalently
// parity-check columns of an [r, r-m, >= s+1] code).
#ifndef MRLRC_INNERCODES_HPP
#define MRLRC_INNERCODES_HPP

#include <cstdint>
#include <string>

#include "mrlrc/matrix.hpp"

namespace mrlrc {

struct IndependentFamily {
    FqPtr ctx;
    int m = 0;       // ambient dimension (rows of cols)
    int r = 0;       // family size
    int s = 0;       // independence strength: any min(s, r) columns independent
    int m_used = 0;  // rows that are possibly nonzero (m_used <= m; rest is padding)
    MatrixFq cols;   // m x r, one family vector per column
    std::string route;  // identity | mds | bch
};

// a x r generator of an [r, a] MDS code. Rows are powers x^0..x^{a-1} of the
// evaluation points 0, 1, alpha, alpha^2, ... (alpha the field generator);
// when r = q+1 the extended column (0,..,0,1) is appended.
MatrixFq vandermonde_mds(FqPtr ctx, int r, int a);

// First r standard basis vectors of F_q^m (m >= r); strength s = r.
IndependentFamily identity_family(FqPtr ctx, int m, int r);

// m x r Vandermonde-type columns, any m of them independent (r <= q+1,
// m <= r); strength s = m.
IndependentFamily mds_family(FqPtr ctx, int m, int r);

// Lemma-style binary family: r columns in F_2^m, m = floor((d-1)/2)*ceil(log2 r)+1,
// any d-1 independent. Built from the parity-check matrix of the extended
// narrow-sense BCH code of length 2^t, punctured to the first r coordinates
// and zero-padded to exactly m rows.
IndependentFamily bch_family(int r, int d);
int bch_required_m(int r, int d);

// Exhaustive oracle: every min(s,r)-subset of columns has full rank.
bool verify_family(const IndependentFamily& fam, std::uint64_t cap = kDefaultEnumCap);

// Minimum Hamming weight over all nonzero codewords of the row space;
// enumerates q^k messages (k = generator rows), so q^k must fit the cap.
int brute_min_distance(const MatrixFq& generator, std::uint64_t cap = kDefaultEnumCap);

}  // namespace mrlrc

#endif
