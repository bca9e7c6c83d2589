// Moore matrices over an extension field: row k is the q^k-th Frobenius
// power of the generating row, and the determinant is nonzero exactly when
// the generators are linearly independent over the base field.
#ifndef MRLRC_MOORE_HPP
#define MRLRC_MOORE_HPP

#include <vector>

#include "mrlrc/matrix.hpp"

namespace mrlrc {

// h x |elems| matrix with entry (k, j) = elems_j ^ (q^k).
ExtMatrix moore_matrix(ExtPtr ctx, const std::vector<ExtElem>& elems, int h);

// Square case: determinant of the |elems| x |elems| Moore matrix is nonzero.
bool moore_det_nonzero(ExtPtr ctx, const std::vector<ExtElem>& elems);

// Exhaustive oracle: no nonzero F_q-combination of elems vanishes.
// Enumerates the q^|elems| - 1 combinations, guarded by cap.
bool fq_independent(ExtPtr ctx, const std::vector<ExtElem>& elems,
                    std::uint64_t cap = kDefaultEnumCap);

// Rank of elems as vectors over F_q (coefficient representation).
int fq_span_rank(ExtPtr ctx, const std::vector<ExtElem>& elems);

// Tiny-size cross-check route: product of sum c_i elems_i over all nonzero
// direction vectors with last nonzero coordinate 1.
ExtElem moore_det_product_formula(ExtPtr ctx, const std::vector<ExtElem>& elems);
ExtElem moore_det(ExtPtr ctx, const std::vector<ExtElem>& elems);

}  // namespace mrlrc

#endif
