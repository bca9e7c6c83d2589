// Dense matrices over F_q and over the extension field, with the exact
// Gaussian-elimination kernels (rank, nullspace, solve) the verifier uses.
// Rank checks use division-free row elimination; solves normalize pivots.
#ifndef MRLRC_MATRIX_HPP
#define MRLRC_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "mrlrc/gf.hpp"

namespace mrlrc {

struct MatrixFq {
    FqPtr ctx;
    int rows = 0, cols = 0;
    std::vector<std::uint32_t> e;  // row-major

    MatrixFq() = default;
    MatrixFq(FqPtr c, int r, int n) : ctx(std::move(c)), rows(r), cols(n), e(std::size_t(r) * n, 0) {}
    std::uint32_t& at(int i, int j) { return e[std::size_t(i) * cols + j]; }
    std::uint32_t at(int i, int j) const { return e[std::size_t(i) * cols + j]; }
    bool operator==(const MatrixFq& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
};

int fq_rank(MatrixFq m);  // by value: eliminates in place
bool fq_invertible(const MatrixFq& m);
MatrixFq fq_inverse(const MatrixFq& m);  // square, throws if singular
MatrixFq fq_mul(const MatrixFq& a, const MatrixFq& b);
// Basis of the right nullspace, one solution per column.
MatrixFq fq_nullspace(const MatrixFq& m);
MatrixFq fq_columns(const MatrixFq& m, std::span<const int> idx);

// Matrix over the extension field; entry (i,j) occupies the d coefficients
// starting at ((i*cols)+j)*d.
struct ExtMatrix {
    ExtPtr ctx;
    int rows = 0, cols = 0;
    unsigned d = 0;
    std::vector<std::uint32_t> e;

    ExtMatrix() = default;
    ExtMatrix(ExtPtr c, int r, int n)
        : ctx(std::move(c)), rows(r), cols(n), d(ctx->degree()),
          e(std::size_t(r) * n * ctx->degree(), 0) {}
    std::span<std::uint32_t> at(int i, int j) {
        return {&e[(std::size_t(i) * cols + j) * d], d};
    }
    std::span<const std::uint32_t> at(int i, int j) const {
        return {&e[(std::size_t(i) * cols + j) * d], d};
    }
    void set(int i, int j, const ExtElem& v) {
        auto s = at(i, j);
        std::copy(v.begin(), v.end(), s.begin());
    }
    ExtElem get(int i, int j) const {
        auto s = at(i, j);
        return ExtElem(s.begin(), s.end());
    }
    bool operator==(const ExtMatrix& o) const {
        return rows == o.rows && cols == o.cols && d == o.d && e == o.e;
    }
};

int ext_rank(ExtMatrix m);
bool ext_invertible(const ExtMatrix& m);
ExtMatrix ext_mul(const ExtMatrix& a, const ExtMatrix& b);
ExtMatrix ext_columns(const ExtMatrix& m, std::span<const int> idx);

// Right nullspace basis over F_ell, one basis vector per column, in the
// systematic-where-possible form (free coordinates carry the identity).
ExtMatrix ext_nullspace(const ExtMatrix& m);

// Solves m * x = rhs (rhs one column); throws if the system is singular
// or inconsistent. m may have more rows than columns.
std::vector<ExtElem> ext_solve(const ExtMatrix& m, const std::vector<ExtElem>& rhs);

}  // namespace mrlrc

#endif
