#include "mrlrc/matrix.hpp"

#include <algorithm>

namespace mrlrc {

int fq_rank(MatrixFq m) {
    const Fq& k = *m.ctx;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        std::uint32_t inv_p = k.inv(m.at(rank, col));
        for (int i = rank + 1; i < m.rows; ++i) {
            std::uint32_t f = k.mul(m.at(i, col), inv_p);
            if (!f) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

bool fq_invertible(const MatrixFq& m) {
    return m.rows == m.cols && fq_rank(m) == m.rows;
}

namespace {

// reduced row echelon form; returns pivot column per pivot row
std::vector<int> fq_rref(MatrixFq& m) {
    const Fq& k = *m.ctx;
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        std::uint32_t inv_p = k.inv(m.at(rank, col));
        for (int j = 0; j < m.cols; ++j) m.at(rank, j) = k.mul(inv_p, m.at(rank, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            std::uint32_t f = m.at(i, col);
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(rank, j)));
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

MatrixFq fq_inverse(const MatrixFq& m) {
    if (m.rows != m.cols) throw Error("inverse of a non-square matrix");
    MatrixFq aug(m.ctx, m.rows, 2 * m.cols);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = 1;
    }
    auto piv = fq_rref(aug);
    if (static_cast<int>(piv.size()) != m.rows || piv.back() >= m.cols)
        throw Error("matrix is singular");
    MatrixFq out(m.ctx, m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(i, j) = aug.at(i, m.cols + j);
    return out;
}

MatrixFq fq_mul(const MatrixFq& a, const MatrixFq& b) {
    if (a.cols != b.rows) throw Error("matrix dimension mismatch");
    const Fq& k = *a.ctx;
    MatrixFq out(a.ctx, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            std::uint32_t v = a.at(i, l);
            if (!v) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = k.add(out.at(i, j), k.mul(v, b.at(l, j)));
        }
    return out;
}

MatrixFq fq_nullspace(const MatrixFq& m) {
    const Fq& k = *m.ctx;
    MatrixFq r = m;
    auto pivots = fq_rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nullity = m.cols - static_cast<int>(pivots.size());
    MatrixFq out(m.ctx, m.cols, nullity);
    int bcol = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        out.at(f, bcol) = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            out.at(pivots[row], bcol) = k.neg(r.at(static_cast<int>(row), f));
        ++bcol;
    }
    return out;
}

MatrixFq fq_columns(const MatrixFq& m, std::span<const int> idx) {
    MatrixFq out(m.ctx, m.rows, static_cast<int>(idx.size()));
    for (int i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, static_cast<int>(j)) = m.at(i, idx[j]);
    return out;
}

int ext_rank(ExtMatrix m) {
    const ExtField& F = *m.ctx;
    const unsigned d = m.d;
    std::vector<std::uint32_t> t1(d), t2(d);
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!F.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < m.cols; ++j) {
                auto a = m.at(piv, j), b = m.at(rank, j);
                std::swap_ranges(a.begin(), a.end(), b.begin());
            }
        // division-free: row_i <- pivot*row_i - lead*row_rank
        for (int i = rank + 1; i < m.rows; ++i) {
            if (F.is_zero(m.at(i, col))) continue;
            ExtElem lead(m.at(i, col).begin(), m.at(i, col).end());
            ExtElem pivot(m.at(rank, col).begin(), m.at(rank, col).end());
            for (int j = col; j < m.cols; ++j) {
                F.mul(pivot, m.at(i, j), t1);
                F.mul(lead, m.at(rank, j), t2);
                F.sub(t1, t2, m.at(i, j));
            }
        }
        ++rank;
    }
    return rank;
}

bool ext_invertible(const ExtMatrix& m) {
    return m.rows == m.cols && ext_rank(m) == m.rows;
}

ExtMatrix ext_mul(const ExtMatrix& a, const ExtMatrix& b) {
    if (a.cols != b.rows) throw Error("matrix dimension mismatch");
    const ExtField& F = *a.ctx;
    ExtMatrix out(a.ctx, a.rows, b.cols);
    std::vector<std::uint32_t> t(a.d);
    for (int i = 0; i < a.rows; ++i)
        for (int l = 0; l < a.cols; ++l) {
            auto v = a.at(i, l);
            if (F.is_zero(v)) continue;
            for (int j = 0; j < b.cols; ++j) {
                F.mul(v, b.at(l, j), t);
                F.add(out.at(i, j), t, out.at(i, j));
            }
        }
    return out;
}

ExtMatrix ext_columns(const ExtMatrix& m, std::span<const int> idx) {
    ExtMatrix out(m.ctx, m.rows, static_cast<int>(idx.size()));
    for (int i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) {
            auto src = m.at(i, idx[j]);
            auto dst = out.at(i, static_cast<int>(j));
            std::copy(src.begin(), src.end(), dst.begin());
        }
    return out;
}

namespace {

std::vector<int> ext_rref(ExtMatrix& m) {
    const ExtField& F = *m.ctx;
    std::vector<std::uint32_t> t(m.d);
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!F.is_zero(m.at(i, col))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < m.cols; ++j) {
                auto a = m.at(piv, j), b = m.at(rank, j);
                std::swap_ranges(a.begin(), a.end(), b.begin());
            }
        ExtElem inv_p = F.inv(m.get(rank, col));
        for (int j = 0; j < m.cols; ++j) {
            F.mul(inv_p, m.at(rank, j), t);
            std::copy(t.begin(), t.end(), m.at(rank, j).begin());
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || F.is_zero(m.at(i, col))) continue;
            ExtElem f = m.get(i, col);
            for (int j = 0; j < m.cols; ++j) {
                F.mul(f, m.at(rank, j), t);
                F.sub(m.at(i, j), t, m.at(i, j));
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

ExtMatrix ext_nullspace(const ExtMatrix& m) {
    const ExtField& F = *m.ctx;
    ExtMatrix r = m;
    auto pivots = ext_rref(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nullity = m.cols - static_cast<int>(pivots.size());
    ExtMatrix out(m.ctx, m.cols, nullity);
    int bcol = 0;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        out.set(f, bcol, F.one());
        for (std::size_t row = 0; row < pivots.size(); ++row)
            out.set(pivots[row], bcol, F.neg(r.get(static_cast<int>(row), f)));
        ++bcol;
    }
    return out;
}

std::vector<ExtElem> ext_solve(const ExtMatrix& m, const std::vector<ExtElem>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows) throw Error("rhs size mismatch");
    const ExtField& F = *m.ctx;
    ExtMatrix aug(m.ctx, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.set(i, j, m.get(i, j));
        aug.set(i, m.cols, rhs[i]);
    }
    auto pivots = ext_rref(aug);
    // unique solution requires a pivot in every coefficient column and
    // no pivot in the rhs column (that would mean inconsistency)
    if (!pivots.empty() && pivots.back() == m.cols) throw Error("inconsistent linear system");
    if (static_cast<int>(pivots.size()) != m.cols)
        throw Error("singular linear system (no unique solution)");
    std::vector<ExtElem> x(m.cols);
    for (int j = 0; j < m.cols; ++j) x[j] = aug.get(j, m.cols);
    return x;
}

}  // namespace mrlrc
