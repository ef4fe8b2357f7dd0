#include "permagic/matrix.h"

#include <stdexcept>

namespace permagic {

CMatrix::CMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
}

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<CVector> &rows) {
    if (rows.empty()) {
        return {};
    }
    CMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != m.cols_) {
            throw std::invalid_argument("ragged rows");
        }
        for (size_t c = 0; c < m.cols_; c++) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Cyclotomic CMatrix::trace() const {
    Cyclotomic t;
    for (size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

bool CMatrix::is_hermitian() const {
    if (rows_ != cols_) {
        return false;
    }
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = r; c < cols_; c++) {
            if ((*this)(r, c) != (*this)(c, r).conj()) {
                return false;
            }
        }
    }
    return true;
}

bool CMatrix::is_zero() const {
    for (const auto &x : data_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<std::complex<double>> CMatrix::approx() const {
    std::vector<std::complex<double>> out;
    out.reserve(data_.size());
    for (const auto &x : data_) {
        out.push_back(x.approx());
    }
    return out;
}

CMatrix CMatrix::operator*(const CMatrix &rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    CMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const Cyclotomic &a = (*this)(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (size_t c = 0; c < rhs.cols_; c++) {
                const Cyclotomic &b = rhs(k, c);
                if (!b.is_zero()) {
                    out(r, c) += a * b;
                }
            }
        }
    }
    return out;
}

CVector CMatrix::operator*(const CVector &v) const {
    if (cols_ != v.size()) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    CVector out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            const Cyclotomic &a = (*this)(r, k);
            if (!a.is_zero() && !v[k].is_zero()) {
                out[r] += a * v[k];
            }
        }
    }
    return out;
}

CMatrix CMatrix::operator+(const CMatrix &rhs) const {
    CMatrix out = *this;
    out += rhs;
    return out;
}

CMatrix &CMatrix::operator+=(const CMatrix &rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in sum");
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

CMatrix CMatrix::operator-(const CMatrix &rhs) const {
    return *this + rhs.scaled(-1);
}

CMatrix CMatrix::scaled(const Cyclotomic &s) const {
    CMatrix out = *this;
    for (auto &x : out.data_) {
        x *= s;
    }
    return out;
}

bool CMatrix::operator==(const CMatrix &rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t r1 = 0; r1 < a.rows(); r1++) {
        for (size_t c1 = 0; c1 < a.cols(); c1++) {
            const Cyclotomic &x = a(r1, c1);
            if (x.is_zero()) {
                continue;
            }
            for (size_t r2 = 0; r2 < b.rows(); r2++) {
                for (size_t c2 = 0; c2 < b.cols(); c2++) {
                    const Cyclotomic &y = b(r2, c2);
                    if (!y.is_zero()) {
                        out(r1 * b.rows() + r2, c1 * b.cols() + c2) = x * y;
                    }
                }
            }
        }
    }
    return out;
}

Cyclotomic trace_of_product(const CMatrix &a, const CMatrix &b) {
    Cyclotomic t;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            const Cyclotomic &x = a(r, k);
            const Cyclotomic &y = b(k, r);
            if (!x.is_zero() && !y.is_zero()) {
                t += x * y;
            }
        }
    }
    return t;
}

Cyclotomic inner(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch in inner product");
    }
    Cyclotomic t;
    for (size_t k = 0; k < a.size(); k++) {
        if (!a[k].is_zero() && !b[k].is_zero()) {
            t += a[k].conj() * b[k];
        }
    }
    return t;
}

CMatrix outer(const CVector &a, const CVector &b) {
    CMatrix out(a.size(), b.size());
    for (size_t r = 0; r < a.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            if (!a[r].is_zero() && !b[c].is_zero()) {
                out(r, c) = a[r] * b[c].conj();
            }
        }
    }
    return out;
}

Cyclotomic expectation(const CMatrix &m, const CVector &v) {
    return inner(v, m * v);
}

std::vector<CVector> rref(std::vector<CVector> rows) {
    if (rows.empty()) {
        return rows;
    }
    size_t ncols = rows[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < ncols && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        CVector &p = rows[rank];
        if (p[col] != Cyclotomic(1)) {
            Cyclotomic inv = p[col].inverse();
            for (size_t c = col; c < ncols; c++) {
                if (!p[c].is_zero()) {
                    p[c] *= inv;
                }
            }
        }
        for (size_t r = 0; r < rows.size(); r++) {
            if (r == rank || rows[r][col].is_zero()) {
                continue;
            }
            Cyclotomic f = rows[r][col];
            for (size_t c = col; c < ncols; c++) {
                if (!p[c].is_zero()) {
                    rows[r][c] -= f * p[c];
                }
            }
        }
        rank++;
    }
    rows.resize(rank);
    return rows;
}

std::vector<CVector> nullspace(const CMatrix &m) {
    std::vector<CVector> rows(m.rows(), CVector(m.cols()));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            rows[r][c] = m(r, c);
        }
    }
    std::vector<CVector> reduced = rref(std::move(rows));
    std::vector<size_t> pivot_cols;
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto &row : reduced) {
        size_t c = 0;
        while (row[c].is_zero()) {
            c++;
        }
        pivot_cols.push_back(c);
        is_pivot[c] = true;
    }
    std::vector<CVector> basis;
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        CVector v(m.cols());
        v[free] = 1;
        for (size_t k = 0; k < reduced.size(); k++) {
            v[pivot_cols[k]] = -reduced[k][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<JointEigenspace> joint_eigenspaces(
    const std::vector<CMatrix> &mats, const std::vector<CVector> &candidates) {
    if (mats.size() != candidates.size()) {
        throw std::invalid_argument("one candidate list per matrix is required");
    }
    if (mats.empty()) {
        return {};
    }
    size_t n = mats[0].rows();
    std::vector<JointEigenspace> spaces;
    {
        JointEigenspace whole;
        for (size_t k = 0; k < n; k++) {
            CVector e(n);
            e[k] = 1;
            whole.basis.push_back(std::move(e));
        }
        spaces.push_back(std::move(whole));
    }
    for (size_t mi = 0; mi < mats.size(); mi++) {
        const CMatrix &m = mats[mi];
        std::vector<JointEigenspace> refined;
        for (const auto &space : spaces) {
            size_t k = space.basis.size();
            std::vector<CVector> images;
            images.reserve(k);
            for (const auto &b : space.basis) {
                images.push_back(m * b);
            }
            size_t found = 0;
            for (const auto &lambda : candidates[mi]) {
                // Columns (M - lambda) b_i; coefficient vectors in its kernel give eigenvectors.
                CMatrix w(n, k);
                for (size_t i = 0; i < k; i++) {
                    for (size_t r = 0; r < n; r++) {
                        w(r, i) = images[i][r] - lambda * space.basis[i][r];
                    }
                }
                std::vector<CVector> kernel = nullspace(w);
                if (kernel.empty()) {
                    continue;
                }
                std::vector<CVector> vecs;
                for (const auto &coef : kernel) {
                    CVector v(n);
                    for (size_t i = 0; i < k; i++) {
                        if (coef[i].is_zero()) {
                            continue;
                        }
                        for (size_t r = 0; r < n; r++) {
                            if (!space.basis[i][r].is_zero()) {
                                v[r] += coef[i] * space.basis[i][r];
                            }
                        }
                    }
                    vecs.push_back(std::move(v));
                }
                JointEigenspace sub;
                sub.eigenvalues = space.eigenvalues;
                sub.eigenvalues.push_back(lambda);
                sub.basis = rref(std::move(vecs));
                found += sub.basis.size();
                refined.push_back(std::move(sub));
                if (found == k) {
                    break;
                }
            }
            if (found != k) {
                throw std::domain_error("eigenvalue candidates do not cover the spectrum");
            }
        }
        spaces = std::move(refined);
    }
    return spaces;
}

}  // namespace permagic
