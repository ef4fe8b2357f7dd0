#ifndef _PERMAGIC_MATRIX_H
#define _PERMAGIC_MATRIX_H

#include <complex>
#include <vector>

#include "permagic/cyclo.h"

namespace permagic {

using CVector = std::vector<Cyclotomic>;

/// Dense matrix over the cyclotomic numbers. Sizes here never exceed 9x9 (or 81x81 for
/// superoperator checks), so a flat row-major vector is all that is needed.
class CMatrix {
   public:
    CMatrix() = default;
    CMatrix(size_t rows, size_t cols);
    static CMatrix identity(size_t n);
    static CMatrix from_rows(const std::vector<CVector> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Cyclotomic &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const Cyclotomic &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    Cyclotomic trace() const;
    bool is_hermitian() const;
    bool is_zero() const;
    std::vector<std::complex<double>> approx() const;

    CMatrix operator*(const CMatrix &rhs) const;
    CVector operator*(const CVector &v) const;
    CMatrix operator+(const CMatrix &rhs) const;
    CMatrix operator-(const CMatrix &rhs) const;
    CMatrix &operator+=(const CMatrix &rhs);
    CMatrix scaled(const Cyclotomic &s) const;
    bool operator==(const CMatrix &rhs) const;
    bool operator!=(const CMatrix &rhs) const {
        return !(*this == rhs);
    }

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Cyclotomic> data_;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);
/// tr(a * b) without forming the product.
Cyclotomic trace_of_product(const CMatrix &a, const CMatrix &b);
/// <a|b> = sum conj(a_i) b_i.
Cyclotomic inner(const CVector &a, const CVector &b);
/// |a><b|.
CMatrix outer(const CVector &a, const CVector &b);
/// <v|m|v>.
Cyclotomic expectation(const CMatrix &m, const CVector &v);

/// Nonzero rows of the reduced row echelon form of the given rows.
std::vector<CVector> rref(std::vector<CVector> rows);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<CVector> nullspace(const CMatrix &m);

struct JointEigenspace {
    /// One eigenvalue per input matrix.
    CVector eigenvalues;
    /// Reduced row echelon basis of the joint eigenspace.
    std::vector<CVector> basis;
};

/// Splits C^n into joint eigenspaces of mutually commuting matrices. candidates[k] lists the
/// possible eigenvalues of mats[k]; each space is refined by every matrix in turn using exact
/// nullspaces of (M - lambda I) restricted to the current subspace. Throws std::domain_error
/// if the candidate lists do not cover a spectrum.
std::vector<JointEigenspace> joint_eigenspaces(
    const std::vector<CMatrix> &mats, const std::vector<CVector> &candidates);

}  // namespace permagic

#endif
