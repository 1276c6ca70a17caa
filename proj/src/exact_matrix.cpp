#include "ghm/exact_matrix.hpp"

#include "ghm/errors.hpp"

namespace ghm {

ExactMatrix::ExactMatrix(int size) : size_(size) {
    if (size < 1) throw DomainError("matrix size must be at least 1");
    data_.assign(static_cast<size_t>(size) * size, ComplexRational());
}

ExactMatrix ExactMatrix::identity(int size) {
    ExactMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = ComplexRational(1);
    return m;
}

bool ExactMatrix::is_hermitian() const {
    for (int r = 0; r < size_; ++r) {
        if (!at(r, r).is_real()) return false;
        for (int c = r + 1; c < size_; ++c)
            if (at(r, c) != at(c, r).conj()) return false;
    }
    return true;
}

ExactMatrix ExactMatrix::conj_transpose() const {
    ExactMatrix m(size_);
    for (int r = 0; r < size_; ++r)
        for (int c = 0; c < size_; ++c) m.at(c, r) = at(r, c).conj();
    return m;
}

ExactMatrix ExactMatrix::leading(int size) const {
    if (size < 1 || size > size_) throw DomainError("leading submatrix size out of range");
    ExactMatrix m(size);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) m.at(r, c) = at(r, c);
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.size_ != b.size_) throw DomainError("matrix size mismatch");
    ExactMatrix r(a.size_);
    for (int i = 0; i < a.size_; ++i)
        for (int j = 0; j < a.size_; ++j) {
            ComplexRational s;
            for (int k = 0; k < a.size_; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
}

namespace {

// Common denominator of all entries (lcm over re/im denominators), as a
// Rational for exact scaling.
Rational common_denominator(const ExactMatrix& m) {
    mpz_t l;
    mpz_init_set_ui(l, 1);
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c) {
            mpz_lcm(l, l, mpq_denref(m.at(r, c).re().raw()));
            mpz_lcm(l, l, mpq_denref(m.at(r, c).im().raw()));
        }
    Rational out;
    mpq_set_z(out.raw(), l);
    mpz_clear(l);
    return out;
}

// Bareiss forward elimination in place on an n x cols matrix whose first
// n columns form the square part; entries must be Gaussian integers.
// Returns the permutation sign, or 0 if the square part is singular.
// After return, work(k,k) holds the k-th leading minor of the permuted
// matrix (up to the returned sign convention of Bareiss).
int bareiss_forward(std::vector<std::vector<ComplexRational>>& work, int n, int cols) {
    int sign = 1;
    ComplexRational prev(1);
    for (int k = 0; k < n; ++k) {
        if (work[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!work[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(work[k], work[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < cols; ++j)
                work[i][j] = (work[k][k] * work[i][j] - work[i][k] * work[k][j]) / prev;
            work[i][k] = ComplexRational();
        }
        prev = work[k][k];
    }
    return sign;
}

std::vector<std::vector<ComplexRational>> cleared_rows(const ExactMatrix& m, const Rational& den) {
    const int n = m.size();
    std::vector<std::vector<ComplexRational>> rows(n);
    const ComplexRational scale{den};
    for (int r = 0; r < n; ++r) {
        rows[r].resize(static_cast<size_t>(n));
        for (int c = 0; c < n; ++c) rows[r][c] = m.at(r, c) * scale;
    }
    return rows;
}

} // namespace

ComplexRational bareiss_det(const ExactMatrix& m) {
    const int n = m.size();
    const Rational den = common_denominator(m);
    auto work = cleared_rows(m, den);
    int sign = bareiss_forward(work, n, n);
    if (sign == 0) return ComplexRational();
    ComplexRational det = work[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det / ComplexRational(den.pow(n));
}

ExactMatrix exact_inverse(const ExactMatrix& m) {
    const int n = m.size();
    const Rational den = common_denominator(m);
    auto work = cleared_rows(m, den);
    // augment with den * I so the result is directly the inverse of m
    for (int r = 0; r < n; ++r) {
        work[r].resize(static_cast<size_t>(2) * n);
        work[r][static_cast<size_t>(n) + r] = ComplexRational(den);
    }
    if (bareiss_forward(work, n, 2 * n) == 0)
        throw SingularMatrixError("exact_inverse: matrix is singular");

    ExactMatrix inv(n);
    for (int col = 0; col < n; ++col) {
        // back substitution on the upper-triangular left block
        for (int i = n - 1; i >= 0; --i) {
            ComplexRational s = work[i][static_cast<size_t>(n) + col];
            for (int j = i + 1; j < n; ++j) s -= work[i][j] * inv.at(j, col);
            inv.at(i, col) = s / work[i][i];
        }
    }
    return inv;
}

bool is_positive_definite(const ExactMatrix& m) {
    if (!m.is_hermitian()) throw NotHermitianError("is_positive_definite: matrix not Hermitian");
    for (int k = 1; k <= m.size(); ++k) {
        ComplexRational minor = bareiss_det(m.leading(k));
        if (!minor.is_real()) throw DomainError("principal minor of Hermitian matrix not real");
        if (minor.re().sign() <= 0) return false;
    }
    return true;
}

} // namespace ghm
