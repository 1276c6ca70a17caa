#ifndef GHM_EXACT_MATRIX_HPP
#define GHM_EXACT_MATRIX_HPP

#include <vector>

#include "ghm/bigfloat.hpp"
#include "ghm/complex_rational.hpp"

namespace ghm {

/// Dense square matrix of exact complex rationals, row-major.
/// Minimum size is 1x1; degenerate order-0 storage is rejected.
class ExactMatrix {
public:
    explicit ExactMatrix(int size);
    static ExactMatrix identity(int size);

    int size() const { return size_; }

    ComplexRational& at(int r, int c) { return data_[static_cast<size_t>(r) * size_ + c]; }
    const ComplexRational& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * size_ + c];
    }

    bool is_hermitian() const;
    ExactMatrix conj_transpose() const;

    /// Leading principal submatrix of the given size.
    ExactMatrix leading(int size) const;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    int size_;
    std::vector<ComplexRational> data_;
};

/// Exact determinant via fraction-free Bareiss elimination on the
/// denominator-cleared (Gaussian-integer) matrix.
ComplexRational bareiss_det(const ExactMatrix& m);

/// Exact inverse; throws SingularMatrixError when det = 0.
/// Bareiss forward elimination on the cleared augmented system followed
/// by exact back substitution.
ExactMatrix exact_inverse(const ExactMatrix& m);

/// Leading-principal-minor test, minors by Bareiss. Requires Hermitian input.
bool is_positive_definite(const ExactMatrix& m);

} // namespace ghm

#endif
