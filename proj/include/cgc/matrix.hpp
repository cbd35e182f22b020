#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgc/gf.hpp"

namespace cgc {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
    static Matrix identity(const Field& f, std::size_t n);
    static Matrix diagonal(const Field& f, const std::vector<Elem>& d);
    static Matrix from_codes(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }
    const std::vector<Elem>& entries() const noexcept { return e_; }
    std::vector<std::vector<std::uint32_t>> codes() const;

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    Elem trace() const;

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

   private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem c);
/// Entry-wise a_ij^e.
Matrix entrywise_pow(const Matrix& a, std::uint64_t e);

/// Gaussian elimination; throws NonSquare.
Elem determinant(const Matrix& a);
/// Gauss-Jordan; throws NonSquare or Singular.
Matrix inverse(const Matrix& a);
std::optional<Matrix> try_inverse(const Matrix& a);

struct MinorWitness {
    std::vector<std::size_t> rows, cols;
};

struct MdsResult {
    bool mds;
    /// First singular submatrix in (size, row set, column set) order.
    std::optional<MinorWitness> witness;
};

/// Scans all square submatrices, smallest first, stopping at the first
/// singular one. Throws NonSquare.
MdsResult is_mds(const Matrix& a);
/// Only the k x k submatrices.
MdsResult minors_of_size_nonsingular(const Matrix& a, std::size_t k);

bool is_involutory(const Matrix& a);

struct SemiInvolutory {
    bool found = false;
    std::vector<Elem> d1, d2;  // diagonals, A^{-1} = D1 A D2
    std::string reason;        // set when !found
};

/// Decides whether A^{-1} = D1 A D2 for nonsingular diagonal D1, D2.
/// With R_ij = (A^{-1})_ij / A_ij on the common support, a solution exists iff
/// the zero patterns of A and A^{-1} coincide and R = d1_i d2_j is consistent
/// along the bipartite row/column graph of that support (rank one on the
/// support). D1[0] = 1 in the normalization. Throws NonSquare or Singular.
SemiInvolutory semi_involutory(const Matrix& a);

/// A^{-1} = c A for a scalar c, i.e. D1 = c1 I, D2 = c2 I with c1 c2 = c.
/// Returns c, or nullopt. When theta_exp is given, c must also lie in the
/// fixed field of a -> a^(p^theta_exp). Throws NonSquare or Singular.
std::optional<Elem> scalar_semi_involutory(const Matrix& a, std::optional<std::uint32_t> theta_exp = std::nullopt);

struct InverseSupportCheck {
    bool premise;     // every entry of A^{-1} nonzero
    bool conclusion;  // every (m-1) x (m-1) minor nonsingular
    /// premise implies conclusion; vacuously true when the premise fails.
    bool holds() const noexcept { return !premise || conclusion; }
};

/// Throws NonSquare or Singular.
InverseSupportCheck inverse_support_check(const Matrix& a);

/// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace cgc
