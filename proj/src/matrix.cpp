#include "cgc/matrix.hpp"

#include <queue>

namespace cgc {

namespace {

void require_square(const Matrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, "matrix is not square");
}

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::MixedFields, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(rows * cols) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "entry count does not match dimensions");
    for (Elem x : e_)
        if (x.code >= field_.q()) throw Error(ErrorKind::IndexOutOfRange, "entry code out of range");
}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
}

Matrix Matrix::diagonal(const Field& f, const std::vector<Elem>& d) {
    Matrix m(f, d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_codes(const Field& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    std::vector<Elem> e;
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (auto code : row) e.push_back(f.element(code));
    }
    return Matrix(f, r, c, std::move(e));
}

std::vector<std::vector<std::uint32_t>> Matrix::codes() const {
    std::vector<std::vector<std::uint32_t>> out(rows_, std::vector<std::uint32_t>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j).code;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    Matrix s(field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (rows[i] >= rows_ || cols[j] >= cols_) throw Error(ErrorKind::IndexOutOfRange, "submatrix index");
            s(i, j) = (*this)(rows[i], cols[j]);
        }
    return s;
}

Elem Matrix::trace() const {
    require_square(*this);
    Elem t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
    return t;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "shapes differ");
    Matrix c(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().add(a(i, j), b(i, j));
    return c;
}

Matrix scale(const Matrix& a, Elem c) {
    Matrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a.field().mul(a(i, j), c);
    return s;
}

Matrix entrywise_pow(const Matrix& a, std::uint64_t e) {
    Matrix s = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a.field().pow(a(i, j), e);
    return s;
}

Elem determinant(const Matrix& a) {
    require_square(a);
    const Field& f = a.field();
    const std::size_t n = a.rows();
    Matrix m = a;
    Elem det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return f.zero();
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Elem inv = f.inv(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            const Elem factor = f.mul(m(r, c), inv);
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    require_square(a);
    const Field& f = a.field();
    const std::size_t n = a.rows();
    Matrix m = a;
    Matrix inv = Matrix::identity(f, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        const Elem s = f.inv(m(c, c));
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) = f.mul(m(c, j), s);
            inv(c, j) = f.mul(inv(c, j), s);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            const Elem factor = m(r, c);
            if (factor.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
                inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(c, j)));
            }
        }
    }
    return inv;
}

Matrix inverse(const Matrix& a) {
    auto inv = try_inverse(a);
    if (!inv) throw Error(ErrorKind::Singular, "matrix is singular");
    return *inv;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

MdsResult minors_of_size_nonsingular(const Matrix& a, std::size_t k) {
    require_square(a);
    const auto sets = combinations(a.rows(), k);
    for (const auto& rs : sets)
        for (const auto& cs : sets)
            if (determinant(a.submatrix(rs, cs)).is_zero()) return {false, MinorWitness{rs, cs}};
    return {true, std::nullopt};
}

MdsResult is_mds(const Matrix& a) {
    require_square(a);
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        auto r = minors_of_size_nonsingular(a, k);
        if (!r.mds) return r;
    }
    return {true, std::nullopt};
}

bool is_involutory(const Matrix& a) {
    require_square(a);
    return a * a == Matrix::identity(a.field(), a.rows());
}

SemiInvolutory semi_involutory(const Matrix& a) {
    require_square(a);
    const Field& f = a.field();
    const std::size_t n = a.rows();
    const Matrix inv = inverse(a);
    SemiInvolutory out;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j).is_zero() != inv(i, j).is_zero()) {
                out.reason = "zero patterns of A and A^-1 differ at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                return out;
            }

    // Propagate d1_i d2_j = R_ij over each connected component of the support.
    std::vector<Elem> d1(n), d2(n);
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen_row[root]) continue;
        seen_row[root] = true;
        d1[root] = f.one();
        std::queue<std::pair<bool, std::size_t>> work;  // (is_row, index)
        work.push({true, root});
        while (!work.empty()) {
            auto [is_row, idx] = work.front();
            work.pop();
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t i = is_row ? idx : k;
                const std::size_t j = is_row ? k : idx;
                if (a(i, j).is_zero()) continue;
                const Elem ratio = f.div(inv(i, j), a(i, j));
                if (is_row) {
                    const Elem want = f.div(ratio, d1[i]);
                    if (!seen_col[j]) {
                        seen_col[j] = true;
                        d2[j] = want;
                        work.push({false, j});
                    } else if (d2[j] != want) {
                        out.reason = "ratio pattern is not rank one at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                        return out;
                    }
                } else {
                    const Elem want = f.div(ratio, d2[j]);
                    if (!seen_row[i]) {
                        seen_row[i] = true;
                        d1[i] = want;
                        work.push({true, i});
                    } else if (d1[i] != want) {
                        out.reason = "ratio pattern is not rank one at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                        return out;
                    }
                }
            }
        }
    }
    out.found = true;
    out.d1 = std::move(d1);
    out.d2 = std::move(d2);
    return out;
}

std::optional<Elem> scalar_semi_involutory(const Matrix& a, std::optional<std::uint32_t> theta_exp) {
    require_square(a);
    const Field& f = a.field();
    const Matrix inv = inverse(a);
    std::optional<Elem> c;
    for (std::size_t i = 0; i < a.rows() && !c; ++i)
        for (std::size_t j = 0; j < a.cols() && !c; ++j)
            if (!a(i, j).is_zero()) c = f.div(inv(i, j), a(i, j));
    if (!c || c->is_zero()) return std::nullopt;
    if (!(scale(a, *c) == inv)) return std::nullopt;
    if (theta_exp && f.frobenius(*c, *theta_exp) != *c) return std::nullopt;
    return c;
}

InverseSupportCheck inverse_support_check(const Matrix& a) {
    require_square(a);
    const Matrix inv = inverse(a);
    InverseSupportCheck out{true, true};
    for (Elem e : inv.entries())
        if (e.is_zero()) out.premise = false;
    if (!out.premise || a.rows() < 2) return out;
    out.conclusion = minors_of_size_nonsingular(a, a.rows() - 1).mds;
    return out;
}

}  // namespace cgc
