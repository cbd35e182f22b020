#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cgc/gf.hpp"

namespace cgc {

/// F_q[X; theta] with theta(a) = a^(p^k). Coefficients sit to the left of
/// the powers of X, and X * a = theta(a) X.
class SkewPoly {
   public:
    /// theta_exp is reduced mod n.
    SkewPoly(Field field, std::int64_t theta_exp, std::vector<Elem> coeffs = {});

    static SkewPoly monomial(const Field& f, std::int64_t theta_exp, Elem c, std::size_t k);

    const Field& field() const noexcept { return field_; }
    std::uint32_t theta_exp() const noexcept { return theta_; }
    /// ord(theta) = n / gcd(n, theta_exp).
    std::uint32_t theta_order() const noexcept;
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
    Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }

    /// theta^k(a); negative k uses the inverse automorphism.
    Elem twist(Elem a, std::int64_t k) const noexcept { return field_.frobenius(a, std::int64_t(theta_) * k); }

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) noexcept {
        return a.field_ == b.field_ && a.theta_ == b.theta_ && a.c_ == b.c_;
    }

   private:
    Field field_;
    std::uint32_t theta_;
    std::vector<Elem> c_;
};

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
/// (a_i X^i) * (b_j X^j) = a_i theta^i(b_j) X^(i+j).
SkewPoly operator*(const SkewPoly& a, const SkewPoly& b);

/// Commutes with every element: nonzero coefficients only at indices that are
/// multiples of ord(theta), each fixed by theta.
bool is_central(const SkewPoly& f);

/// a = quotient * b + remainder, deg remainder < deg b. Throws DivisionByZero.
std::pair<SkewPoly, SkewPoly> divmod_right(const SkewPoly& a, const SkewPoly& b);
/// a = b * quotient + remainder, deg remainder < deg b. Throws DivisionByZero.
std::pair<SkewPoly, SkewPoly> divmod_left(const SkewPoly& a, const SkewPoly& b);

/// F_q[X; theta]/(X^m - lambda). The ideal is two-sided only when ord(theta)
/// divides m and theta(lambda) = lambda; construction enforces both.
class SkewQuotientRing {
   public:
    /// Throws ZeroLambda, InvalidRing (m == 0 or ideal not two-sided).
    SkewQuotientRing(Field field, std::int64_t theta_exp, std::size_t m, Elem lambda);

    const Field& field() const noexcept { return field_; }
    std::uint32_t theta_exp() const noexcept { return theta_; }
    std::size_t m() const noexcept { return m_; }
    Elem lambda() const noexcept { return lambda_; }
    std::uint64_t lambda_order() const noexcept { return order_; }
    SkewPoly modulus() const;

    friend bool operator==(const SkewQuotientRing& a, const SkewQuotientRing& b) noexcept {
        return a.field_ == b.field_ && a.theta_ == b.theta_ && a.m_ == b.m_ && a.lambda_ == b.lambda_;
    }

   private:
    Field field_;
    std::uint32_t theta_;
    std::size_t m_;
    Elem lambda_;
    std::uint64_t order_;
};

class SkewQuotientElement {
   public:
    /// Reduced by right division by X^m - lambda.
    SkewQuotientElement(SkewQuotientRing ring, std::vector<Elem> coeffs);
    SkewQuotientElement(SkewQuotientRing ring, const SkewPoly& p);

    static SkewQuotientElement one(const SkewQuotientRing& r);
    static SkewQuotientElement monomial(const SkewQuotientRing& r, Elem c, std::size_t k);
    static SkewQuotientElement from_index(const SkewQuotientRing& r, std::uint64_t index);

    const SkewQuotientRing& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    std::vector<std::uint32_t> codes() const;
    SkewPoly lift() const { return SkewPoly(ring_.field(), ring_.theta_exp(), c_); }
    bool is_zero() const noexcept;

    friend bool operator==(const SkewQuotientElement& a, const SkewQuotientElement& b) noexcept {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }

   private:
    SkewQuotientRing ring_;
    std::vector<Elem> c_;
};

SkewQuotientElement operator+(const SkewQuotientElement& a, const SkewQuotientElement& b);
SkewQuotientElement operator*(const SkewQuotientElement& a, const SkewQuotientElement& b);

/// Two-sided inverse from the right extended Euclidean algorithm on
/// (X^m - lambda, a). Throws NotAUnit with the right gcd as witness.
SkewQuotientElement inverse(const SkewQuotientElement& a);

std::size_t hamming_weight(const SkewQuotientElement& a) noexcept;

/// sum a_i X^(i*g), reduced; coefficients stay on the left and are not twisted.
SkewQuotientElement substitute_power(const SkewQuotientElement& a, std::size_t g);

}  // namespace cgc
