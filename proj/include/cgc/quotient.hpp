#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cgc/poly.hpp"

namespace cgc {

/// F_q[x]/(x^m - lambda), lambda != 0.
class QuotientRing {
   public:
    /// Throws ZeroLambda for lambda == 0 and InvalidRing for m == 0.
    QuotientRing(Field field, std::size_t m, Elem lambda);

    const Field& field() const noexcept { return field_; }
    std::size_t m() const noexcept { return m_; }
    Elem lambda() const noexcept { return lambda_; }
    /// ord(lambda).
    std::uint64_t lambda_order() const noexcept { return order_; }
    /// x^m - lambda.
    Poly modulus() const { return Poly::x_pow_minus(field_, m_, lambda_); }
    /// q^m; throws Overflow beyond 2^63.
    std::uint64_t size() const;

    friend bool operator==(const QuotientRing& a, const QuotientRing& b) noexcept {
        return a.field_ == b.field_ && a.m_ == b.m_ && a.lambda_ == b.lambda_;
    }

   private:
    Field field_;
    std::size_t m_;
    Elem lambda_;
    std::uint64_t order_;
};

/// Residue class held by its unique representative of degree < m.
class QuotientElement {
   public:
    /// Coefficients beyond m-1 are reduced with x^m = lambda.
    QuotientElement(QuotientRing ring, std::vector<Elem> coeffs);
    QuotientElement(QuotientRing ring, const Poly& p);

    static QuotientElement zero(const QuotientRing& r);
    static QuotientElement one(const QuotientRing& r);
    /// Class of c * x^k.
    static QuotientElement monomial(const QuotientRing& r, Elem c, std::size_t k);
    static QuotientElement from_codes(const QuotientRing& r, const std::vector<std::uint32_t>& codes);
    /// The residue whose coefficient vector has base-q code `index`
    /// (coefficient i is digit i); used to enumerate the ring.
    static QuotientElement from_index(const QuotientRing& r, std::uint64_t index);

    const QuotientRing& ring() const noexcept { return ring_; }
    /// Exactly m coefficients.
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    std::vector<std::uint32_t> codes() const;
    Poly lift() const { return Poly(ring_.field(), c_); }
    bool is_zero() const noexcept;
    std::uint64_t index() const noexcept;

    friend bool operator==(const QuotientElement& a, const QuotientElement& b) noexcept {
        return a.ring_ == b.ring_ && a.c_ == b.c_;
    }

   private:
    QuotientRing ring_;
    std::vector<Elem> c_;
};

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
QuotientElement operator-(const QuotientElement& a, const QuotientElement& b);
QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
QuotientElement scale(const QuotientElement& a, Elem c);

/// Inverse via extended Euclid against x^m - lambda. Throws NotAUnit whose
/// witness is the monic gcd's coefficient codes.
QuotientElement inverse(const QuotientElement& a);
bool is_unit(const QuotientElement& a);

std::size_t hamming_weight(const QuotientElement& a) noexcept;
std::size_t hamming_weight(const Poly& a) noexcept;

struct Substitution {
    QuotientElement value;
    /// g = 1 (mod ord(lambda)), i.e. x^m - lambda divides x^(mg) - lambda and
    /// the substitution is a well-defined map on residue classes.
    bool well_defined;
};

/// sum a_i x^(i*g) reduced with x^m = lambda, evaluated on the canonical
/// representative.
Substitution substitute_power(const QuotientElement& a, std::size_t g);

/// g = 1 (mod ord(lambda)). Throws ZeroLambda for lambda == 0.
bool divides_condition(const Field& f, std::size_t m, std::size_t g, Elem lambda);

struct UnitsCount {
    /// prod over factors f_i^{e_i} of (q^deg f_i - 1)^{e_i}.
    std::uint64_t product_formula;
    /// prod of q^{(e_i - 1) deg f_i} (q^deg f_i - 1), the true unit count.
    std::uint64_t local_ring;
};

UnitsCount units_count(const QuotientRing& r);
/// Both counts from an explicit factorization of x^m - lambda.
UnitsCount units_count(const Factorization& fac, std::uint32_t q);

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e);

}  // namespace cgc
