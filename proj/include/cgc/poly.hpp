#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgc/gf.hpp"

namespace cgc {

/// Dense polynomial over a finite field, little-endian, canonical (no
/// trailing zeros; the zero polynomial has no coefficients).
class Poly {
   public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly monomial(const Field& f, Elem c, std::size_t k);
    static Poly constant(const Field& f, Elem c) { return monomial(f, c, 0); }
    /// x^m - lambda.
    static Poly x_pow_minus(const Field& f, std::size_t m, Elem lambda);
    /// Little-endian element codes.
    static Poly from_codes(const Field& f, const std::vector<std::uint32_t>& codes);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    std::vector<std::uint32_t> codes() const;

    bool is_zero() const noexcept { return c_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
    /// Leading coefficient; zero for the zero polynomial.
    Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == field_.one(); }
    Poly monic() const;
    std::size_t weight() const noexcept;
    Elem evaluate(Elem x) const noexcept;

    friend bool operator==(const Poly& a, const Poly& b) noexcept;

   private:
    void normalize() noexcept;
    Field field_;
    std::vector<Elem> c_;
};

/// deg(a) < deg(b) with the zero polynomial below every other degree.
bool degree_less(const Poly& a, const Poly& b) noexcept;

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

/// (quotient, remainder). Throws DivisionByZero for b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g, u, v;  // u*a + v*b = g, g monic (or zero)
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// a(x^g).
Poly substitute_power(const Poly& a, std::size_t g);

/// Throws ConstantPolynomial for deg f < 1.
bool is_irreducible(const Poly& f);

struct Factorization {
    Elem scalar;
    std::vector<std::pair<Poly, std::size_t>> factors;  // monic irreducible, multiplicity

    Poly expand(const Field& f) const;
};

/// Complete factorization by trial division with monic candidates in
/// (degree, code) order, so factors come out sorted the same way.
/// Throws ConstantPolynomial for deg f < 1.
Factorization factor(const Poly& f);

/// "(x+1)^2(x^2+x+1)"-style rendering with coefficients as element codes.
std::string render_factorization(const Factorization& fac);
/// Ascending-power rendering with codes, e.g. "1+x+2x^2".
std::string render_poly(const Poly& p, const std::string& var = "x");

}  // namespace cgc
