#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cgc/matrix.hpp"
#include "cgc/quotient.hpp"
#include "cgc/skew.hpp"

namespace cgc {

/// Parameters of a consta-g-circulant matrix (theta_exp == 0) or a
/// consta-theta_g-circulant matrix (theta_exp != 0): the matrix of
/// Q -> Q(x^g) h(x) on F_q[x]/(x^m - lambda), or of Q -> Q<X^g> * h<X> on the
/// skew quotient, in the basis 1, x, ..., x^(m-1).
struct CirculantSpec {
    Field field;
    std::size_t m = 0;
    std::size_t g = 1;
    Elem lambda{1};
    std::vector<Elem> h;  // h_0 .. h_{m-1}
    std::uint32_t theta_exp = 0;

    /// Throws InvalidSpec when lambda == 0, g outside 1..m, |h| != m, or (skew
    /// case) X^m - lambda is not a two-sided ideal.
    void validate() const;
    /// g = 1 (mod ord(lambda)).
    bool well_defined() const;
    std::uint64_t lambda_order() const { return field.mult_order(lambda); }
    bool is_skew() const noexcept { return theta_exp % field.n() != 0; }

    QuotientRing ring() const { return QuotientRing(field, m, lambda); }
    SkewQuotientRing skew_ring() const { return SkewQuotientRing(field, theta_exp, m, lambda); }
    QuotientElement h_element() const { return QuotientElement(ring(), h); }
    SkewQuotientElement h_skew_element() const { return SkewQuotientElement(skew_ring(), h); }
};

/// Builds a spec from element codes; throws InvalidSpec on failure.
CirculantSpec make_spec(const Field& f, std::size_t m, std::size_t g, std::uint32_t lambda,
                        const std::vector<std::uint32_t>& h, std::uint32_t theta_exp = 0);

/// Row i is the image of the i-th basis monomial.
Matrix build(const CirculantSpec& spec);

/// Closed form a_ij = c_{(j - i g) mod m} for lambda = 1.
Elem g_circulant_entry(const std::vector<Elem>& c, std::size_t m, std::size_t g, std::size_t i, std::size_t j);

struct ProductLaw {
    Matrix product;
    CirculantSpec recovered;
};

/// Multiplies build(s1) * build(s2) and recovers a spec with shift g1*g2
/// (reduced into 1..m) reproducing the product. Throws InvalidSpec when the
/// specs are incompatible or not well defined, NotCirculantProduct (witness:
/// first mismatching row index) when no such spec reproduces the product.
ProductLaw product_shift_law(const CirculantSpec& s1, const CirculantSpec& s2);

/// Coefficient-wise 2^s-power of x^m - lambda + h: h_i -> h_i^(2^s) and
/// lambda -> lambda^(2^s). Throws OddCharacteristic.
CirculantSpec hadamard_power(const CirculantSpec& spec, unsigned s);

enum class CirculantKind { Circulant, LeftCirculant, GCirculant, ConstaGCirculant, ConstaThetaGCirculant };

std::string_view to_string(CirculantKind k) noexcept;
CirculantKind classify(const CirculantSpec& spec);

/// `q=<field>;m=<int>;g=<int>;lambda=<code>;h=<c0,c1,...>;theta=<k>`.
/// The field may be any form accepted by resolve_field; theta defaults to 0.
CirculantSpec parse_spec(std::string_view text);
std::string format_spec(const CirculantSpec& spec);

}  // namespace cgc
