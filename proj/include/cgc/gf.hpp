#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cgc/errors.hpp"

namespace cgc {

/// An element of GF(p^n) identified by its canonical code sum(c_i * p^i),
/// where c_i are the coordinates in the polynomial basis 1, x, ..., x^(n-1).
/// An Elem carries no field; arithmetic goes through the owning Field.
struct Elem {
    std::uint32_t code = 0;

    constexpr bool is_zero() const noexcept { return code == 0; }
    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

/// GF(p^n) defined by an explicit monic irreducible modulus.
///
/// Field is a cheap-to-copy immutable handle; copies share the lookup tables.
/// Two fields compare equal iff (p, n, modulus) agree.
class Field {
   public:
    /// Largest supported field order.
    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    /// `modulus` is little-endian over GF(p) with length n + 1 and leading
    /// coefficient 1. Throws NonPrimeCharacteristic, InvalidModulus,
    /// ReducibleModulus (witness: a monic factor) or FieldTooLarge.
    Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

    /// GF(p) with modulus x.
    static Field prime(std::uint32_t p);

    std::uint32_t p() const noexcept;
    std::uint32_t n() const noexcept;
    std::uint32_t q() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Element with the given canonical code; throws IndexOutOfRange if code >= q.
    Elem element(std::uint32_t code) const;
    /// Image of an integer under Z -> GF(p) -> GF(p^n).
    Elem from_int(std::int64_t v) const noexcept;
    /// Element from polynomial-basis coordinates over GF(p), little-endian.
    Elem from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs(Elem a) const;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws ZeroInverse for a == 0.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    /// Non-negative exponent; pow(0, 0) == 1.
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Signed exponent; negative exponents require a != 0.
    Elem pow(Elem a, std::int64_t e) const;

    /// Smallest r >= 1 with a^r = 1. Throws ZeroElement for a == 0.
    std::uint64_t mult_order(Elem a) const;
    /// a^(p^k); k is reduced mod n, so frobenius(a, n) == a.
    Elem frobenius(Elem a, std::int64_t k) const noexcept;
    /// Unique b with b^2 = a. Throws OddCharacteristic when p != 2.
    Elem sqrt_char2(Elem a) const;

    /// All q elements in increasing code order.
    std::vector<Elem> elements() const;
    std::vector<Elem> nonzero_elements() const;

    /// `p^n:c0,c1,...,cn`, the textual field description.
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

   private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

bool is_prime(std::uint64_t v) noexcept;

/// Renders `a` as a polynomial in the generator symbol, highest power first,
/// e.g. "b^3+b^2" or "2a+3". Zero renders as "0".
std::string render_element(const Field& f, Elem a, const std::string& symbol);

}  // namespace cgc
