#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgc/circulant.hpp"

namespace cgc {

enum class HypothesisMode { Exact, Relaxed };

std::string_view to_string(HypothesisMode m) noexcept;
HypothesisMode parse_hypothesis_mode(std::string_view s);

struct Hypothesis {
    bool exact;    // g^2 == m * ord(lambda) + 1
    bool relaxed;  // g^2 == 1 (mod m * ord(lambda))
    bool holds(HypothesisMode mode) const noexcept { return mode == HypothesisMode::Exact ? exact : relaxed; }
};

Hypothesis involution_hypothesis(const CirculantSpec& spec);

struct Condition {
    std::string name;
    bool value;
};

struct Witness {
    enum class Kind { Residue, Minor, Product };
    Kind kind;
    /// Residue: the violating Q; Product: h * h(x^g).
    std::vector<std::uint32_t> codes;
    /// Residue: image of Q under the defining map.
    std::vector<std::uint32_t> image;
    std::optional<MinorWitness> minor;
};

std::string_view to_string(Witness::Kind k) noexcept;

struct CheckReport {
    bool verdict = false;
    std::vector<Condition> conditions;
    std::optional<Witness> witness;
    HypothesisMode hypothesis_mode = HypothesisMode::Relaxed;
    std::optional<Hypothesis> hypothesis;
    /// Polynomial-level conditions agree with the matrix predicates.
    bool consistent = true;

    std::optional<bool> condition(std::string_view name) const;
};

/// h * h(x^g) == 1 in the (skew) quotient ring. Throws InvalidSpec when the
/// spec is not well defined.
bool involutory_condition(const CirculantSpec& spec);

/// The product h * h(x^g) itself.
std::vector<std::uint32_t> involution_product(const CirculantSpec& spec);

/// Largest q^m the weight oracle will enumerate.
inline constexpr std::uint64_t kMaxSearchSpace = std::uint64_t{1} << 24;

/// Checks wt(Q) + wt(Q(x^g) h) >= m + 1 for every nonzero residue Q, using
/// ring arithmetic only. The first violating Q in code order is the witness.
/// Throws SearchSpaceTooLarge.
CheckReport weight_mds_oracle(const CirculantSpec& spec, unsigned workers = 1);

/// Weight oracle and involutory condition, with both matrix predicates
/// recorded alongside. Throws HypothesisViolated when the involution
/// hypothesis fails in the chosen mode.
CheckReport involutory_mds_check(const CirculantSpec& spec, HypothesisMode mode = HypothesisMode::Relaxed,
                                 unsigned workers = 1);

/// wt(h) == 3 and wt(h^{-1}) == 3 in F_q[x]/(x^3 - 1). Throws NotAUnit, or
/// HypothesisViolated when the ring is not F_q[x]/(x^3 - 1) or gcd(g, 3) != 1.
bool order3_characterization(const QuotientElement& h, std::size_t g);

/// Every 2 x 2 minor of the g-circulant of h is nonsingular, in
/// F_q[x]/(x^4 - 1) under wt(h) == wt(h^{-1}). Throws NotAUnit or
/// HypothesisViolated.
bool order4_characterization(const QuotientElement& h, std::size_t g);

/// c1 c2 (h * h(x^g)) == 1. Throws ZeroScalar, NotInFixedField, InvalidSpec.
bool scalar_semi_involutory_condition(const CirculantSpec& spec, Elem c1, Elem c2);

}  // namespace cgc
