#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cgc {

enum class ErrorKind {
    NonPrimeCharacteristic,
    InvalidModulus,
    ReducibleModulus,
    FieldTooLarge,
    ZeroInverse,
    MixedFields,
    ZeroElement,
    OddCharacteristic,
    DivisionByZero,
    ConstantPolynomial,
    MixedRings,
    NotAUnit,
    ZeroLambda,
    InvalidRing,
    DimensionMismatch,
    NonSquare,
    Singular,
    IndexOutOfRange,
    InvalidSpec,
    NotCirculantProduct,
    HypothesisViolated,
    SearchSpaceTooLarge,
    ZeroScalar,
    NotInFixedField,
    Overflow,
    Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `witness()` carries element codes that
/// certify the failure when one exists (a modulus factor, a non-trivial gcd).
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what, std::vector<std::uint32_t> witness = {})
        : std::runtime_error(what), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

   private:
    ErrorKind kind_;
    std::vector<std::uint32_t> witness_;
};

}  // namespace cgc
