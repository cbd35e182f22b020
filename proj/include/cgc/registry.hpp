#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cgc/gf.hpp"

namespace cgc {

/// Environment variable naming a JSON file `{"name": "p^n:c0,...,cn", ...}`
/// whose entries extend or override the built-in field names.
inline constexpr const char* kRegistryEnvVar = "CGC_FIELD_REGISTRY";

struct NamedField {
    std::string name;
    std::string description;  // p^n:c0,...,cn
    std::string symbol;       // generator symbol used by the pretty-printer
};

/// Built-in fields: F8 (x^3+x+1, "g"), F9 (x^2+1, "b"), F16 (x^4+x+1, "b"),
/// F25 (x^2+4x+1, "a").
const std::vector<NamedField>& builtin_fields();

/// Parses `p^n:c0,c1,...,cn`. Throws Parse on malformed text and the Field
/// constructor errors on invalid moduli.
Field parse_field(std::string_view text);

/// Accepts a registry name, a `p^n:...` description, or a bare order q.
/// A bare q maps to GF(q) for prime q, to the registry field of that order if
/// one exists, and otherwise to the irreducible modulus with the smallest
/// code.
Field resolve_field(std::string_view text);

/// Order-q field as chosen by resolve_field for a bare q.
Field default_field(std::uint32_t q);

/// Registry name for a field, if any.
std::optional<std::string> field_name(const Field& f);

/// Generator symbol for rendering ("x" when the field is not registered).
std::string generator_symbol(const Field& f);

/// Smallest-code root in `f` of a polynomial over GF(p) given by little-endian
/// coefficients; e.g. {1,1,1} gives the element the registry calls omega in
/// F16. Returns nullopt when the polynomial has no root in f.
std::optional<Elem> root_of(const Field& f, const std::vector<std::uint32_t>& poly);

}  // namespace cgc
