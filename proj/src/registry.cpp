#include "cgc/registry.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>

#include <json.hpp>

namespace cgc {

namespace {

std::uint32_t parse_uint(std::string_view s, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::Parse, "malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::map<std::string, NamedField> env_fields() {
    std::map<std::string, NamedField> out;
    const char* path = std::getenv(kRegistryEnvVar);
    if (!path || !*path) return out;
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, std::string("cannot open field registry ") + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("field registry is not valid JSON: ") + e.what());
    }
    for (auto& [name, value] : j.items()) {
        NamedField nf{name, "", "x"};
        if (value.is_string()) {
            nf.description = value.get<std::string>();
        } else if (value.is_object()) {
            nf.description = value.at("field").get<std::string>();
            if (value.contains("symbol")) nf.symbol = value.at("symbol").get<std::string>();
        } else {
            throw Error(ErrorKind::Parse, "registry entry '" + name + "' must be a string or object");
        }
        out[name] = nf;
    }
    return out;
}

std::optional<NamedField> lookup(std::string_view name) {
    auto extra = env_fields();
    if (auto it = extra.find(std::string(name)); it != extra.end()) return it->second;
    for (const auto& nf : builtin_fields())
        if (nf.name == name) return nf;
    return std::nullopt;
}

}  // namespace

const std::vector<NamedField>& builtin_fields() {
    static const std::vector<NamedField> fields = {
        {"F8", "2^3:1,1,0,1", "g"},
        {"F9", "3^2:1,0,1", "b"},
        {"F16", "2^4:1,1,0,0,1", "b"},
        {"F25", "5^2:1,4,1", "a"},
    };
    return fields;
}

Field parse_field(std::string_view text) {
    const auto caret = text.find('^');
    const auto colon = text.find(':');
    if (caret == std::string_view::npos || colon == std::string_view::npos || caret > colon)
        throw Error(ErrorKind::Parse, "field description must look like p^n:c0,...,cn, got '" + std::string(text) + "'");
    const auto p = parse_uint(text.substr(0, caret), "characteristic");
    const auto n = parse_uint(text.substr(caret + 1, colon - caret - 1), "degree");
    std::vector<std::uint32_t> modulus;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto comma = rest.find(',');
        modulus.push_back(parse_uint(rest.substr(0, comma), "modulus coefficient"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return Field(p, n, std::move(modulus));
}

Field default_field(std::uint32_t q) {
    if (is_prime(q)) return Field::prime(q);
    for (const auto& nf : builtin_fields()) {
        Field f = parse_field(nf.description);
        if (f.q() == q) return f;
    }
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint32_t n = 0;
    std::uint32_t rest = q;
    while (p && rest % p == 0) {
        rest /= p;
        ++n;
    }
    if (p == 0 || rest != 1) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
    for (std::uint32_t code = 0; code < q; ++code) {
        std::vector<std::uint32_t> modulus(n + 1, 0);
        std::uint32_t c = code;
        for (std::uint32_t i = 0; i < n; ++i) {
            modulus[i] = c % p;
            c /= p;
        }
        modulus[n] = 1;
        try {
            return Field(p, n, modulus);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ReducibleModulus) throw;
        }
    }
    throw Error(ErrorKind::InvalidModulus, "no irreducible modulus found");
}

Field resolve_field(std::string_view text) {
    if (auto nf = lookup(text)) return parse_field(nf->description);
    if (text.find('^') != std::string_view::npos) return parse_field(text);
    return default_field(parse_uint(text, "field order"));
}

std::optional<std::string> field_name(const Field& f) {
    for (const auto& [name, nf] : env_fields())
        if (parse_field(nf.description) == f) return name;
    for (const auto& nf : builtin_fields())
        if (parse_field(nf.description) == f) return nf.name;
    return std::nullopt;
}

std::string generator_symbol(const Field& f) {
    for (const auto& [name, nf] : env_fields())
        if (parse_field(nf.description) == f) return nf.symbol;
    for (const auto& nf : builtin_fields())
        if (parse_field(nf.description) == f) return nf.symbol;
    return "x";
}

std::optional<Elem> root_of(const Field& f, const std::vector<std::uint32_t>& poly) {
    for (Elem a : f.elements()) {
        Elem acc = f.zero();
        for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, a), f.from_int(poly[i]));
        if (acc.is_zero()) return a;
    }
    return std::nullopt;
}

}  // namespace cgc
