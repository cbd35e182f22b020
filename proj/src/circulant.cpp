#include "cgc/circulant.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "cgc/registry.hpp"

namespace cgc {

void CirculantSpec::validate() const {
    if (m == 0) throw Error(ErrorKind::InvalidSpec, "m must be at least 1");
    if (lambda.is_zero()) throw Error(ErrorKind::InvalidSpec, "lambda must be nonzero");
    if (lambda.code >= field.q()) throw Error(ErrorKind::InvalidSpec, "lambda code out of range");
    if (g < 1 || g > m) throw Error(ErrorKind::InvalidSpec, "g must lie in 1..m");
    if (h.size() != m) throw Error(ErrorKind::InvalidSpec, "h must have exactly m coefficients");
    for (Elem e : h)
        if (e.code >= field.q()) throw Error(ErrorKind::InvalidSpec, "h coefficient code out of range");
    if (is_skew()) {
        try {
            skew_ring();
        } catch (const Error& e) {
            throw Error(ErrorKind::InvalidSpec, e.what());
        }
    }
}

bool CirculantSpec::well_defined() const {
    const std::uint64_t r = lambda_order();
    return g % r == 1 % r;
}

CirculantSpec make_spec(const Field& f, std::size_t m, std::size_t g, std::uint32_t lambda,
                        const std::vector<std::uint32_t>& h, std::uint32_t theta_exp) {
    CirculantSpec s{f, m, g, Elem{lambda}, {}, theta_exp % f.n()};
    for (auto c : h) s.h.push_back(Elem{c});
    s.validate();
    return s;
}

Matrix build(const CirculantSpec& spec) {
    spec.validate();
    const std::size_t m = spec.m;
    Matrix a(spec.field, m, m);
    if (spec.is_skew()) {
        const SkewQuotientRing ring = spec.skew_ring();
        const SkewQuotientElement h(ring, spec.h);
        for (std::size_t i = 0; i < m; ++i) {
            const auto basis = SkewQuotientElement::monomial(ring, spec.field.one(), i);
            const auto row = substitute_power(basis, spec.g) * h;
            for (std::size_t j = 0; j < m; ++j) a(i, j) = row.coeffs()[j];
        }
    } else {
        const QuotientRing ring = spec.ring();
        const QuotientElement h(ring, spec.h);
        for (std::size_t i = 0; i < m; ++i) {
            const auto basis = QuotientElement::monomial(ring, spec.field.one(), i);
            const auto row = substitute_power(basis, spec.g).value * h;
            for (std::size_t j = 0; j < m; ++j) a(i, j) = row.coeffs()[j];
        }
    }
    return a;
}

Elem g_circulant_entry(const std::vector<Elem>& c, std::size_t m, std::size_t g, std::size_t i, std::size_t j) {
    if (m == 0 || c.size() != m || i >= m || j >= m)
        throw Error(ErrorKind::IndexOutOfRange, "g-circulant entry index out of range");
    const std::size_t shift = (i * g) % m;
    return c[(j + m - shift) % m];
}

ProductLaw product_shift_law(const CirculantSpec& s1, const CirculantSpec& s2) {
    s1.validate();
    s2.validate();
    if (!(s1.field == s2.field) || s1.m != s2.m || s1.lambda != s2.lambda || s1.theta_exp != s2.theta_exp)
        throw Error(ErrorKind::InvalidSpec, "product law needs the same field, m, lambda and theta");
    if (!s1.well_defined() || !s2.well_defined())
        throw Error(ErrorKind::InvalidSpec, "product law needs both shifts to satisfy g = 1 mod ord(lambda)");
    const Matrix product = build(s1) * build(s2);
    CirculantSpec rec = s1;
    rec.g = (s1.g * s2.g - 1) % s1.m + 1;
    for (std::size_t j = 0; j < s1.m; ++j) rec.h[j] = product(0, j);
    const Matrix rebuilt = build(rec);
    for (std::size_t i = 0; i < s1.m; ++i)
        for (std::size_t j = 0; j < s1.m; ++j)
            if (rebuilt(i, j) != product(i, j))
                throw Error(ErrorKind::NotCirculantProduct,
                            "product is not consta-" + std::to_string(rec.g) + "-circulant: row " + std::to_string(i) +
                                " breaks the row law",
                            {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    return {product, rec};
}

CirculantSpec hadamard_power(const CirculantSpec& spec, unsigned s) {
    if (spec.field.p() != 2) throw Error(ErrorKind::OddCharacteristic, "Hadamard 2^s-power needs characteristic 2");
    CirculantSpec out = spec;
    for (auto& c : out.h) c = spec.field.frobenius(c, s);
    out.lambda = spec.field.frobenius(spec.lambda, s);
    return out;
}

std::string_view to_string(CirculantKind k) noexcept {
    switch (k) {
        case CirculantKind::Circulant: return "circulant";
        case CirculantKind::LeftCirculant: return "left-circulant";
        case CirculantKind::GCirculant: return "g-circulant";
        case CirculantKind::ConstaGCirculant: return "consta-g-circulant";
        case CirculantKind::ConstaThetaGCirculant: return "consta-theta_g-circulant";
    }
    return "unknown";
}

CirculantKind classify(const CirculantSpec& spec) {
    if (spec.is_skew()) return CirculantKind::ConstaThetaGCirculant;
    if (spec.lambda != spec.field.one()) return CirculantKind::ConstaGCirculant;
    if (spec.g == 1 || spec.m == 1) return CirculantKind::Circulant;
    if (spec.g == spec.m - 1) return CirculantKind::LeftCirculant;
    return CirculantKind::GCirculant;
}

namespace {

std::uint64_t to_uint(std::string_view s, std::string_view key) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw Error(ErrorKind::Parse, "malformed value for " + std::string(key) + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::uint32_t> to_codes(std::string_view s) {
    std::vector<std::uint32_t> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(static_cast<std::uint32_t>(to_uint(s.substr(0, comma), "h")));
        if (comma == std::string_view::npos) break;
        s = s.substr(comma + 1);
    }
    return out;
}

}  // namespace

CirculantSpec parse_spec(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    while (!text.empty()) {
        const auto semi = text.find(';');
        const std::string_view item = text.substr(0, semi);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw Error(ErrorKind::Parse, "spec item without '=': '" + std::string(item) + "'");
        kv[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
        if (semi == std::string_view::npos) break;
        text = text.substr(semi + 1);
    }
    for (const char* key : {"q", "m", "g", "lambda", "h"})
        if (!kv.count(key)) throw Error(ErrorKind::Parse, std::string("spec is missing '") + key + "'");
    for (const auto& [k, v] : kv)
        if (k != "q" && k != "m" && k != "g" && k != "lambda" && k != "h" && k != "theta")
            throw Error(ErrorKind::Parse, "unknown spec key '" + k + "'");
    const Field f = resolve_field(kv["q"]);
    const auto theta = kv.count("theta") ? to_uint(kv["theta"], "theta") : 0;
    return make_spec(f, to_uint(kv["m"], "m"), to_uint(kv["g"], "g"),
                     static_cast<std::uint32_t>(to_uint(kv["lambda"], "lambda")), to_codes(kv["h"]),
                     static_cast<std::uint32_t>(theta));
}

std::string format_spec(const CirculantSpec& spec) {
    std::ostringstream os;
    os << "q=" << spec.field.describe() << ";m=" << spec.m << ";g=" << spec.g << ";lambda=" << spec.lambda.code << ";h=";
    for (std::size_t i = 0; i < spec.h.size(); ++i) os << (i ? "," : "") << spec.h[i].code;
    os << ";theta=" << spec.theta_exp;
    return os.str();
}

}  // namespace cgc
