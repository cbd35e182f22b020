#include "cgc/gf.hpp"

#include <algorithm>
#include <sstream>

namespace cgc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::ZeroInverse: return "ZeroInverse";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::OddCharacteristic: return "OddCharacteristic";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorKind::MixedRings: return "MixedRings";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::ZeroLambda: return "ZeroLambda";
        case ErrorKind::InvalidRing: return "InvalidRing";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::NotCirculantProduct: return "NotCirculantProduct";
        case ErrorKind::HypothesisViolated: return "HypothesisViolated";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::ZeroScalar: return "ZeroScalar";
        case ErrorKind::NotInFixedField: return "NotInFixedField";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t v) noexcept {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

// Dense polynomials over GF(p), little-endian, used only while validating
// and tabulating the field.
void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

Digits rem_mod_p(Digits a, const Digits& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
        trim(a);
    }
    return a;
}

Digits digits_of(std::uint64_t code, std::uint32_t p, std::size_t len) {
    Digits d(len);
    for (std::size_t i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    return d;
}

}  // namespace

struct Field::Tables {
    std::uint32_t p = 0, n = 0, q = 0;
    Digits modulus;
    std::vector<std::uint32_t> pw;        // p^i, i <= n
    std::vector<std::uint32_t> add_table;  // q*q when q is small, else empty
    std::vector<std::uint32_t> neg_table;
    std::vector<std::uint32_t> log_table;  // log_table[0] unused
    std::vector<std::uint32_t> exp_table;  // length 2(q-1)

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
        if (p == 2) return a ^ b;
        std::uint32_t r = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            const std::uint32_t s = (a % p + b % p) % p;
            r += s * pw[i];
            a /= p;
            b /= p;
        }
        return r;
    }

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
        Digits da = digits_of(a, p, n), db = digits_of(b, p, n);
        Digits prod(2 * n, 0);
        for (std::uint32_t i = 0; i < n; ++i)
            for (std::uint32_t j = 0; j < n; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
        Digits r = rem_mod_p(prod, modulus, p);
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * pw[i];
        return code;
    }
};

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    if (n == 0) throw Error(ErrorKind::InvalidModulus, "extension degree must be at least 1");
    if (modulus.size() != std::size_t(n) + 1)
        throw Error(ErrorKind::InvalidModulus, "modulus must have exactly n+1 coefficients");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorKind::InvalidModulus, "modulus coefficient out of range for GF(p)");
    if (modulus.back() != 1) throw Error(ErrorKind::InvalidModulus, "modulus must be monic");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "field order exceeds 65536");
    }

    // Trial division by every monic polynomial of degree 1..n/2.
    for (std::uint32_t d = 1; 2 * d <= n; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Digits f = digits_of(c, p, d);
            f.push_back(1);
            if (rem_mod_p(modulus, f, p).empty())
                throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")", f);
        }
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->n = n;
    t->q = static_cast<std::uint32_t>(q);
    t->modulus = std::move(modulus);
    t->pw.resize(n + 1);
    t->pw[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) t->pw[i] = t->pw[i - 1] * p;

    t->neg_table.resize(t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
        std::uint32_t r = 0, x = a;
        for (std::uint32_t i = 0; i < n; ++i) {
            r += ((p - x % p) % p) * t->pw[i];
            x /= p;
        }
        t->neg_table[a] = r;
    }
    if (t->q <= 1024) {
        t->add_table.resize(std::size_t(t->q) * t->q);
        for (std::uint32_t a = 0; a < t->q; ++a)
            for (std::uint32_t b = 0; b < t->q; ++b) t->add_table[std::size_t(a) * t->q + b] = t->add_digits(a, b);
    }

    const std::uint32_t order = t->q - 1;
    t->log_table.assign(t->q, 0);
    t->exp_table.assign(2 * std::size_t(order), 0);
    bool found = false;
    for (std::uint32_t g = (t->q == 2 ? 1 : 2); g < t->q && !found; ++g) {
        std::uint32_t x = 1;
        std::uint32_t k = 0;
        do {
            t->exp_table[k] = x;
            x = t->mul_raw(x, g);
            ++k;
        } while (x != 1 && k < order);
        found = (x == 1 && k == order);
    }
    for (std::uint32_t k = 0; k < order; ++k) {
        t->exp_table[k + order] = t->exp_table[k];
        t->log_table[t->exp_table[k]] = k;
    }
    t_ = std::move(t);
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p))
        throw Error(ErrorKind::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    return Field(p, 1, {0, 1});
}

std::uint32_t Field::p() const noexcept { return t_->p; }
std::uint32_t Field::n() const noexcept { return t_->n; }
std::uint32_t Field::q() const noexcept { return t_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return t_->modulus; }

Elem Field::element(std::uint32_t code) const {
    if (code >= t_->q)
        throw Error(ErrorKind::IndexOutOfRange,
                    "element code " + std::to_string(code) + " out of range for q=" + std::to_string(t_->q));
    return Elem{code};
}

Elem Field::from_int(std::int64_t v) const noexcept {
    const std::int64_t p = t_->p;
    return Elem{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() > t_->n) throw Error(ErrorKind::IndexOutOfRange, "too many coordinates for field element");
    std::uint32_t code = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= t_->p) throw Error(ErrorKind::IndexOutOfRange, "coordinate out of range for GF(p)");
        code += coeffs[i] * t_->pw[i];
    }
    return Elem{code};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return digits_of(a.code, t_->p, t_->n); }

Elem Field::add(Elem a, Elem b) const noexcept {
    if (!t_->add_table.empty()) return Elem{t_->add_table[std::size_t(a.code) * t_->q + b.code]};
    return Elem{t_->add_digits(a.code, b.code)};
}

Elem Field::neg(Elem a) const noexcept { return Elem{t_->neg_table[a.code]}; }

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a.code == 0 || b.code == 0) return Elem{0};
    return Elem{t_->exp_table[t_->log_table[a.code] + t_->log_table[b.code]]};
}

Elem Field::inv(Elem a) const {
    if (a.code == 0) throw Error(ErrorKind::ZeroInverse, "zero has no multiplicative inverse");
    const std::uint32_t order = t_->q - 1;
    return Elem{t_->exp_table[(order - t_->log_table[a.code]) % order]};
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    const std::uint64_t order = t_->q - 1;
    return Elem{t_->exp_table[(std::uint64_t(t_->log_table[a.code]) * (e % order)) % order]};
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    return pow(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
}

std::uint64_t Field::mult_order(Elem a) const {
    if (a.code == 0) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    const std::uint64_t order = t_->q - 1;
    for (std::uint64_t d = 1; d <= order; ++d)
        if (order % d == 0 && pow(a, d) == one()) return d;
    return order;
}

Elem Field::frobenius(Elem a, std::int64_t k) const noexcept {
    const std::int64_t n = t_->n;
    std::int64_t r = ((k % n) + n) % n;
    Elem x = a;
    for (std::int64_t i = 0; i < r; ++i) x = pow(x, std::uint64_t(t_->p));
    return x;
}

Elem Field::sqrt_char2(Elem a) const {
    if (t_->p != 2) throw Error(ErrorKind::OddCharacteristic, "square roots by Frobenius need characteristic 2");
    return pow(a, std::uint64_t(t_->q / 2));
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(t_->q);
    for (std::uint32_t c = 0; c < t_->q; ++c) out[c] = Elem{c};
    return out;
}

std::vector<Elem> Field::nonzero_elements() const {
    std::vector<Elem> out(t_->q - 1);
    for (std::uint32_t c = 1; c < t_->q; ++c) out[c - 1] = Elem{c};
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << t_->p << '^' << t_->n << ':';
    for (std::size_t i = 0; i < t_->modulus.size(); ++i) os << (i ? "," : "") << t_->modulus[i];
    return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.t_ == b.t_) return true;
    return a.t_->p == b.t_->p && a.t_->n == b.t_->n && a.t_->modulus == b.t_->modulus;
}

std::string render_element(const Field& f, Elem a, const std::string& symbol) {
    if (a.is_zero()) return "0";
    const auto c = f.coeffs(a);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        const bool show_coeff = c[i] != 1 || i == 0;
        if (show_coeff) out += std::to_string(c[i]);
        if (i >= 1) out += symbol;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace cgc
