#include "cgc/poly.hpp"

#include <algorithm>

namespace cgc {

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw Error(ErrorKind::MixedFields, "polynomials over different fields");
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (e.code >= field_.q()) throw Error(ErrorKind::IndexOutOfRange, "coefficient code out of range");
    normalize();
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Field& f, Elem c, std::size_t k) {
    if (c.is_zero()) return Poly(f);
    std::vector<Elem> v(k + 1);
    v[k] = c;
    return Poly(f, std::move(v));
}

Poly Poly::x_pow_minus(const Field& f, std::size_t m, Elem lambda) {
    std::vector<Elem> v(m + 1);
    v[m] = f.one();
    v[0] = f.sub(v[0], lambda);
    return Poly(f, std::move(v));
}

Poly Poly::from_codes(const Field& f, const std::vector<std::uint32_t>& codes) {
    std::vector<Elem> v;
    v.reserve(codes.size());
    for (auto c : codes) v.push_back(f.element(c));
    return Poly(f, std::move(v));
}

std::vector<std::uint32_t> Poly::codes() const {
    std::vector<std::uint32_t> out;
    out.reserve(c_.size());
    for (Elem e : c_) out.push_back(e.code);
    return out;
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(*this, field_.inv(lead()));
}

std::size_t Poly::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](Elem e) { return !e.is_zero(); }));
}

Elem Poly::evaluate(Elem x) const noexcept {
    Elem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

bool operator==(const Poly& a, const Poly& b) noexcept { return a.field_ == b.field_ && a.c_ == b.c_; }

bool degree_less(const Poly& a, const Poly& b) noexcept {
    if (b.is_zero()) return false;
    if (a.is_zero()) return true;
    return *a.degree() < *b.degree();
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const Field& f = a.field();
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(v));
}

Poly operator-(const Poly& a) {
    std::vector<Elem> v(a.coeffs());
    for (auto& e : v) e = a.field().neg(e);
    return Poly(a.field(), std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return Poly(f, std::move(v));
}

Poly scale(const Poly& a, Elem c) {
    std::vector<Elem> v(a.coeffs());
    for (auto& e : v) e = a.field().mul(e, c);
    return Poly(a.field(), std::move(v));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = a.field();
    if (degree_less(a, b)) return {Poly(f), a};
    const std::size_t db = *b.degree();
    const Elem lead_inv = f.inv(b.lead());
    std::vector<Elem> r(a.coeffs());
    std::vector<Elem> qv(r.size() - db);
    for (std::size_t k = r.size(); k-- > db;) {
        const Elem c = f.mul(r[k], lead_inv);
        if (c.is_zero()) continue;
        qv[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(c, b.coeffs()[i]));
    }
    r.resize(db);
    return {Poly(f, std::move(qv)), Poly(f, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
    require_same(a, b);
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(f, f.one()), u1(f);
    Poly v0(f), v1 = Poly::constant(f, f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    const Elem s = f.inv(r0.lead());
    return {scale(r0, s), scale(u0, s), scale(v0, s)};
}

Poly substitute_power(const Poly& a, std::size_t g) {
    const Field& f = a.field();
    if (a.is_zero()) return a;
    if (g == 0) {
        Elem s = f.zero();
        for (Elem e : a.coeffs()) s = f.add(s, e);
        return Poly::constant(f, s);
    }
    std::vector<Elem> v((a.coeffs().size() - 1) * g + 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i * g] = a.coeffs()[i];
    return Poly(f, std::move(v));
}

namespace {

// Monic polynomial of degree d whose lower coefficients are the base-q digits
// of `code`.
Poly monic_candidate(const Field& f, std::size_t d, std::uint64_t code) {
    std::vector<Elem> v(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        v[i] = Elem{static_cast<std::uint32_t>(code % f.q())};
        code /= f.q();
    }
    v[d] = f.one();
    return Poly(f, std::move(v));
}

std::uint64_t candidate_count(const Field& f, std::size_t d) {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < d; ++i) c *= f.q();
    return c;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || *f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "irreducibility of a constant");
    const std::size_t n = *f.degree();
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        const std::uint64_t count = candidate_count(f.field(), d);
        for (std::uint64_t c = 0; c < count; ++c)
            if (divmod(f, monic_candidate(f.field(), d, c)).second.is_zero()) return false;
    }
    return true;
}

Factorization factor(const Poly& f) {
    if (f.is_zero() || *f.degree() < 1) throw Error(ErrorKind::ConstantPolynomial, "factorization of a constant");
    const Field& field = f.field();
    Factorization out{f.lead(), {}};
    Poly rest = f.monic();
    for (std::size_t d = 1; 2 * d <= *rest.degree(); ++d) {
        const std::uint64_t count = candidate_count(field, d);
        for (std::uint64_t c = 0; c < count && 2 * d <= *rest.degree(); ++c) {
            Poly cand = monic_candidate(field, d, c);
            std::size_t e = 0;
            while (true) {
                auto [q, r] = divmod(rest, cand);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++e;
            }
            if (e) out.factors.emplace_back(std::move(cand), e);
        }
    }
    // What survives has no factor of degree <= deg/2, so it is irreducible.
    if (*rest.degree() >= 1) out.factors.emplace_back(rest, 1);
    std::stable_sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (*a.first.degree() != *b.first.degree()) return *a.first.degree() < *b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        return std::lexicographical_compare(ca.rbegin(), ca.rend(), cb.rbegin(), cb.rend());
    });
    return out;
}

Poly Factorization::expand(const Field& f) const {
    Poly acc = Poly::constant(f, scalar);
    for (const auto& [p, e] : factors)
        for (std::size_t i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

std::string render_poly(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const Elem c = p.coeffs()[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (c.code != 1 || i == 0) out += std::to_string(c.code);
        if (i >= 1) out += var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

std::string render_factorization(const Factorization& fac) {
    std::string out;
    if (fac.scalar.code != 1) out += std::to_string(fac.scalar.code);
    for (const auto& [p, e] : fac.factors) {
        // Descending order reads the way factorizations are usually written.
        std::string term;
        for (std::size_t i = p.coeffs().size(); i-- > 0;) {
            const Elem c = p.coeffs()[i];
            if (c.is_zero()) continue;
            if (!term.empty()) term += '+';
            if (c.code != 1 || i == 0) term += std::to_string(c.code);
            if (i >= 1) term += "x";
            if (i >= 2) term += "^" + std::to_string(i);
        }
        out += "(" + term + ")";
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace cgc
