#include "cgc/skew.hpp"

#include <cassert>
#include <numeric>

namespace cgc {

namespace {

std::uint32_t reduce_exp(const Field& f, std::int64_t k) {
    const std::int64_t n = f.n();
    return static_cast<std::uint32_t>(((k % n) + n) % n);
}

void trim(std::vector<Elem>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void require_same(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.field() == b.field()) || a.theta_exp() != b.theta_exp())
        throw Error(ErrorKind::MixedRings, "skew polynomials from different rings");
}

}  // namespace

SkewPoly::SkewPoly(Field field, std::int64_t theta_exp, std::vector<Elem> coeffs)
    : field_(std::move(field)), theta_(reduce_exp(field_, theta_exp)), c_(std::move(coeffs)) {
    for (Elem e : c_)
        if (e.code >= field_.q()) throw Error(ErrorKind::IndexOutOfRange, "coefficient code out of range");
    trim(c_);
}

SkewPoly SkewPoly::monomial(const Field& f, std::int64_t theta_exp, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1);
    v[k] = c;
    return SkewPoly(f, theta_exp, std::move(v));
}

std::uint32_t SkewPoly::theta_order() const noexcept { return field_.n() / std::gcd(field_.n(), theta_); }

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().add(a.coeff(i), b.coeff(i));
    return SkewPoly(a.field(), a.theta_exp(), std::move(v));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.field().sub(a.coeff(i), b.coeff(i));
    return SkewPoly(a.field(), a.theta_exp(), std::move(v));
}

SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return SkewPoly(f, a.theta_exp());
    std::vector<Elem> v(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            v[i + j] = f.add(v[i + j], f.mul(a.coeffs()[i], a.twist(b.coeffs()[j], std::int64_t(i))));
    }
    return SkewPoly(f, a.theta_exp(), std::move(v));
}

bool is_central(const SkewPoly& f) {
    const std::uint32_t s = f.theta_order();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const Elem c = f.coeffs()[i];
        if (c.is_zero()) continue;
        if (i % s != 0 || f.twist(c, 1) != c) return false;
    }
    return true;
}

std::pair<SkewPoly, SkewPoly> divmod_right(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "skew division by zero");
    const Field& f = a.field();
    SkewPoly q(f, a.theta_exp()), r = a;
    const std::size_t db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t d = r.degree() - db;
        // (c X^d) * (b_lead X^db) = c theta^d(b_lead) X^(d+db)
        const Elem c = f.div(r.lead(), a.twist(b.lead(), std::int64_t(d)));
        const SkewPoly term = SkewPoly::monomial(f, a.theta_exp(), c, d);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

std::pair<SkewPoly, SkewPoly> divmod_left(const SkewPoly& a, const SkewPoly& b) {
    require_same(a, b);
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "skew division by zero");
    const Field& f = a.field();
    SkewPoly q(f, a.theta_exp()), r = a;
    const std::size_t db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t d = r.degree() - db;
        // (b_lead X^db) * (c X^d) = b_lead theta^db(c) X^(db+d)
        const Elem c = a.twist(f.div(r.lead(), b.lead()), -std::int64_t(db));
        const SkewPoly term = SkewPoly::monomial(f, a.theta_exp(), c, d);
        q = q + term;
        r = r - b * term;
    }
    return {q, r};
}

SkewQuotientRing::SkewQuotientRing(Field field, std::int64_t theta_exp, std::size_t m, Elem lambda)
    : field_(std::move(field)), theta_(reduce_exp(field_, theta_exp)), m_(m), lambda_(lambda), order_(0) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
    if (m == 0) throw Error(ErrorKind::InvalidRing, "quotient length m must be at least 1");
    field_.element(lambda.code);
    const std::uint32_t s = field_.n() / std::gcd(field_.n(), theta_);
    if (m % s != 0)
        throw Error(ErrorKind::InvalidRing, "ord(theta) = " + std::to_string(s) + " does not divide m = " +
                                                std::to_string(m) + "; X^m - lambda is not two-sided");
    if (field_.frobenius(lambda, theta_) != lambda)
        throw Error(ErrorKind::InvalidRing, "lambda is not fixed by theta; X^m - lambda is not two-sided");
    order_ = field_.mult_order(lambda);
}

SkewPoly SkewQuotientRing::modulus() const {
    std::vector<Elem> v(m_ + 1);
    v[m_] = field_.one();
    v[0] = field_.neg(lambda_);
    return SkewPoly(field_, theta_, std::move(v));
}

namespace {

std::vector<Elem> reduce(const SkewQuotientRing& r, const SkewPoly& p) {
    const SkewPoly mod = r.modulus();
    auto rem = divmod_right(p, mod).second;
    assert(divmod_left(p, mod).second == rem);
    std::vector<Elem> out(rem.coeffs());
    out.resize(r.m());
    return out;
}

void require_same(const SkewQuotientElement& a, const SkewQuotientElement& b) {
    if (!(a.ring() == b.ring())) throw Error(ErrorKind::MixedRings, "residues from different skew quotient rings");
}

}  // namespace

SkewQuotientElement::SkewQuotientElement(SkewQuotientRing ring, std::vector<Elem> coeffs)
    : SkewQuotientElement(ring, SkewPoly(ring.field(), ring.theta_exp(), std::move(coeffs))) {}

SkewQuotientElement::SkewQuotientElement(SkewQuotientRing ring, const SkewPoly& p) : ring_(std::move(ring)) {
    if (!(p.field() == ring_.field()) || p.theta_exp() != ring_.theta_exp())
        throw Error(ErrorKind::MixedRings, "skew polynomial from a different ring");
    c_ = reduce(ring_, p);
}

SkewQuotientElement SkewQuotientElement::one(const SkewQuotientRing& r) {
    return monomial(r, r.field().one(), 0);
}

SkewQuotientElement SkewQuotientElement::monomial(const SkewQuotientRing& r, Elem c, std::size_t k) {
    return SkewQuotientElement(r, SkewPoly::monomial(r.field(), r.theta_exp(), c, k));
}

SkewQuotientElement SkewQuotientElement::from_index(const SkewQuotientRing& r, std::uint64_t index) {
    std::vector<Elem> v(r.m());
    const std::uint32_t q = r.field().q();
    for (std::size_t i = 0; i < r.m(); ++i) {
        v[i] = Elem{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    return SkewQuotientElement(r, std::move(v));
}

std::vector<std::uint32_t> SkewQuotientElement::codes() const {
    std::vector<std::uint32_t> out;
    for (Elem e : c_) out.push_back(e.code);
    return out;
}

bool SkewQuotientElement::is_zero() const noexcept {
    for (Elem e : c_)
        if (!e.is_zero()) return false;
    return true;
}

SkewQuotientElement operator+(const SkewQuotientElement& a, const SkewQuotientElement& b) {
    require_same(a, b);
    return SkewQuotientElement(a.ring(), a.lift() + b.lift());
}

SkewQuotientElement operator*(const SkewQuotientElement& a, const SkewQuotientElement& b) {
    require_same(a, b);
    return SkewQuotientElement(a.ring(), a.lift() * b.lift());
}

SkewQuotientElement inverse(const SkewQuotientElement& a) {
    const SkewQuotientRing& ring = a.ring();
    const Field& f = ring.field();
    const std::int64_t th = ring.theta_exp();
    // r_i = u_i * modulus + v_i * a, with right division r_{i-1} = q_i * r_i + r_{i+1}.
    SkewPoly r0 = ring.modulus(), r1 = a.lift();
    SkewPoly v0(f, th), v1 = SkewPoly::monomial(f, th, f.one(), 0);
    while (!r1.is_zero()) {
        auto [q, r] = divmod_right(r0, r1);
        SkewPoly v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.degree() != 0) {
        std::vector<std::uint32_t> witness;
        const Elem s = f.inv(r0.lead());
        for (Elem e : r0.coeffs()) witness.push_back(f.mul(e, s).code);
        throw Error(ErrorKind::NotAUnit, "residue has a nontrivial right gcd with X^m - lambda", witness);
    }
    // v0 * a = r0 (mod the two-sided ideal); r0 is a nonzero constant.
    const SkewPoly left_inv = SkewPoly::monomial(f, th, f.inv(r0.lead()), 0) * v0;
    SkewQuotientElement b(ring, left_inv);
    assert(b * a == SkewQuotientElement::one(ring));
    assert(a * b == SkewQuotientElement::one(ring));
    return b;
}

std::size_t hamming_weight(const SkewQuotientElement& a) noexcept {
    std::size_t w = 0;
    for (Elem e : a.coeffs()) w += !e.is_zero();
    return w;
}

SkewQuotientElement substitute_power(const SkewQuotientElement& a, std::size_t g) {
    const std::size_t m = a.ring().m();
    std::vector<Elem> v((m - 1) * g + 1);
    for (std::size_t i = 0; i < m; ++i) v[i * g] = a.ring().field().add(v[i * g], a.coeffs()[i]);
    return SkewQuotientElement(a.ring(), std::move(v));
}

}  // namespace cgc
