#include "cgc/quotient.hpp"

#include <limits>

namespace cgc {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / 2 / a)
        throw Error(ErrorKind::Overflow, "count exceeds 64-bit range");
    return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

QuotientRing::QuotientRing(Field field, std::size_t m, Elem lambda)
    : field_(std::move(field)), m_(m), lambda_(lambda), order_(0) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
    if (m == 0) throw Error(ErrorKind::InvalidRing, "quotient length m must be at least 1");
    field_.element(lambda.code);
    order_ = field_.mult_order(lambda);
}

std::uint64_t QuotientRing::size() const { return checked_pow(field_.q(), m_); }

namespace {

// Folds coefficients of degree >= m back with x^m = lambda.
std::vector<Elem> reduce(const QuotientRing& r, const std::vector<Elem>& v) {
    const Field& f = r.field();
    std::vector<Elem> out(r.m());
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (v[t].is_zero()) continue;
        const Elem c = f.mul(v[t], f.pow(r.lambda(), std::uint64_t(t / r.m())));
        out[t % r.m()] = f.add(out[t % r.m()], c);
    }
    return out;
}

void require_same(const QuotientElement& a, const QuotientElement& b) {
    if (!(a.ring() == b.ring())) throw Error(ErrorKind::MixedRings, "residues from different quotient rings");
}

}  // namespace

QuotientElement::QuotientElement(QuotientRing ring, std::vector<Elem> coeffs) : ring_(std::move(ring)) {
    for (Elem e : coeffs)
        if (e.code >= ring_.field().q()) throw Error(ErrorKind::IndexOutOfRange, "coefficient code out of range");
    c_ = reduce(ring_, coeffs);
}

QuotientElement::QuotientElement(QuotientRing ring, const Poly& p) : QuotientElement(std::move(ring), p.coeffs()) {
    if (!(p.field() == ring_.field())) throw Error(ErrorKind::MixedFields, "polynomial over a different field");
}

QuotientElement QuotientElement::zero(const QuotientRing& r) { return QuotientElement(r, std::vector<Elem>{}); }

QuotientElement QuotientElement::one(const QuotientRing& r) { return monomial(r, r.field().one(), 0); }

QuotientElement QuotientElement::monomial(const QuotientRing& r, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1);
    v[k] = c;
    return QuotientElement(r, std::move(v));
}

QuotientElement QuotientElement::from_codes(const QuotientRing& r, const std::vector<std::uint32_t>& codes) {
    std::vector<Elem> v;
    for (auto c : codes) v.push_back(r.field().element(c));
    return QuotientElement(r, std::move(v));
}

QuotientElement QuotientElement::from_index(const QuotientRing& r, std::uint64_t index) {
    std::vector<Elem> v(r.m());
    const std::uint32_t q = r.field().q();
    for (std::size_t i = 0; i < r.m(); ++i) {
        v[i] = Elem{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    return QuotientElement(r, std::move(v));
}

std::vector<std::uint32_t> QuotientElement::codes() const {
    std::vector<std::uint32_t> out;
    for (Elem e : c_) out.push_back(e.code);
    return out;
}

bool QuotientElement::is_zero() const noexcept {
    for (Elem e : c_)
        if (!e.is_zero()) return false;
    return true;
}

std::uint64_t QuotientElement::index() const noexcept {
    std::uint64_t idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * ring_.field().q() + c_[i].code;
    return idx;
}

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
    require_same(a, b);
    const Field& f = a.ring().field();
    std::vector<Elem> v(a.ring().m());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeffs()[i], b.coeffs()[i]);
    return QuotientElement(a.ring(), std::move(v));
}

QuotientElement operator-(const QuotientElement& a, const QuotientElement& b) {
    require_same(a, b);
    const Field& f = a.ring().field();
    std::vector<Elem> v(a.ring().m());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeffs()[i], b.coeffs()[i]);
    return QuotientElement(a.ring(), std::move(v));
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    require_same(a, b);
    const Field& f = a.ring().field();
    const std::size_t m = a.ring().m();
    std::vector<Elem> v(2 * m - 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) v[i + j] = f.add(v[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
    return QuotientElement(a.ring(), std::move(v));
}

QuotientElement scale(const QuotientElement& a, Elem c) {
    std::vector<Elem> v(a.coeffs());
    for (auto& e : v) e = a.ring().field().mul(e, c);
    return QuotientElement(a.ring(), std::move(v));
}

QuotientElement inverse(const QuotientElement& a) {
    const Poly mod = a.ring().modulus();
    const Xgcd e = xgcd(a.lift(), mod);
    if (e.g.is_zero() || *e.g.degree() != 0) {
        const Poly witness = e.g.is_zero() ? mod.monic() : e.g;
        throw Error(ErrorKind::NotAUnit, "residue shares the factor " + render_poly(witness) + " with x^m - lambda",
                    witness.codes());
    }
    return QuotientElement(a.ring(), e.u);
}

bool is_unit(const QuotientElement& a) {
    const Poly g = gcd(a.lift(), a.ring().modulus());
    return !g.is_zero() && *g.degree() == 0;
}

std::size_t hamming_weight(const QuotientElement& a) noexcept {
    std::size_t w = 0;
    for (Elem e : a.coeffs()) w += !e.is_zero();
    return w;
}

std::size_t hamming_weight(const Poly& a) noexcept { return a.weight(); }

Substitution substitute_power(const QuotientElement& a, std::size_t g) {
    const std::size_t m = a.ring().m();
    std::vector<Elem> v(m == 0 ? 0 : (m - 1) * g + 1);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t t = i * g;
        v[t] = a.ring().field().add(v[t], a.coeffs()[i]);
    }
    const bool ok = (g % a.ring().lambda_order()) == (1 % a.ring().lambda_order());
    return {QuotientElement(a.ring(), std::move(v)), ok};
}

bool divides_condition(const Field& f, std::size_t m, std::size_t g, Elem lambda) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
    (void)m;
    const std::uint64_t r = f.mult_order(lambda);
    return g % r == 1 % r;
}

UnitsCount units_count(const Factorization& fac, std::uint32_t q) {
    UnitsCount out{1, 1};
    for (const auto& [p, e] : fac.factors) {
        const std::uint64_t qd = checked_pow(q, *p.degree());
        out.product_formula = checked_mul(out.product_formula, checked_pow(qd - 1, e));
        out.local_ring = checked_mul(out.local_ring, checked_mul(checked_pow(qd, e - 1), qd - 1));
    }
    return out;
}

UnitsCount units_count(const QuotientRing& r) { return units_count(factor(r.modulus()), r.field().q()); }

}  // namespace cgc
