#include "cgc/mds.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

namespace cgc {

std::string_view to_string(HypothesisMode m) noexcept { return m == HypothesisMode::Exact ? "exact" : "relaxed"; }

HypothesisMode parse_hypothesis_mode(std::string_view s) {
    if (s == "exact") return HypothesisMode::Exact;
    if (s == "relaxed") return HypothesisMode::Relaxed;
    throw Error(ErrorKind::Parse, "hypothesis mode must be 'exact' or 'relaxed', got '" + std::string(s) + "'");
}

std::string_view to_string(Witness::Kind k) noexcept {
    switch (k) {
        case Witness::Kind::Residue: return "residue";
        case Witness::Kind::Minor: return "minor";
        case Witness::Kind::Product: return "product";
    }
    return "unknown";
}

std::optional<bool> CheckReport::condition(std::string_view name) const {
    for (const auto& c : conditions)
        if (c.name == name) return c.value;
    return std::nullopt;
}

Hypothesis involution_hypothesis(const CirculantSpec& spec) {
    const std::uint64_t mr = checked_mul(spec.m, spec.lambda_order());
    const std::uint64_t g2 = checked_mul(spec.g, spec.g);
    return {g2 == mr + 1, g2 % mr == 1 % mr};
}

namespace {

void require_well_defined(const CirculantSpec& spec) {
    spec.validate();
    if (!spec.well_defined())
        throw Error(ErrorKind::InvalidSpec, "g = " + std::to_string(spec.g) + " is not 1 mod ord(lambda) = " +
                                                std::to_string(spec.lambda_order()));
}

std::vector<std::uint32_t> to_codes(const std::vector<Elem>& v) {
    std::vector<std::uint32_t> out;
    for (Elem e : v) out.push_back(e.code);
    return out;
}

std::size_t weight(const std::vector<Elem>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return !e.is_zero(); }));
}

/// Q -> Q(x^g) h on coefficient vectors, through ring arithmetic.
class ShiftMap {
   public:
    explicit ShiftMap(const CirculantSpec& spec) : spec_(spec) {
        if (spec.is_skew()) {
            skew_.emplace(spec.skew_ring());
            skew_h_.emplace(*skew_, spec.h);
        } else {
            ring_.emplace(spec.ring());
            h_.emplace(*ring_, spec.h);
        }
    }

    std::vector<Elem> residue(std::uint64_t index) const {
        if (skew_) return SkewQuotientElement::from_index(*skew_, index).coeffs();
        return QuotientElement::from_index(*ring_, index).coeffs();
    }

    std::vector<Elem> apply(const std::vector<Elem>& q) const {
        if (skew_) return (substitute_power(SkewQuotientElement(*skew_, q), spec_.g) * *skew_h_).coeffs();
        return (substitute_power(QuotientElement(*ring_, q), spec_.g).value * *h_).coeffs();
    }

   private:
    const CirculantSpec& spec_;
    std::optional<QuotientRing> ring_;
    std::optional<QuotientElement> h_;
    std::optional<SkewQuotientRing> skew_;
    std::optional<SkewQuotientElement> skew_h_;
};

}  // namespace

std::vector<std::uint32_t> involution_product(const CirculantSpec& spec) {
    require_well_defined(spec);
    if (spec.is_skew()) {
        const auto h = spec.h_skew_element();
        return (h * substitute_power(h, spec.g)).codes();
    }
    const auto h = spec.h_element();
    return (h * substitute_power(h, spec.g).value).codes();
}

bool involutory_condition(const CirculantSpec& spec) {
    const auto prod = involution_product(spec);
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (prod[i] != (i == 0 ? 1u : 0u)) return false;
    return true;
}

CheckReport weight_mds_oracle(const CirculantSpec& spec, unsigned workers) {
    spec.validate();
    const std::uint32_t q = spec.field.q();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < spec.m; ++i) {
        total *= q;
        if (total > kMaxSearchSpace)
            throw Error(ErrorKind::SearchSpaceTooLarge, "q^m exceeds the weight-oracle limit of 2^24");
    }
    const ShiftMap map(spec);
    const std::uint64_t block = total / q;  // residues sharing the top coefficient
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    std::atomic<std::uint64_t> best{kNone};
    std::atomic<std::uint32_t> next{0};

    auto worker = [&] {
        for (std::uint32_t part; (part = next.fetch_add(1)) < q;) {
            const std::uint64_t lo = std::max<std::uint64_t>(1, part * block), hi = (part + 1) * block;
            for (std::uint64_t idx = lo; idx < hi && idx < best.load(); ++idx) {
                const auto r = map.residue(idx);
                if (weight(r) + weight(map.apply(r)) < spec.m + 1) {
                    std::uint64_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {}
                    break;
                }
            }
        }
    };
    const unsigned k = std::max(1u, std::min<unsigned>(workers, q));
    if (k == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < k; ++i) pool.emplace_back(worker);
    }

    CheckReport rep;
    rep.verdict = best.load() == kNone;
    rep.conditions.push_back({"weight_condition", rep.verdict});
    if (!rep.verdict) {
        const auto r = map.residue(best.load());
        rep.witness = Witness{Witness::Kind::Residue, to_codes(r), to_codes(map.apply(r)), std::nullopt};
    }
    return rep;
}

CheckReport involutory_mds_check(const CirculantSpec& spec, HypothesisMode mode, unsigned workers) {
    require_well_defined(spec);
    const Hypothesis hyp = involution_hypothesis(spec);
    if (!hyp.holds(mode))
        throw Error(ErrorKind::HypothesisViolated,
                    "g^2 = " + std::to_string(spec.g * spec.g) + " fails the " + std::string(to_string(mode)) +
                        " hypothesis against m * ord(lambda) = " + std::to_string(spec.m * spec.lambda_order()));
    CheckReport rep = weight_mds_oracle(spec, workers);
    rep.hypothesis_mode = mode;
    rep.hypothesis = hyp;
    const auto prod = involution_product(spec);
    const bool inv = involutory_condition(spec);
    rep.conditions.push_back({"inverse_product_condition", inv});

    const Matrix a = build(spec);
    const MdsResult scan = is_mds(a);
    const bool mat_inv = is_involutory(a);
    rep.conditions.push_back({"minor_scan", scan.mds});
    rep.conditions.push_back({"matrix_involutory", mat_inv});
    rep.consistent = scan.mds == *rep.condition("weight_condition") && mat_inv == inv;
    rep.verdict = std::all_of(rep.conditions.begin(), rep.conditions.end(), [](const Condition& c) { return c.value; });
    if (!rep.witness) {
        if (!inv)
            rep.witness = Witness{Witness::Kind::Product, prod, {}, std::nullopt};
        else if (!scan.mds)
            rep.witness = Witness{Witness::Kind::Minor, {}, {}, scan.witness};
    }
    return rep;
}

namespace {

void require_ring(const QuotientElement& h, std::size_t m, std::size_t g) {
    const QuotientRing& r = h.ring();
    if (r.m() != m || r.lambda() != r.field().one())
        throw Error(ErrorKind::HypothesisViolated, "ring must be F_q[x]/(x^" + std::to_string(m) + " - 1)");
    if (g < 1 || g > m || std::gcd(g, m) != 1)
        throw Error(ErrorKind::HypothesisViolated, "shift g must lie in 1..m and be coprime to m");
}

Matrix circulant_of(const QuotientElement& h, std::size_t g) {
    CirculantSpec s{h.ring().field(), h.ring().m(), g, h.ring().lambda(), h.coeffs(), 0};
    return build(s);
}

}  // namespace

bool order3_characterization(const QuotientElement& h, std::size_t g) {
    require_ring(h, 3, g);
    const QuotientElement inv = inverse(h);
    return hamming_weight(h) == 3 && hamming_weight(inv) == 3;
}

bool order4_characterization(const QuotientElement& h, std::size_t g) {
    require_ring(h, 4, g);
    const QuotientElement inv = inverse(h);
    if (hamming_weight(h) != hamming_weight(inv))
        throw Error(ErrorKind::HypothesisViolated, "wt(h) = " + std::to_string(hamming_weight(h)) +
                                                       " differs from wt(h^-1) = " + std::to_string(hamming_weight(inv)));
    return minors_of_size_nonsingular(circulant_of(h, g), 2).mds;
}

bool scalar_semi_involutory_condition(const CirculantSpec& spec, Elem c1, Elem c2) {
    const Field& f = spec.field;
    if (c1.is_zero() || c2.is_zero()) throw Error(ErrorKind::ZeroScalar, "scalars must be nonzero");
    for (Elem c : {c1, c2})
        if (f.frobenius(c, spec.theta_exp) != c)
            throw Error(ErrorKind::NotInFixedField, "scalar is not fixed by theta", {c.code});
    const Elem c = f.mul(c1, c2);
    const auto prod = involution_product(spec);
    for (std::size_t i = 0; i < prod.size(); ++i)
        if (f.mul(c, Elem{prod[i]}) != (i == 0 ? f.one() : f.zero())) return false;
    return true;
}

}  // namespace cgc
