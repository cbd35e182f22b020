#include <doctest.h>

#include <numeric>
#include <random>

#include "cgc/mds.hpp"
#include "cgc/registry.hpp"
#include "oracles.hpp"

using namespace cgc;

namespace {

std::vector<CirculantSpec> all_specs(const Field& f, std::size_t m, bool well_defined_only = true) {
    std::vector<CirculantSpec> out;
    const std::uint64_t n = oracle::ipow(f.q(), m);
    for (Elem lambda : f.nonzero_elements())
        for (std::size_t g = 1; g <= m; ++g)
            for (std::uint64_t i = 0; i < n; ++i) {
                const auto v = oracle::vec(i, f.q(), m);
                auto s = make_spec(f, m, g, lambda.code, v);
                if (!well_defined_only || s.well_defined()) out.push_back(std::move(s));
            }
    return out;
}

/// Row vector times matrix.
std::vector<std::uint32_t> apply(const Matrix& a, const std::vector<std::uint32_t>& v) {
    return oracle::matmul(a.field(), {v}, a.codes())[0];
}

std::size_t weight(const std::vector<std::uint32_t>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto c) { return c != 0; }));
}

}  // namespace

TEST_CASE("weight oracle on the identity") {
    const Field f = Field::prime(5);
    const auto rep = weight_mds_oracle(make_spec(f, 3, 1, 1, {1, 0, 0}));
    CHECK(!rep.verdict);
    REQUIRE(rep.witness);
    CHECK(rep.witness->kind == Witness::Kind::Residue);
    CHECK(rep.witness->codes == std::vector<std::uint32_t>{1, 0, 0});
}

TEST_CASE("weight oracle on the skew F8 example") {
    const auto spec = make_spec(resolve_field("F8"), 3, 1, 1, {3, 2, 2}, 1);
    CHECK(weight_mds_oracle(spec).verdict);
    CHECK(weight_mds_oracle(spec, 4).verdict);
}

TEST_CASE("weight oracle agrees with the minor scan and its witnesses re-verify") {
    for (const auto& [name, m] : {std::pair{"2", 3}, std::pair{"3", 3}, std::pair{"4", 2}, std::pair{"4", 3},
                                  std::pair{"5", 2}, std::pair{"3", 4}}) {
        const Field f = resolve_field(name);
        for (const auto& spec : all_specs(f, m)) {
            const auto rep = weight_mds_oracle(spec);
            const Matrix a = build(spec);
            CHECK(rep.verdict == is_mds(a).mds);
            if (!rep.verdict) {
                REQUIRE(rep.witness);
                CHECK(apply(a, rep.witness->codes) == rep.witness->image);
                CHECK(weight(rep.witness->codes) + weight(rep.witness->image) < spec.m + 1);
            }
        }
    }
}

TEST_CASE("weight oracle witness does not depend on the worker count") {
    const Field f = resolve_field("F8");
    std::mt19937_64 rng(31);
    for (int t = 0; t < 30; ++t) {
        std::vector<std::uint32_t> h(3);
        for (auto& c : h) c = static_cast<std::uint32_t>(rng() % 8);
        const auto spec = make_spec(f, 3, 1 + t % 2, 1, h);
        const auto one = weight_mds_oracle(spec, 1), many = weight_mds_oracle(spec, 5);
        CHECK(one.verdict == many.verdict);
        if (!one.verdict) CHECK(one.witness->codes == many.witness->codes);
    }
}

TEST_CASE("weight oracle refuses large spaces") {
    const Field f = resolve_field("F16");
    std::vector<std::uint32_t> h(7, 1);
    try {
        weight_mds_oracle(make_spec(f, 7, 1, 1, h));
        FAIL("expected SearchSpaceTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
    }
}

TEST_CASE("involutory condition agrees with squaring the matrix") {
    for (const auto& [name, m] : {std::pair{"3", 2}, std::pair{"4", 2}, std::pair{"5", 2}, std::pair{"3", 3},
                                  std::pair{"4", 3}, std::pair{"3", 4}}) {
        const Field f = resolve_field(name);
        for (const auto& spec : all_specs(f, m)) {
            if (!involution_hypothesis(spec).relaxed) continue;
            CHECK(involutory_condition(spec) == is_involutory(build(spec)));
        }
    }
}

TEST_CASE("skew involutory condition agrees with squaring the matrix") {
    const Field f = resolve_field("4");
    for (std::size_t m : {2, 4}) {
        const std::uint64_t n = oracle::ipow(4, m);
        for (std::uint64_t i = 0; i < n; ++i) {
            const auto spec = make_spec(f, m, 1, 1, oracle::vec(i, 4, m), 1);
            CHECK(involutory_condition(spec) == is_involutory(build(spec)));
        }
    }
}

TEST_CASE("involutory MDS check") {
    const auto f16 = make_spec(resolve_field("F16"), 4, 1, 1, {2, 4, 6, 12}, 1);
    const auto rep = involutory_mds_check(f16);
    CHECK(rep.verdict);
    CHECK(rep.consistent);
    CHECK(rep.hypothesis->relaxed);
    CHECK(!rep.hypothesis->exact);
    CHECK_THROWS_AS(involutory_mds_check(f16, HypothesisMode::Exact), Error);

    const auto id = make_spec(Field::prime(5), 3, 1, 1, {1, 0, 0});
    const auto r2 = involutory_mds_check(id);
    CHECK(!r2.verdict);
    CHECK(r2.condition("inverse_product_condition") == std::optional<bool>(true));
    CHECK(r2.condition("weight_condition") == std::optional<bool>(false));
    CHECK(r2.witness);

    // g = 2, m = 3: 4 = 3 * 1 + 1 holds exactly.
    const auto g2 = make_spec(Field::prime(5), 3, 2, 1, {1, 0, 0});
    CHECK(involution_hypothesis(g2).exact);
    CHECK(involutory_mds_check(g2, HypothesisMode::Exact).condition("matrix_involutory") == std::optional<bool>(true));
}

TEST_CASE("polynomial conditions match the matrix predicates on all m = 2 specs") {
    for (const char* name : {"4", "5"}) {
        for (const auto& spec : all_specs(resolve_field(name), 2)) {
            if (!involution_hypothesis(spec).relaxed) continue;
            CHECK(involutory_mds_check(spec).consistent);
        }
    }
}

TEST_CASE("order-3 characterization") {
    const Field f = Field::prime(5);
    const QuotientRing r(f, 3, f.one());
    CHECK(order3_characterization(QuotientElement::from_codes(r, {1, 1, 2}), 1));
    CHECK(inverse(QuotientElement::from_codes(r, {1, 1, 2})).codes() == std::vector<std::uint32_t>{1, 2, 1});
    CHECK(!order3_characterization(QuotientElement::one(r), 1));
    CHECK_THROWS_AS(order3_characterization(QuotientElement::from_codes(r, {1, 1, 1}), 1), Error);
    CHECK_THROWS_AS(order3_characterization(QuotientElement::one(r), 3), Error);
    CHECK_THROWS_AS(order3_characterization(QuotientElement::one(QuotientRing(f, 3, Elem{2})), 1), Error);
}

TEST_CASE("order-4 characterization") {
    const Field f = Field::prime(5);
    const QuotientRing r(f, 4, f.one());
    CHECK(!order4_characterization(QuotientElement::one(r), 1));
    bool saw_mismatch = false;
    for (std::uint64_t i = 1; i < 625 && !saw_mismatch; ++i) {
        const auto h = QuotientElement::from_index(r, i);
        if (!is_unit(h) || hamming_weight(h) == hamming_weight(inverse(h))) continue;
        saw_mismatch = true;
        CHECK_THROWS_AS(order4_characterization(h, 1), Error);
    }
    CHECK(saw_mismatch);
}

TEST_CASE("scalar semi-involutory condition") {
    const Field f = resolve_field("F16");
    const auto spec = make_spec(f, 4, 1, 1, {2, 4, 6, 12}, 1);
    CHECK(scalar_semi_involutory_condition(spec, f.one(), f.one()));
    CHECK_THROWS_AS(scalar_semi_involutory_condition(spec, f.zero(), f.one()), Error);
    try {
        scalar_semi_involutory_condition(spec, Elem{2}, f.one());
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInFixedField);
    }

    // Scaling h by u makes A^-1 = u^-2 A.
    const Field f7 = Field::prime(7);
    std::optional<CirculantSpec> base;
    for (std::uint64_t i = 2; i < 343 && !base; ++i) {
        auto s = make_spec(f7, 3, 2, 1, oracle::vec(i, 7, 3));
        if (weight(oracle::vec(i, 7, 3)) == 3 && involutory_condition(s)) base = s;
    }
    REQUIRE(base);
    for (Elem u : f7.nonzero_elements()) {
        CirculantSpec scaled = *base;
        for (auto& c : scaled.h) c = f7.mul(c, u);
        const Elem c = f7.inv(f7.mul(u, u));
        CHECK(scalar_semi_involutory_condition(scaled, c, f7.one()));
        CHECK(inverse(build(scaled)) == scale(build(scaled), c));
        if (f7.mul(u, u) != f7.one()) CHECK(!scalar_semi_involutory_condition(scaled, f7.one(), f7.one()));
    }
}
