#include <doctest.h>

#include <random>

#include "cgc/registry.hpp"
#include "oracles.hpp"

using namespace cgc;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::mt19937_64& rng, bool nonzero = false) {
    std::vector<Elem> e(n * n);
    for (auto& x : e) x = Elem{static_cast<std::uint32_t>(nonzero ? rng() % (f.q() - 1) + 1 : rng() % f.q())};
    return Matrix(f, n, n, e);
}

}  // namespace

TEST_CASE("determinant matches Laplace expansion") {
    std::mt19937_64 rng(1);
    for (const char* name : {"2", "3", "4", "F8", "F9"}) {
        const Field f = resolve_field(name);
        for (std::size_t n = 1; n <= 4; ++n)
            for (int t = 0; t < 40; ++t) {
                const Matrix a = random_matrix(f, n, rng);
                CHECK(determinant(a).code == oracle::det(f, a.codes()));
            }
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(2);
    const Field f = resolve_field("F16");
    for (int t = 0; t < 100; ++t) {
        const Matrix a = random_matrix(f, 4, rng);
        const auto inv = try_inverse(a);
        CHECK(inv.has_value() == !determinant(a).is_zero());
        if (inv) {
            CHECK(a * *inv == Matrix::identity(f, 4));
            CHECK(*inv * a == Matrix::identity(f, 4));
        } else {
            CHECK_THROWS_AS(inverse(a), Error);
        }
    }
    CHECK_THROWS_AS(determinant(Matrix(f, 2, 3)), Error);
}

TEST_CASE("MDS scan agrees with the Laplace oracle") {
    std::mt19937_64 rng(3);
    for (const char* name : {"4", "5", "F8", "F16"}) {
        const Field f = resolve_field(name);
        for (std::size_t n = 1; n <= 4; ++n)
            for (int t = 0; t < 60; ++t) {
                const Matrix a = random_matrix(f, n, rng, t % 2 == 0);
                const MdsResult r = is_mds(a);
                CHECK(r.mds == oracle::mds(f, a.codes()));
                if (r.mds) {
                    for (Elem e : a.entries()) CHECK(!e.is_zero());
                } else {
                    REQUIRE(r.witness);
                    CHECK(determinant(a.submatrix(r.witness->rows, r.witness->cols)).is_zero());
                }
            }
    }
}

TEST_CASE("MDS witness is the first singular minor in scan order") {
    const Field f = Field::prime(5);
    const Matrix a = Matrix::from_codes(f, {{1, 1, 1}, {1, 2, 3}, {1, 3, 0}});
    const MdsResult r = is_mds(a);
    REQUIRE(r.witness);
    CHECK(r.witness->rows == std::vector<std::size_t>{2});
    CHECK(r.witness->cols == std::vector<std::size_t>{2});
}

TEST_CASE("semi-involutory test agrees with the diagonal search") {
    std::mt19937_64 rng(4);
    const Field f = resolve_field("4");
    int pos = 0, neg = 0;
    for (int t = 0; t < 150; ++t) {
        Matrix a = random_matrix(f, 3, rng);
        if (t % 2 == 0) {
            // D1 B D2 with B involutory.
            const std::vector<Matrix> involutions = {
                Matrix::from_codes(f, {{0, 2, 3}, {1, 3, 3}, {1, 2, 2}}),
                Matrix::from_codes(f, {{0, 2, 3}, {2, 2, 1}, {3, 1, 3}}),
                Matrix::from_codes(f, {{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}),
                Matrix::from_codes(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
            };
            const Matrix& b = involutions[t / 2 % involutions.size()];
            REQUIRE(is_involutory(b));
            std::vector<Elem> d1(3), d2(3);
            for (auto& x : d1) x = Elem{static_cast<std::uint32_t>(rng() % 3 + 1)};
            for (auto& x : d2) x = Elem{static_cast<std::uint32_t>(rng() % 3 + 1)};
            a = Matrix::diagonal(f, d1) * b * Matrix::diagonal(f, d2);
        }
        const auto inv = try_inverse(a);
        if (!inv) {
            CHECK_THROWS_AS(semi_involutory(a), Error);
            continue;
        }
        const SemiInvolutory s = semi_involutory(a);
        CHECK(s.found == oracle::semi_involutory(f, a.codes(), inv->codes()));
        if (s.found) {
            ++pos;
            CHECK(Matrix::diagonal(f, s.d1) * a * Matrix::diagonal(f, s.d2) == *inv);
            CHECK(s.d1[0] == f.one());
        } else {
            ++neg;
            CHECK(!s.reason.empty());
        }
    }
    CHECK(pos > 0);
    CHECK(neg > 0);
}

TEST_CASE("scalar semi-involutory") {
    const Field f = resolve_field("4");
    const Matrix b = Matrix::from_codes(f, {{0, 2, 3}, {2, 2, 1}, {3, 1, 3}});
    REQUIRE(is_involutory(b));
    const Matrix a = scale(b, Elem{2});
    const auto c = scalar_semi_involutory(a);
    REQUIRE(c);
    CHECK(inverse(a) == scale(a, *c));
    CHECK(c->code == f.inv(f.mul(Elem{2}, Elem{2})).code);
    // c = w^-2 = w is not in GF(2).
    CHECK(scalar_semi_involutory(a, 0u).has_value());
    CHECK(!scalar_semi_involutory(a, 1u).has_value());
    CHECK(!scalar_semi_involutory(Matrix::from_codes(f, {{1, 1}, {1, 0}})).has_value());
}

TEST_CASE("nonzero inverse entries imply nonsingular co-order-one minors") {
    std::mt19937_64 rng(6);
    for (const char* name : {"4", "5", "F8"}) {
        const Field f = resolve_field(name);
        for (int t = 0; t < 200; ++t) {
            const Matrix a = random_matrix(f, 3 + t % 2, rng);
            if (!try_inverse(a)) continue;
            const InverseSupportCheck j = inverse_support_check(a);
            CHECK(j.holds());
            if (j.premise) CHECK(j.conclusion == minors_of_size_nonsingular(a, a.rows() - 1).mds);
        }
    }
}

TEST_CASE("combinations are lexicographic") {
    const auto c = combinations(4, 2);
    REQUIRE(c.size() == 6);
    CHECK(c.front() == std::vector<std::size_t>{0, 1});
    CHECK(c[2] == std::vector<std::size_t>{0, 3});
    CHECK(c.back() == std::vector<std::size_t>{2, 3});
}
