#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgc/quotient.hpp"

namespace cgc {

/// (floor((m-1)/r) + 1) * q^m with r = ord(lambda). Throws ZeroLambda.
std::uint64_t upper_bound(std::size_t m, const Field& f, Elem lambda);

/// Shifts g = 1 + r k, 0 <= k <= floor((m-1)/r), with gcd(g, m) = 1.
std::vector<std::size_t> admissible_shifts(std::size_t m, std::uint64_t r);

/// Number of admissible shifts.
std::uint64_t count_N(std::size_t m, std::uint64_t r);
std::uint64_t count_N(std::size_t m, const Field& f, Elem lambda);

struct FormulaCount {
    std::uint64_t n;
    UnitsCount units;
    std::uint64_t product_value;  // n * units.product_formula
    std::uint64_t local_value;  // n * units.local_ring
};

FormulaCount invertible_count_formula(std::size_t m, const Field& f, Elem lambda);

struct ExhaustiveCount {
    std::uint64_t unit_count = 0;
    std::uint64_t pair_count = 0;
    std::uint64_t distinct_matrix_count = 0;
    /// The first few invertible h in code order.
    std::vector<std::vector<std::uint32_t>> samples;
};

/// Tries every h in F_q[x]/(x^m - lambda) for invertibility and builds the
/// matrix for every admissible shift. Throws SearchSpaceTooLarge when
/// N * q^m exceeds `limit`.
ExhaustiveCount enumerate_invertible_exhaustive(std::size_t m, const Field& f, Elem lambda, unsigned workers = 1,
                                                std::uint64_t limit = std::uint64_t{1} << 24);

struct SearchHit {
    std::vector<std::uint32_t> h, h_inv;
    std::size_t weight_h, weight_inv;
};

enum class SearchMode { Exhaustive, Random };

inline constexpr std::uint64_t kDefaultSeed = 42;

struct SearchOptions {
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 1000;
    unsigned workers = 1;
};

/// Units h of F_q[x]/(x^m - 1) with every coefficient nonzero whose inverse
/// also has weight m. Exhaustive mode returns all of them in lexicographic
/// order of (h_0, ..., h_{m-1}); random mode draws up to `trials` candidates
/// and returns the first hit, if any.
std::vector<SearchHit> full_weight_search(const Field& f, std::size_t m, const SearchOptions& opts);

inline std::vector<SearchHit> algorithm1_weight3(const Field& f, const SearchOptions& opts = {}) {
    return full_weight_search(f, 3, opts);
}
inline std::vector<SearchHit> algorithm2_weight4(const Field& f, const SearchOptions& opts = {}) {
    return full_weight_search(f, 4, opts);
}

struct CensusRow {
    int index;
    std::size_t m;
    Field field;
    Elem lambda;
    std::uint64_t r;
    std::string factorization;
    std::uint64_t n;
    std::uint64_t product_formula_count;
    std::uint64_t local_ring_count;
    std::optional<ExhaustiveCount> exhaustive;

    // Values as printed in the reference table.
    std::uint64_t printed_n;
    std::vector<unsigned> printed_degrees;
    std::uint64_t printed_total;
    /// printed_n * prod (q^d - 1) over printed_degrees.
    std::uint64_t printed_arithmetic;

    bool formula_matches_printed() const noexcept { return product_formula_count == printed_total; }
    bool local_matches_printed() const noexcept { return local_ring_count == printed_total; }
    bool squarefree() const noexcept { return product_formula_count == local_ring_count; }
};

inline constexpr std::size_t kTable1Rows = 8;

/// Rows are 1-based; empty selects all. Exhaustive counts are attached when
/// N * q^m <= exhaustive_limit. Throws IndexOutOfRange.
std::vector<CensusRow> table1(const std::vector<int>& rows = {}, std::uint64_t exhaustive_limit = std::uint64_t{1} << 16,
                              unsigned workers = 1);

}  // namespace cgc
