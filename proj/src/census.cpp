#include "cgc/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "cgc/circulant.hpp"
#include "cgc/registry.hpp"

namespace cgc {

std::uint64_t upper_bound(std::size_t m, const Field& f, Elem lambda) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
    const std::uint64_t r = f.mult_order(lambda);
    const std::uint64_t classes = m == 0 ? 1 : (m - 1) / r + 1;
    return checked_mul(classes, checked_pow(f.q(), m));
}

std::vector<std::size_t> admissible_shifts(std::size_t m, std::uint64_t r) {
    std::vector<std::size_t> out;
    if (m == 0 || r == 0) return out;
    for (std::uint64_t k = 0; k <= (m - 1) / r; ++k) {
        const std::size_t g = 1 + r * k;
        if (std::gcd(g, m) == 1) out.push_back(g);
    }
    return out;
}

std::uint64_t count_N(std::size_t m, std::uint64_t r) { return admissible_shifts(m, r).size(); }

std::uint64_t count_N(std::size_t m, const Field& f, Elem lambda) {
    if (lambda.is_zero()) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
    return count_N(m, f.mult_order(lambda));
}

FormulaCount invertible_count_formula(std::size_t m, const Field& f, Elem lambda) {
    const QuotientRing ring(f, m, lambda);
    const std::uint64_t n = count_N(m, ring.lambda_order());
    const UnitsCount u = units_count(ring);
    return {n, u, checked_mul(n, u.product_formula), checked_mul(n, u.local_ring)};
}

namespace {

/// Runs body(part) for part in [0, parts) on up to `workers` threads.
template <class Body>
void parallel_parts(std::uint32_t parts, unsigned workers, Body body) {
    std::atomic<std::uint32_t> next{0};
    auto run = [&] {
        for (std::uint32_t p; (p = next.fetch_add(1)) < parts;) body(p);
    };
    const unsigned k = std::max(1u, std::min<unsigned>(workers, parts));
    if (k == 1) return run();
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < k; ++i) pool.emplace_back(run);
}

std::string serialize(const Matrix& a) {
    std::string s;
    s.reserve(a.entries().size() * 2);
    for (Elem e : a.entries()) {
        s.push_back(static_cast<char>(e.code & 0xff));
        s.push_back(static_cast<char>(e.code >> 8));
    }
    return s;
}

constexpr std::size_t kSamples = 4;

}  // namespace

ExhaustiveCount enumerate_invertible_exhaustive(std::size_t m, const Field& f, Elem lambda, unsigned workers,
                                                std::uint64_t limit) {
    const QuotientRing ring(f, m, lambda);
    const auto shifts = admissible_shifts(m, ring.lambda_order());
    const std::uint64_t total = ring.size();
    if (checked_mul(std::max<std::uint64_t>(shifts.size(), 1), total) > limit)
        throw Error(ErrorKind::SearchSpaceTooLarge, "N * q^m = " + std::to_string(shifts.size() * total) +
                                                        " exceeds the enumeration limit " + std::to_string(limit));
    const std::uint32_t q = f.q();
    const std::uint64_t block = total / q;

    struct Part {
        std::uint64_t units = 0;
        std::vector<std::string> matrices;
        std::vector<std::vector<std::uint32_t>> samples;
    };
    std::vector<Part> parts(q);
    parallel_parts(q, workers, [&](std::uint32_t p) {
        Part& out = parts[p];
        for (std::uint64_t idx = p * block; idx < (p + 1) * block; ++idx) {
            const auto h = QuotientElement::from_index(ring, idx);
            if (!is_unit(h)) continue;
            ++out.units;
            if (out.samples.size() < kSamples) out.samples.push_back(h.codes());
            for (std::size_t g : shifts) out.matrices.push_back(serialize(build(CirculantSpec{f, m, g, lambda, h.coeffs(), 0})));
        }
    });

    ExhaustiveCount res;
    std::set<std::string> distinct;
    for (auto& p : parts) {
        res.unit_count += p.units;
        res.pair_count += p.matrices.size();
        distinct.insert(std::make_move_iterator(p.matrices.begin()), std::make_move_iterator(p.matrices.end()));
        for (auto& s : p.samples)
            if (res.samples.size() < kSamples) res.samples.push_back(std::move(s));
    }
    res.distinct_matrix_count = distinct.size();
    return res;
}

namespace {

std::optional<SearchHit> try_candidate(const QuotientRing& ring, const std::vector<Elem>& coeffs) {
    const QuotientElement h(ring, coeffs);
    if (!is_unit(h)) return std::nullopt;
    const QuotientElement inv = inverse(h);
    const std::size_t wi = hamming_weight(inv);
    if (wi != ring.m()) return std::nullopt;
    return SearchHit{h.codes(), inv.codes(), hamming_weight(h), wi};
}

}  // namespace

std::vector<SearchHit> full_weight_search(const Field& f, std::size_t m, const SearchOptions& opts) {
    const QuotientRing ring(f, m, f.one());
    const std::uint32_t q = f.q();
    if (q == 2) {
        // The all-ones vector is the only candidate.
        auto hit = try_candidate(ring, std::vector<Elem>(m, f.one()));
        return hit ? std::vector<SearchHit>{*hit} : std::vector<SearchHit>{};
    }
    if (opts.mode == SearchMode::Random) {
        std::mt19937_64 rng(opts.seed);
        std::vector<Elem> c(m);
        for (std::uint64_t t = 0; t < opts.trials; ++t) {
            for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % (q - 1) + 1)};
            if (auto hit = try_candidate(ring, c)) return {*hit};
        }
        return {};
    }
    // Lexicographic in (h_0, ..., h_{m-1}); partitioned by h_0.
    const std::uint64_t rest = checked_pow(q - 1, m - 1);
    std::vector<std::vector<SearchHit>> parts(q - 1);
    parallel_parts(q - 1, opts.workers, [&](std::uint32_t p) {
        std::vector<Elem> c(m);
        c[0] = Elem{p + 1};
        for (std::uint64_t t = 0; t < rest; ++t) {
            std::uint64_t v = t;
            for (std::size_t i = m - 1; i >= 1; --i) {
                c[i] = Elem{static_cast<std::uint32_t>(v % (q - 1) + 1)};
                v /= q - 1;
            }
            if (auto hit = try_candidate(ring, c)) parts[p].push_back(std::move(*hit));
        }
    });
    std::vector<SearchHit> out;
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
    return out;
}

namespace {

struct PrintedRow {
    std::size_t m;
    std::uint32_t q;
    std::uint32_t lambda;
    std::uint64_t n;
    std::vector<unsigned> degrees;
    std::uint64_t total;
};

const std::vector<PrintedRow>& printed_rows() {
    static const std::vector<PrintedRow> rows = {
        {2, 8, 1, 1, {1, 1}, 49},          {3, 8, 1, 2, {1, 2}, 882},
        {2, 9, 2, 1, {2}, 80},             {4, 8, 1, 2, {1, 1, 1, 1}, 4802},
        {4, 9, 1, 2, {1, 1, 1, 1}, 8192},  {3, 16, 1, 2, {1, 1, 1}, 6750},
        {3, 25, 1, 2, {1, 1, 1}, 27648},   {4, 25, 3, 1, {1, 1, 1, 1}, 331776},
    };
    return rows;
}

}  // namespace

std::vector<CensusRow> table1(const std::vector<int>& rows, std::uint64_t exhaustive_limit, unsigned workers) {
    std::vector<int> sel = rows;
    if (sel.empty())
        for (int i = 1; i <= static_cast<int>(kTable1Rows); ++i) sel.push_back(i);
    std::vector<CensusRow> out;
    for (int idx : sel) {
        if (idx < 1 || idx > static_cast<int>(kTable1Rows))
            throw Error(ErrorKind::IndexOutOfRange, "table rows are numbered 1.." + std::to_string(kTable1Rows));
        const PrintedRow& pr = printed_rows()[idx - 1];
        const Field f = default_field(pr.q);
        const Elem lambda = f.element(pr.lambda);
        const QuotientRing ring(f, pr.m, lambda);
        const FormulaCount fc = invertible_count_formula(pr.m, f, lambda);
        std::uint64_t arith = pr.n;
        for (unsigned d : pr.degrees) arith = checked_mul(arith, checked_pow(pr.q, d) - 1);
        CensusRow row{idx,
                      pr.m,
                      f,
                      lambda,
                      ring.lambda_order(),
                      render_factorization(factor(ring.modulus())),
                      fc.n,
                      fc.product_value,
                      fc.local_value,
                      std::nullopt,
                      pr.n,
                      pr.degrees,
                      pr.total,
                      arith};
        if (checked_mul(std::max<std::uint64_t>(fc.n, 1), ring.size()) <= exhaustive_limit)
            row.exhaustive = enumerate_invertible_exhaustive(pr.m, f, lambda, workers, exhaustive_limit);
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace cgc
