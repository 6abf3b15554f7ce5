#include "oracles.hpp"

#include "monocurve/error.hpp"
#include "monocurve/linalg.hpp"

#include <doctest.h>

#include <climits>

using namespace monocurve;

namespace {

SparseMatrix to_sparse(const std::vector<std::vector<long>>& a)
{
    std::vector<SparseMatrix::Entry> e;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0)
                e.push_back({i, j, a[i][j]});
    return SparseMatrix(a.size(), a.empty() ? 0 : a[0].size(), e);
}

std::vector<std::vector<oracle::Rational>> to_rational(const std::vector<std::vector<long>>& a)
{
    std::vector<std::vector<oracle::Rational>> r;
    for (const auto& row : a)
        r.emplace_back(row.begin(), row.end());
    return r;
}

std::vector<std::vector<long>> random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long bound,
                                             double density)
{
    std::uniform_int_distribution<long> val(-bound, bound);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols, 0));
    for (auto& row : a)
        for (auto& v : row)
            if (keep(rng))
                v = val(rng);
    return a;
}

}  // namespace

TEST_CASE("field configuration")
{
    CHECK(FieldConfig::parse("q").tag() == "q");
    CHECK(FieldConfig::parse("gf:32003").tag() == "gf:32003");
    CHECK(FieldConfig::parse("gf:2").characteristic() == 2);
    CHECK_THROWS_AS(FieldConfig::parse("gf:12"), Error);
    CHECK_THROWS_AS(FieldConfig::parse("r"), Error);
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("sparse matrix normalises entries")
{
    SparseMatrix m(2, 3, {{1, 2, 4}, {0, 0, 1}, {1, 2, -4}, {0, 1, 2}});
    CHECK(m.entries().size() == 2);
    CHECK_THROWS_AS(SparseMatrix(2, 2, {{2, 0, 1}}), Error);
    CHECK(rank(m, FieldConfig::rationals()) == 1);
}

TEST_CASE("characteristic matters")
{
    const std::vector<std::vector<long>> a = {{1, 1}, {1, -1}};
    CHECK(rank(to_sparse(a), FieldConfig::rationals()) == 2);
    CHECK(rank(to_sparse(a), FieldConfig::prime_field(2)) == 1);
}

TEST_CASE("rank agrees with dense rational elimination")
{
    std::mt19937 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        // dense cases stay small so the rational oracle stays fast
        const bool sparse = trial % 2 == 1;
        const std::size_t top = sparse ? 90 : 40;
        const std::size_t r = std::uniform_int_distribution<std::size_t>(1, top)(rng);
        const std::size_t c = std::uniform_int_distribution<std::size_t>(1, top)(rng);
        auto a = random_matrix(rng, r, c, trial % 3 == 0 ? 1 : 1000, sparse ? 0.08 : 0.5);
        // force dependencies
        if (r > 3)
            for (std::size_t j = 0; j < c; ++j)
                a[r - 1][j] = 3 * a[0][j] - 7 * a[1][j];
        INFO(r << "x" << c);
        CHECK(rank(to_sparse(a), FieldConfig::rationals()) == oracle::rank(to_rational(a)));
        CHECK(rank(to_sparse(a), FieldConfig::prime_field(101)) == oracle::rank_mod(a, 101));
        CHECK(rank(to_sparse(a).transpose(), FieldConfig::rationals()) == oracle::rank(to_rational(a)));
    }
}

TEST_CASE("huge entries overflow into big integers")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_matrix(rng, 12, 12, LONG_MAX / 4, 0.7);
        CHECK(rank(to_sparse(a), FieldConfig::rationals()) == oracle::rank(to_rational(a)));
        IncrementalSpan span(12, FieldConfig::rationals());
        std::size_t independent = 0;
        for (const auto& row : a)
            independent += span.add_vector(row) ? 1 : 0;
        CHECK(independent == span.rank());
        CHECK(span.rank() == oracle::rank(to_rational(a)));
    }
}

TEST_CASE("incremental span")
{
    IncrementalSpan span(3, FieldConfig::rationals());
    CHECK(span.add_vector(std::vector<long>{1, 2, 3}));
    CHECK(span.add_vector(std::vector<long>{0, 1, 1}));
    CHECK_FALSE(span.add_vector(std::vector<long>{2, 5, 7}));
    CHECK_FALSE(span.add_vector(std::vector<long>{0, 0, 0}));
    CHECK(span.add_vector(std::vector<long>{0, 0, 5}));
    CHECK(span.rank() == 3);
    CHECK_THROWS_AS(span.add_vector(std::vector<long>{1, 2}), Error);

    IncrementalSpan mod(2, FieldConfig::prime_field(3));
    CHECK(mod.add_vector(std::vector<long>{1, 1}));
    CHECK_FALSE(mod.add_vector(std::vector<long>{4, 4}));
    CHECK(mod.add_vector(std::vector<long>{1, 2}));
}

TEST_CASE("entries divisible by the characteristic vanish")
{
    // 51 x 70 keeps the sparse path; every entry of row 0 is a multiple of 7
    std::vector<SparseMatrix::Entry> e;
    for (std::size_t j = 0; j < 70; ++j)
        e.push_back({0, j, 7 * static_cast<long>(j + 1)});
    for (std::size_t i = 1; i < 51; ++i)
        e.push_back({i, i, 14});
    e.push_back({50, 69, 1});
    const SparseMatrix m(51, 70, e);
    CHECK(rank(m, FieldConfig::prime_field(7)) == 1);
    CHECK(rank(m, FieldConfig::rationals()) == 51);

    IncrementalSpan span(3, FieldConfig::prime_field(7));
    CHECK_FALSE(span.add_vector(std::vector<long>{7, 14, -21}));
    CHECK(span.add_vector(std::vector<long>{7, 1, 0}));
}
