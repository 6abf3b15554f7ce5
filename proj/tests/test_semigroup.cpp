#include "oracles.hpp"

#include "monocurve/error.hpp"
#include "monocurve/semigroup.hpp"

#include <doctest.h>

using namespace monocurve;

namespace {

std::vector<long> values(const AperyData& a)
{
    std::vector<long> v;
    for (const auto& e : a.elements)
        v.push_back(e.value);
    return v;
}

}  // namespace

TEST_CASE("minimal generators and basic invariants")
{
    const auto s = NumericalSemigroup::from_generators({4, 5, 6, 7});
    CHECK(s.multiplicity() == 4);
    CHECK(s.width() == 3);
    CHECK(s.frobenius() == 3);
    CHECK(s.nu() == 3);

    const auto t = NumericalSemigroup::from_generators({9, 3, 5, 10, 6});
    CHECK(t.generators() == std::vector<long>{3, 5});
    CHECK(t.frobenius() == 7);
    CHECK(t.to_string() == "<3,5>");

    const auto n = NumericalSemigroup::from_generators({1, 5});
    CHECK(n.generators() == std::vector<long>{1});
    CHECK(n.conductor() == 0);
    CHECK(n.contains(0));
    CHECK_FALSE(n.contains(-1));
}

TEST_CASE("input validation")
{
    auto code = [](std::initializer_list<long> g) {
        try {
            NumericalSemigroup::from_generators(g);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::PreconditionError;
    };
    CHECK(code({}) == ErrorCode::EmptyInput);
    CHECK(code({4, 6}) == ErrorCode::NonCofinite);
    CHECK(code({0, 3}) == ErrorCode::InvalidInput);
    CHECK(code({-2, 3}) == ErrorCode::InvalidInput);
}

TEST_CASE("Apery set with orders")
{
    const auto s = NumericalSemigroup::from_generators({7, 9, 10});
    const auto a = apery_set(s);
    CHECK(values(a) == std::vector<long>{0, 29, 9, 10, 18, 19, 20});
    CHECK(a.max_order() == 3);
    CHECK(a.count_of_order(2) == 3);
    CHECK(hilbert_samuel_gr(a, 0) == 1);
    CHECK(hilbert_samuel_gr(a, 1) == 3);
    CHECK(hilbert_samuel_gr(a, 3) == 7);
    CHECK(hilbert_samuel_gr(a, 99) == 7);
}

TEST_CASE("two generators: Frobenius number ab - a - b")
{
    for (long a = 2; a <= 15; ++a)
        for (long b = a + 1; b <= 25; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            CHECK(NumericalSemigroup::from_generators({a, b}).frobenius() == a * b - a - b);
        }
}

TEST_CASE("random semigroups agree with brute force")
{
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const auto gens = oracle::random_generators(rng, 14, 4);
        const auto s = NumericalSemigroup::from_generators(gens);
        INFO("gens " << s.to_string());
        CHECK(s.generators() == oracle::minimal_generators(gens));
        CHECK(s.frobenius() == oracle::frobenius(gens));

        const long limit = s.conductor() + 10;
        const auto in = oracle::members(gens, limit);
        for (long x = 0; x <= limit; ++x)
            REQUIRE(s.contains(x) == in[static_cast<std::size_t>(x)]);

        const auto a = apery_set(s);
        CHECK(values(a) == oracle::apery(gens));
        std::map<long, int> memo;
        for (const auto& e : a.elements)
            CHECK(e.order == oracle::order(s.generators(), e.value, memo));
        // HS is nondecreasing and reaches m at the maximal order
        for (int d = 1; d <= a.max_order(); ++d)
            CHECK(hilbert_samuel_gr(a, d) >= hilbert_samuel_gr(a, d - 1));
        CHECK(hilbert_samuel_gr(a, a.max_order()) == s.multiplicity());
    }
}

TEST_CASE("interval completion and shifts")
{
    const auto s = NumericalSemigroup::from_generators({5, 7, 9});
    CHECK(interval_completion(s).generators() == std::vector<long>{5, 6, 7, 8, 9});
    CHECK_FALSE(in_interval_range(s));
    CHECK(in_interval_range(NumericalSemigroup::from_generators({7, 9, 10})));
    CHECK_FALSE(in_interval_range(NumericalSemigroup::from_generators({3, 7})));
    CHECK_THROWS_AS(interval_completion(NumericalSemigroup::from_generators({1})), Error);

    CHECK(shift(s, 2).generators() == std::vector<long>{7, 9, 11});
    CHECK_THROWS_AS(shift(s, 1), Error);
    CHECK_THROWS_AS(shift(s, -1), Error);
}

TEST_CASE("enumeration by width matches a brute-force listing")
{
    for (long w = 1; w <= 4; ++w) {
        const auto listed = enumerate_by_width(w, 2, 12);
        std::set<std::vector<long>> expected;
        for (long m = 2; m <= 12; ++m)
            for (unsigned mask = 0; mask < (1u << (w - 1)); ++mask) {
                std::vector<long> g = {m};
                for (long k = 1; k < w; ++k)
                    if (mask & (1u << (k - 1)))
                        g.push_back(m + k);
                g.push_back(m + w);
                long d = 0;
                for (long x : g)
                    d = std::gcd(d, x);
                if (d != 1)
                    continue;
                const auto mg = oracle::minimal_generators(g);
                if (mg.front() == m && mg.back() == m + w)
                    expected.insert(mg);
            }
        std::vector<std::vector<long>> got;
        for (const auto& s : listed) {
            CHECK(s.width() == w);
            got.push_back(s.generators());
        }
        CHECK(std::is_sorted(got.begin(), got.end(), [](const auto& a, const auto& b) {
            return a.front() != b.front() ? a.front() < b.front() : a < b;
        }));
        CHECK(std::set<std::vector<long>>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
    }
}
