// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Exact checks throughout; time limits are wall clock.

#include "oracles.hpp"

#include "monocurve/bounds.hpp"
#include "monocurve/resolution.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace monocurve;

namespace {

const FieldConfig Q = FieldConfig::rationals();

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why)
    {
        if (ok)
            note = why;
        ok = false;
    }
};

struct CorpusEntry {
    NumericalSemigroup s;
    BettiTable betti;
};

// Every semigroup with 1 <= w <= 5 and m <= 30.
const std::vector<CorpusEntry>& corpus()
{
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        for (long w = 1; w <= 5; ++w)
            for_each_by_width(w, 2, 30, [&](const NumericalSemigroup& s) { out.push_back({s, betti_semigroup(s, Q)}); });
        return out;
    }();
    return entries;
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs > limit_seconds)
        o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
    if (!o.ok)
        ++failures;
    std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title.c_str(), secs,
                o.note.empty() ? "" : "  ", o.note.c_str());
    std::fflush(stdout);
}

std::string str(const std::vector<long>& g)
{
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < g.size(); ++i)
        out << (i ? "," : "") << g[i];
    out << '>';
    return out.str();
}

}  // namespace

int main()
{
    criterion(1, "sharp family <m..2m-1>, m = 2..8, b_i = i C(m, i+1)", 10, [] {
        Outcome o;
        for (long m = 2; m <= 8; ++m) {
            std::vector<long> g;
            for (long x = m; x <= 2 * m - 1; ++x)
                g.push_back(x);
            const auto b = betti_semigroup(NumericalSemigroup::from_generators(g), Q).trimmed();
            std::vector<std::size_t> expected = {1};
            for (long i = 1; i <= m - 1; ++i)
                expected.push_back(static_cast<std::size_t>(i * oracle::binom(m, i + 1)));
            if (b != expected)
                o.fail("mismatch at m=" + std::to_string(m));
        }
        return o;
    });

    criterion(2, "3-generated, m <= 30, g_2 <= 3m: b_1 <= 3 and b_2 <= 2", 60, [] {
        Outcome o;
        long count = 0;
        for (long m = 2; m <= 30; ++m)
            for (long a = m + 1; a <= 3 * m; ++a)
                for (long c = a + 1; c <= 3 * m; ++c) {
                    if (std::gcd(std::gcd(m, a), c) != 1)
                        continue;
                    const auto s = NumericalSemigroup::from_generators({m, a, c});
                    const auto b = betti_semigroup(s, Q);
                    ++count;
                    if (b.at(1) > 3 || b.at(2) > 2)
                        o.fail("violated by " + s.to_string());
                }
        o.note = o.ok ? std::to_string(count) + " triples" : o.note;
        return o;
    });

    criterion(3, "interval initial ideal closed form, 3 <= w <= m-2, m <= 25", 30, [] {
        Outcome o;
        long pairs = 0;
        for (long m = 5; m <= 25; ++m)
            for (long w = 3; w <= m - 2; ++w) {
                std::vector<long> g;
                for (long x = m; x <= m + w; ++x)
                    g.push_back(x);
                ++pairs;
                if (!(tangent_cone_initial_ideal(NumericalSemigroup::from_generators(g))
                      == interval_initial_ideal_closed_form(m, w)))
                    o.fail("mismatch at m=" + std::to_string(m) + " w=" + std::to_string(w));
            }
        if (o.ok)
            o.note = std::to_string(pairs) + " pairs";
        return o;
    });

    criterion(4, "initial ideal containment, HS <= 1+dw, colength m (w <= 5, m <= 30, w <= m-2)", 300, [] {
        Outcome o;
        long checked = 0;
        for (const auto& e : corpus()) {
            if (!in_interval_range(e.s))
                continue;
            const auto j = tangent_cone_initial_ideal(e.s);
            const auto c = check_initial_ideal(e.s, j);
            if (!c.ok())
                o.fail("violated by " + e.s.to_string());
            if (!verify_hs_problem(j, e.s.width(), Q).pass())
                o.fail("exponential bound fails for J of " + e.s.to_string());
            ++checked;
        }
        if (o.ok)
            o.note = std::to_string(checked) + " semigroups";
        return o;
    });

    criterion(5, "HS(gr, d) dominated by the interval completion", 0, [] {
        Outcome o;
        for (const auto& e : corpus())
            if (in_interval_range(e.s))
                if (const auto d = hs_domination_failure(e.s))
                    o.fail("fails for " + e.s.to_string() + " at d=" + std::to_string(*d));
        return o;
    });

    criterion(6, "b_i(R) <= b_i(Q/J) on the corpus", 0, [] {
        Outcome o;
        for (const auto& e : corpus()) {
            const auto bj = betti_monomial_quotient(tangent_cone_initial_ideal(e.s), Q);
            for (std::size_t i = 0; i < std::max(e.betti.total.size(), bj.total.size()); ++i)
                if (e.betti.at(i) > bj.at(i))
                    o.fail("fails for " + e.s.to_string() + " at i=" + std::to_string(i));
        }
        if (o.ok)
            o.note = std::to_string(corpus().size()) + " semigroups";
        return o;
    });

    criterion(7, "mu <= C(w+1,2) and b_i <= i C(w+1,i+1) on the corpus", 0, [] {
        Outcome o;
        for (const auto& e : corpus()) {
            const auto r = check_betti(e.s, e.betti);
            for (const auto* v : r.violations())
                o.fail("COUNTEREXAMPLE " + e.s.to_string() + " " + v->bound_name + " i=" + std::to_string(v->index));
        }
        return o;
    });

    criterion(8, "hyperplane estimate for 3 <= w <= 111 (109 values)", 1, [] {
        Outcome o;
        const auto r = verify_prop43_range(3, 111);
        if (r.records.size() != 109)
            o.fail("wrong row count");
        if (!r.pass())
            o.fail(r.has_borderline() ? "borderline case" : "violation");
        return o;
    });

    criterion(9, "no exceptions for 40 <= w <= 99", 5, [] {
        Outcome o;
        const auto ex = thm51_sweep(40, 99);
        if (!ex.empty())
            o.fail(std::to_string(ex.size()) + " exceptions");
        return o;
    });

    criterion(10, "exception count for 4 <= w <= 39 in [100, 400]", 0, [] {
        Outcome o;
        const auto ex = thm51_sweep(4, 39);
        o.note = std::to_string(ex.size()) + " triples, " + std::to_string(distinct_pairs(ex)) + " distinct pairs";
        if (ex.size() < 100 || ex.size() > 400)
            o.ok = false;
        return o;
    });

    criterion(11, "Eliahou-Kervaire equals Koszul on 200 random stable ideals", 60, [] {
        Outcome o;
        std::mt19937 rng(20240611);
        for (int k = 0; k < 200; ++k) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
            const auto j = oracle::random_stable_ideal(rng, n, 30);
            const auto ek = quotient_from_ideal(eliahou_kervaire_betti(j)).trimmed();
            const auto kz = betti_monomial_quotient(j, Q).trimmed();
            if (ek != kz)
                o.fail("mismatch on " + j.to_string());
        }
        return o;
    });

    criterion(12, "b_i(L) = b_i(L^) + l(S^/L^) C(n-1, i) on 100 random lex ideals", 0, [] {
        Outcome o;
        std::mt19937 rng(777);
        for (int k = 0; k < 100; ++k) {
            const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
            const auto l = lex_from_hilbert(oracle::random_macaulay_hf(rng, n, 40), n);
            // left side from Koszul homology of S/L, right side from EK on the section
            const auto left = betti_monomial_quotient(l, Q);
            const auto lhat = hyperplane_section(l);
            const auto right = eliahou_kervaire_betti(lhat);
            const long len = static_cast<long>(lhat.standard_monomials().size());
            for (std::size_t i = 0; i < n; ++i) {
                const long lhs = static_cast<long>(left.at(i + 1));
                const long rhs = static_cast<long>(right.at(i))
                                 + len * oracle::binom(static_cast<long>(n) - 1, static_cast<long>(i));
                if (lhs != rhs)
                    o.fail("mismatch on " + l.to_string() + " at i=" + std::to_string(i));
            }
        }
        return o;
    });

    criterion(13, "Koszul and divisor-complex routes agree (graded), m <= 25", 0, [] {
        Outcome o;
        for (const auto& e : corpus()) {
            if (e.s.multiplicity() > 25)
                continue;
            const auto d = divisor_complex_betti(e.s, Q);
            if (d.graded != e.betti.graded || d.total != e.betti.total)
                o.fail("mismatch on " + e.s.to_string());
        }
        return o;
    });

    criterion(14, "shift periodicity b(j+w) = b(j) from some j_0 <= 20, j <= 40", 0, [] {
        Outcome o;
        std::string summary;
        for (const auto& g : std::vector<std::vector<long>>{{2, 3}, {4, 5, 6, 7}, {5, 7, 9}}) {
            const auto scan = shift_scan(NumericalSemigroup::from_generators(g), 40, Q);
            summary += (summary.empty() ? "" : "; ") + str(g);
            if (!scan.onset || *scan.onset > 20) {
                summary += " onset beyond range";
                o.ok = false;
            } else {
                summary += " j_0=" + std::to_string(*scan.onset) + " period " + std::to_string(scan.period.value_or(0));
            }
        }
        o.note = summary;
        return o;
    });

    std::printf("%s: %d criterion failure(s)\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
