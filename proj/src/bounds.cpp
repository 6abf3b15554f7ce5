#include "monocurve/bounds.hpp"

#include "monocurve/error.hpp"
#include "monocurve/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace monocurve {

BigInt bound_conjecture(long w, long i)
{
    if (w < 1 || i < 1)
        throw Error(ErrorCode::RangeError, "conjectured bound needs w >= 1 and i >= 1");
    return BigInt(i) * binomial(w + 1, i + 1);
}

BigInt bound_valla(long m, long i)
{
    if (m < 2 || i < 1)
        throw Error(ErrorCode::RangeError, "multiplicity bound needs m >= 2 and i >= 1");
    return BigInt(i) * binomial(m, i + 1);
}

Interval three_e_power(long w)
{
    if (w < 1)
        throw Error(ErrorCode::RangeError, "width must be at least 1");
    // (3e)^s = exp(s (1 + ln 3))
    const Interval s = Interval(2 * w).sqrt();
    return (s * (Interval(1) + Interval(3).log())).exp();
}

Interval bound_thm14(long w, long i)
{
    if (w < 1 || i < 0)
        throw Error(ErrorCode::RangeError, "exponential bound needs w >= 1 and i >= 0");
    const BigInt c = binomial(w, i);
    if (c == 0)
        return Interval(0L);
    return Interval(c) * three_e_power(w);
}

std::string_view to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::Equal: return "equal";
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Violation: return "violation";
    case CheckStatus::Borderline: return "borderline";
    }
    return "unknown";
}

CheckStatus compare(const BigInt& computed, const BigInt& bound)
{
    if (computed == bound)
        return CheckStatus::Equal;
    return computed < bound ? CheckStatus::Pass : CheckStatus::Violation;
}

CheckStatus compare(const BigInt& computed, const Interval& bound)
{
    const int where = bound.locate(computed);
    if (where < 0)
        return CheckStatus::Pass;
    if (where > 0)
        return CheckStatus::Violation;
    return bound.is_exact() ? CheckStatus::Equal : CheckStatus::Borderline;
}

std::string quantity_to_string(const Quantity& q)
{
    if (const auto* b = std::get_if<BigInt>(&q))
        return b->str();
    return std::get<Interval>(q).to_string();
}

InequalityCheck check_at_least(std::string name, long w, const Interval& lhs, const Interval& rhs)
{
    InequalityCheck c{std::move(name), w, lhs, rhs, CheckStatus::Pass};
    if (rhs.certainly_le(lhs))
        c.status = CheckStatus::Pass;
    else if (rhs.certainly_gt(lhs))
        c.status = CheckStatus::Violation;
    else
        c.status = CheckStatus::Borderline;
    return c;
}

bool BoundReport::pass() const
{
    for (const auto& r : records)
        if (r.status == CheckStatus::Violation || r.status == CheckStatus::Borderline)
            return false;
    for (const auto& c : inequalities)
        if (c.status == CheckStatus::Violation || c.status == CheckStatus::Borderline)
            return false;
    return true;
}

bool BoundReport::has_borderline() const
{
    return std::any_of(records.begin(), records.end(),
                       [](const BoundRecord& r) { return r.status == CheckStatus::Borderline; })
           || std::any_of(inequalities.begin(), inequalities.end(),
                          [](const InequalityCheck& c) { return c.status == CheckStatus::Borderline; });
}

std::vector<const BoundRecord*> BoundReport::violations() const
{
    std::vector<const BoundRecord*> out;
    for (const auto& r : records)
        if (r.status == CheckStatus::Violation || r.status == CheckStatus::Borderline)
            out.push_back(&r);
    return out;
}

namespace {

BoundRecord exact_record(long i, const BigInt& computed, const BigInt& bound, std::string name)
{
    BoundRecord r;
    r.index = i;
    r.computed = computed;
    r.bound = bound;
    r.bound_name = std::move(name);
    r.status = compare(computed, bound);
    return r;
}

}  // namespace

BoundReport check_betti(const NumericalSemigroup& s, const BettiTable& betti)
{
    BoundReport report;
    report.subject = s.to_string();
    report.field = betti.field;
    const long m = s.multiplicity();
    const long w = s.width();
    const auto b = betti.trimmed();
    if (w >= 1 && b.size() > 1)
        report.records.push_back(exact_record(1, BigInt(b[1]), binomial(w + 1, 2), "mu"));
    for (std::size_t i = 1; i < b.size(); ++i) {
        const long li = static_cast<long>(i);
        const BigInt value(b[i]);
        if (w >= 1)
            report.records.push_back(exact_record(li, value, bound_conjecture(w, li), "conjecture"));
        if (m >= 2)
            report.records.push_back(exact_record(li, value, bound_valla(m, li), "multiplicity"));
        if (w >= 1) {
            BoundRecord r;
            r.index = li;
            r.computed = value;
            const Interval bound = bound_thm14(w, li);
            r.status = compare(value, bound);
            r.bound = bound;
            r.bound_name = "width_exponential";
            report.records.push_back(std::move(r));
        }
    }
    return report;
}

BoundReport check_semigroup(const NumericalSemigroup& s, const FieldConfig& field)
{
    return check_betti(s, betti_semigroup(s, field));
}

void append_initial_ideal_records(BoundReport& report, const BettiTable& semigroup,
                                  const BettiTable& initial_quotient)
{
    const std::size_t top = std::max(semigroup.total.size(), initial_quotient.total.size());
    for (std::size_t i = 0; i < top; ++i)
        report.records.push_back(exact_record(static_cast<long>(i), BigInt(semigroup.at(i)),
                                              BigInt(initial_quotient.at(i)), "initial_ideal"));
}

long hyperplane_c(long w)
{
    if (w < 1)
        throw Error(ErrorCode::RangeError, "width must be at least 1");
    return static_cast<long>(isqrt_ceil(4 * static_cast<std::uint64_t>(w))) - 2;
}

long hyperplane_d(long w)
{
    if (w < 1)
        throw Error(ErrorCode::RangeError, "width must be at least 1");
    return static_cast<long>(isqrt_floor(6 * static_cast<std::uint64_t>(w) - 2)) - 2;
}

BigInt hyperplane_quantity(long w)
{
    const long c = hyperplane_c(w);
    const long d = hyperplane_d(w);
    return BigInt(w) + binomial(c + d - 2, c - 1) - (c - 1) + (2 * w - 4) - d;
}

BoundReport verify_prop43_range(long w_min, long w_max, const std::vector<long>& samples)
{
    if (w_min < 3 || w_max < w_min)
        throw Error(ErrorCode::RangeError, "need 3 <= w_min <= w_max");
    BoundReport report;
    report.subject = "w=" + std::to_string(w_min) + ".." + std::to_string(w_max);
    for (long w = w_min; w <= w_max; ++w) {
        BoundRecord r;
        r.index = w;
        r.context = {{"C", hyperplane_c(w)}, {"D", hyperplane_d(w)}};
        r.computed = hyperplane_quantity(w);
        const Interval bound = three_e_power(w);
        r.status = compare(r.computed, bound);
        r.bound = bound;
        r.bound_name = "three_e_power";
        report.records.push_back(std::move(r));
    }
    const Interval three_e = Interval(3) * Interval::euler_e();
    for (long w : samples) {
        if (w < 1)
            throw Error(ErrorCode::RangeError, "sample points must be positive");
        const Interval s = Interval(2 * w).sqrt();
        const Interval t = Interval(6 * w - 2).sqrt();
        report.inequalities.push_back(check_at_least(
            "linear", w, Interval(3) * (s - Interval(3)), s + t - Interval(5)));
        report.inequalities.push_back(check_at_least(
            "exponential", w, (three_e * three_e - Interval(1)) * three_e.pow(s - Interval(2)),
            Interval(3 * w)));
    }
    return report;
}

long thm51_admissible_count(long w)
{
    long count = 0;
    for (long alpha = 2; (alpha + 1) * (alpha + 1) <= 6 * w + 4; ++alpha) {
        if (binomial(alpha + 2, 3) > 1 + (alpha - 1) * w)
            continue;
        for (long beta = alpha; beta <= 2 * w + 1; ++beta)
            if (binomial(alpha + 1, 3) + binomial(beta + 1, 2) <= 1 + (beta - 1) * w)
                ++count;
    }
    return count;
}

std::vector<Thm51Triple> thm51_sweep(long w_min, long w_max)
{
    if (w_min < 3)
        throw Error(ErrorCode::RangeError, "sweep needs w_min >= 3");
    std::vector<Thm51Triple> out;
    for (long w = w_min; w <= w_max; ++w) {
        const BigInt bound0 = binomial(w + 1, 2);
        const BigInt bound1 = 2 * binomial(w + 1, 3);
        for (long alpha = 2; (alpha + 1) * (alpha + 1) <= 6 * w + 4; ++alpha) {
            if (binomial(alpha + 2, 3) > 1 + (alpha - 1) * w)
                continue;
            for (long beta = alpha; beta <= 2 * w + 1; ++beta) {
                if (binomial(alpha + 1, 3) + binomial(beta + 1, 2) > 1 + (beta - 1) * w)
                    continue;
                const BigInt b0 = BigInt(alpha * beta - alpha * (alpha - 3) / 2 + 1);
                const BigInt b1 = BigInt(2 * alpha * beta - alpha * alpha + 2 * alpha);
                if (b0 > bound0 || b1 > bound1)
                    out.push_back({w, alpha, beta, b0, b1, bound0, bound1});
            }
        }
    }
    return out;
}

std::size_t distinct_pairs(const std::vector<Thm51Triple>& triples)
{
    std::set<std::pair<long, long>> pairs;
    for (const auto& t : triples)
        pairs.emplace(t.alpha, t.beta);
    return pairs.size();
}

std::vector<InequalityCheck> thm51_closed_form(long w)
{
    if (w < 1)
        throw Error(ErrorCode::RangeError, "width must be at least 1");
    const Interval lhs = (Interval(6 * w + 4).sqrt() - Interval(1)) * Interval(2 * w + 1) + Interval(2);
    const Interval mid = Interval(5) * Interval(w) * Interval(w).sqrt();
    const Interval rhs(binomial(w + 1, 2));
    return {check_at_least("alpha_beta_cap", w, mid, lhs),
            check_at_least("binomial_cap", w, rhs, mid)};
}

BoundReport verify_hs_problem(const MonomialIdeal& ideal, long w, const FieldConfig& field)
{
    if (w < 1)
        throw Error(ErrorCode::RangeError, "width must be at least 1");
    const HilbertData h = hilbert_function(ideal);
    // Past the last nonzero degree HS is constant while 1 + d w grows.
    for (std::size_t d = 0; d < h.hf.size(); ++d) {
        const long limit = 1 + static_cast<long>(d) * w;
        if (h.hs(d) > limit) {
            std::ostringstream msg;
            msg << "HS(S/I, " << d << ") = " << h.hs(d) << " exceeds " << limit;
            throw Error(ErrorCode::ConstraintViolated, msg.str());
        }
    }
    const BettiTable b = betti_monomial_quotient(ideal, field);
    BoundReport report;
    report.subject = ideal.to_string();
    report.field = field;
    for (std::size_t i = 0; i <= ideal.num_vars(); ++i) {
        BoundRecord r;
        r.index = static_cast<long>(i);
        r.computed = BigInt(b.at(i));
        const Interval bound = bound_thm14(w, r.index);
        r.status = compare(r.computed, bound);
        r.bound = bound;
        r.bound_name = "width_exponential";
        report.records.push_back(std::move(r));
    }
    return report;
}

ShiftScan shift_scan(const NumericalSemigroup& s, long j_max, const FieldConfig& field)
{
    const long w = s.width();
    if (j_max < 2 * w)
        throw Error(ErrorCode::PreconditionError,
                    "j_max must be at least 2w = " + std::to_string(2 * w));
    ShiftScan scan;
    scan.width = w;
    for (long j = 0; j <= j_max; ++j) {
        ShiftRow row{j, {}, {}};
        long g = 0;
        for (long x : s.generators())
            g = std::gcd(g, x + j);
        if (g == 1) {
            const auto shifted = shift(s, j);
            row.generators = shifted.generators();
            row.betti = betti_semigroup(shifted, field).trimmed();
        }
        scan.rows.push_back(std::move(row));
    }

    // Rows are indexed by j, so row j + p sits at position j + p.
    auto mismatch_after = [&](long p, long from) {
        std::optional<long> last;
        bool compared = false;
        for (long j = from; j + p <= j_max; ++j) {
            const auto& a = scan.rows[static_cast<std::size_t>(j)];
            const auto& b = scan.rows[static_cast<std::size_t>(j + p)];
            if (!a.sampled() || !b.sampled())
                continue;
            compared = true;
            if (a.betti != b.betti)
                last = j;
        }
        return std::make_pair(last, compared);
    };

    if (w == 0)
        return scan;
    const auto [last, compared] = mismatch_after(w, 0);
    if (!compared)
        return scan;
    const long onset = last ? *last + 1 : 0;
    if (!mismatch_after(w, onset).second)
        return scan;
    scan.onset = onset;
    for (long p = 1; p <= w; ++p) {
        if (w % p != 0)
            continue;
        const auto [bad, any] = mismatch_after(p, onset);
        if (any && !bad) {
            scan.period = p;
            break;
        }
    }
    return scan;
}

MonomialIdeal interval_initial_ideal_closed_form(long m, long w)
{
    if (w < 1 || w > m - 2)
        throw Error(ErrorCode::RangeError, "closed form needs 1 <= w <= m - 2");
    const long q = (m - 1) / w;
    const long r = m - q * w;
    const std::size_t n = static_cast<std::size_t>(w);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = i; k + 1 < n; ++k)
            gens.push_back(Monomial::variable(n, i) * Monomial::variable(n, k));
    for (long k = r; k <= w; ++k) {
        std::vector<int> e(n, 0);
        e[n - 1] = static_cast<int>(q);
        e[static_cast<std::size_t>(k - 1)] += 1;
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

InitialIdealCheck check_initial_ideal(const NumericalSemigroup& s, const MonomialIdeal& j)
{
    InitialIdealCheck out;
    const long m = s.multiplicity();
    const long w = s.width();
    const std::size_t n = j.num_vars();
    if (w < 1 || n == 0)
        return out;
    const long q = (m - 1) / w;
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = i; k + 1 < n; ++k)
            gens.push_back(Monomial::variable(n, i) * Monomial::variable(n, k));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<int> e(n, 0);
        e[n - 1] = static_cast<int>(q);
        e[k] += 1;
        gens.emplace_back(std::move(e));
    }
    out.contained = MonomialIdeal(n, std::move(gens)).contains(j);

    const HilbertData h = hilbert_function(j);
    out.hilbert_samuel = true;
    for (std::size_t d = 0; d < h.hf.size(); ++d)
        if (h.hs(d) > 1 + static_cast<long>(d) * w) {
            out.hilbert_samuel = false;
            out.failing_degree = static_cast<long>(d);
            break;
        }
    out.computed_colength = h.colength.value_or(-1);
    out.colength = out.computed_colength == m;
    return out;
}

std::optional<int> hs_domination_failure(const NumericalSemigroup& s)
{
    const AperyData a = apery_set(s);
    const AperyData b = apery_set(interval_completion(s));
    const int top = std::max(a.max_order(), b.max_order());
    for (int d = 0; d <= top; ++d)
        if (hilbert_samuel_gr(a, d) > hilbert_samuel_gr(b, d))
            return d;
    return std::nullopt;
}

}  // namespace monocurve
