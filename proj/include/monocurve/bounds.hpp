#pragma once

#include "monocurve/arith.hpp"
#include "monocurve/betti.hpp"
#include "monocurve/interval.hpp"
#include "monocurve/linalg.hpp"
#include "monocurve/monomial.hpp"
#include "monocurve/semigroup.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace monocurve {

/// i * C(w+1, i+1). Throws RangeError unless w >= 1 and i >= 1.
BigInt bound_conjecture(long w, long i);
/// i * C(m, i+1). Throws RangeError unless m >= 2 and i >= 1.
BigInt bound_valla(long m, long i);
/// (3e)^sqrt(2w), e = exp(1). Throws RangeError unless w >= 1.
Interval three_e_power(long w);
/// C(w, i) * (3e)^sqrt(2w). Throws RangeError unless w >= 1 and i >= 0.
Interval bound_thm14(long w, long i);

enum class CheckStatus { Equal, Pass, Violation, Borderline };

std::string_view to_string(CheckStatus status);

/// Exact comparison of computed <= bound.
CheckStatus compare(const BigInt& computed, const BigInt& bound);
/// computed <= bound passes only below the lower end of the interval. A value
/// inside the interval is Borderline unless the interval is a single point.
CheckStatus compare(const BigInt& computed, const Interval& bound);

using Quantity = std::variant<BigInt, Interval>;

std::string quantity_to_string(const Quantity& q);

struct BoundRecord {
    long index = 0;
    /// Extra labelled integers (for example C and D of a hyperplane estimate).
    std::vector<std::pair<std::string, long>> context;
    BigInt computed;
    Quantity bound;
    std::string bound_name;
    CheckStatus status = CheckStatus::Pass;
};

/// A real inequality lhs >= rhs, decided only when the intervals separate.
struct InequalityCheck {
    std::string name;
    long w = 0;
    Interval lhs;
    Interval rhs;
    CheckStatus status = CheckStatus::Pass;
};

InequalityCheck check_at_least(std::string name, long w, const Interval& lhs, const Interval& rhs);

struct BoundReport {
    std::string subject;
    std::optional<FieldConfig> field;
    std::vector<BoundRecord> records;
    std::vector<InequalityCheck> inequalities;

    /// No violations and no borderline cases.
    bool pass() const;
    bool has_borderline() const;
    std::vector<const BoundRecord*> violations() const;
};

/// Compare b_i, i >= 1, against the conjectured, the multiplicity and the
/// exponential width bounds; b_1 is also compared with C(w+1, 2).
BoundReport check_betti(const NumericalSemigroup& s, const BettiTable& betti);
BoundReport check_semigroup(const NumericalSemigroup& s, const FieldConfig& field);

/// Adds records b_i(R) <= b_i(Q/J) for i >= 0.
void append_initial_ideal_records(BoundReport& report, const BettiTable& semigroup,
                                  const BettiTable& initial_quotient);

/// C = ceil(2 sqrt w) - 2 and D = floor(sqrt(6w - 2)) - 2, exactly.
long hyperplane_c(long w);
long hyperplane_d(long w);
/// w + C(C+D-2, C-1) - (C-1) + (2w-4) - D.
BigInt hyperplane_quantity(long w);

/// Checks hyperplane_quantity(w) <= (3e)^sqrt(2w) for each w in range, and
/// the two large-w inequalities at every sample point.
BoundReport verify_prop43_range(long w_min, long w_max,
                                const std::vector<long>& samples = {112, 200, 1000});

struct Thm51Triple {
    long w;
    long alpha;
    long beta;
    BigInt b0;
    BigInt b1;
    BigInt bound0;
    BigInt bound1;

    friend bool operator==(const Thm51Triple&, const Thm51Triple&) = default;
};

/// (w, alpha, beta) admitted by the degree constraints whose Betti estimates
/// exceed C(w+1, 2) or 2 C(w+1, 3), sorted by (w, alpha, beta).
/// Throws RangeError unless 3 <= w_min.
std::vector<Thm51Triple> thm51_sweep(long w_min, long w_max);
/// Number of admissible (alpha, beta) for a single w, exceptions or not.
long thm51_admissible_count(long w);
std::size_t distinct_pairs(const std::vector<Thm51Triple>& triples);
/// (sqrt(6w+4) - 1)(2w+1) + 2 <= 5 w^(3/2) <= C(w+1, 2) at w.
std::vector<InequalityCheck> thm51_closed_form(long w);

/// Checks HS(S/I, d) <= 1 + d w for all d (ConstraintViolated otherwise),
/// then compares b_i(S/I), i = 0..n, with C(w, i) (3e)^sqrt(2w).
BoundReport verify_hs_problem(const MonomialIdeal& ideal, long w,
                              const FieldConfig& field = FieldConfig::rationals());

struct ShiftRow {
    long j;
    /// Empty when the shift has gcd != 1 and was skipped.
    std::vector<long> generators;
    std::vector<std::size_t> betti;
    bool sampled() const { return !generators.empty(); }
};

struct ShiftScan {
    long width = 0;
    std::vector<ShiftRow> rows;
    /// Least j_0 with b(j + w) = b(j) for all sampled j >= j_0, when at least
    /// one such comparison exists.
    std::optional<long> onset;
    /// Smallest p dividing w with b(j + p) = b(j) for all sampled j >= onset.
    std::optional<long> period;
};

/// Throws PreconditionError when j_max < 2w.
ShiftScan shift_scan(const NumericalSemigroup& s, long j_max, const FieldConfig& field);

/// (y_1..y_{w-1})^2 + y_w^q (y_r, ..., y_w) in w variables, m = q w + r with
/// 1 <= r <= w. Throws RangeError unless 1 <= w <= m - 2.
MonomialIdeal interval_initial_ideal_closed_form(long m, long w);

struct InitialIdealCheck {
    bool contained = false;
    bool hilbert_samuel = false;
    bool colength = false;
    /// First violating degree for the Hilbert-Samuel inequality.
    std::optional<long> failing_degree;
    long computed_colength = 0;

    bool ok() const { return contained && hilbert_samuel && colength; }
};

/// J inside (x_1..x_{nu-1})^2 + x_nu^q (x_1..x_nu) with q = floor((m-1)/w),
/// HS(Q/J, d) <= 1 + d w for all d, and colength m.
InitialIdealCheck check_initial_ideal(const NumericalSemigroup& s, const MonomialIdeal& j);

/// First d at which HS(gr(R_bar), d) > HS(gr of the interval completion, d),
/// if any, up to the larger of the two maximal orders.
std::optional<int> hs_domination_failure(const NumericalSemigroup& s);

}  // namespace monocurve
