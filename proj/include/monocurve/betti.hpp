#pragma once

#include "monocurve/linalg.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace monocurve {

/// A grading degree: one component for semigroup gradings, n components
/// for the fine grading of monomial modules.
using Degree = std::vector<long>;

struct GradedBetti {
    std::size_t index;
    Degree degree;
    std::size_t dim;

    friend bool operator==(const GradedBetti&, const GradedBetti&) = default;
};

/// Total Betti numbers b_0 .. b_max and, when known, their graded pieces
/// sorted by (index, degree). Always tagged with the field used.
struct BettiTable {
    std::vector<std::size_t> total;
    std::vector<GradedBetti> graded;
    FieldConfig field = FieldConfig::rationals();

    std::size_t at(std::size_t i) const { return i < total.size() ? total[i] : 0; }
    /// Totals without trailing zeros.
    std::vector<std::size_t> trimmed() const;
    std::string to_string() const;
};

/// Betti numbers of S/I from those of I: (1, b_0(I), b_1(I), ...).
BettiTable quotient_from_ideal(const BettiTable& ideal);
/// Betti numbers of I from those of S/I (drops b_0(S/I)).
BettiTable ideal_from_quotient(const BettiTable& quotient);

}  // namespace monocurve
