#pragma once

#include "monocurve/betti.hpp"
#include "monocurve/linalg.hpp"
#include "monocurve/monomial.hpp"
#include "monocurve/semigroup.hpp"

#include <cstddef>
#include <limits>
#include <vector>

namespace monocurve {

/// A finite module with a monomial basis over k[x_1..x_n]: each variable
/// sends a basis element to another basis element or to zero. Every basis
/// element and variable carries a degree, and actions must be homogeneous.
class MonomialModule {
public:
    static constexpr std::size_t kZero = std::numeric_limits<std::size_t>::max();

    /// action[v][b] is the image of basis element b under variable v, or
    /// kZero. Throws NonCommutingActions, DimensionMismatch, or
    /// InvalidInput for inhomogeneous actions.
    MonomialModule(std::vector<Degree> basis_degrees, std::vector<Degree> variable_degrees,
                   std::vector<std::vector<std::size_t>> action);

    std::size_t dimension() const { return basis_degrees_.size(); }
    std::size_t num_vars() const { return variable_degrees_.size(); }
    std::size_t act(std::size_t var, std::size_t b) const { return action_[var][b]; }
    const Degree& degree(std::size_t b) const { return basis_degrees_[b]; }
    const Degree& variable_degree(std::size_t v) const { return variable_degrees_[v]; }

private:
    std::vector<Degree> basis_degrees_;
    std::vector<Degree> variable_degrees_;
    std::vector<std::vector<std::size_t>> action_;
};

/// Betti numbers of M as the homology of the Koszul complex on the acting
/// variables, computed strand by strand in the module's grading.
BettiTable koszul_betti(const MonomialModule& m, const FieldConfig& field);

/// Euler characteristic of the Koszul complex: sum (-1)^i C(n, i) dim M.
long koszul_euler_characteristic(const MonomialModule& m);

/// The artinian reduction R_bar as a module over k[x_1..x_nu], basis the
/// Apery set, graded by the semigroup.
MonomialModule artinian_reduction(const NumericalSemigroup& s, const AperyData& apery);

/// b_i(R_Gamma), with semigroup-graded pieces.
BettiTable betti_semigroup(const NumericalSemigroup& s, const FieldConfig& field);

/// The same graded Betti numbers through reduced homology of the squarefree
/// divisor complexes on {g_0, ..., g_nu}; an independent cross-check.
BettiTable divisor_complex_betti(const NumericalSemigroup& s, const FieldConfig& field);

/// J_Gamma, the revlex initial ideal of the ideal of initial forms of the
/// artinian reduction, in variables x_1..x_nu. Computed degree by degree
/// over the Apery basis without Groebner bases.
MonomialIdeal tangent_cone_initial_ideal(const NumericalSemigroup& s);

/// S/J as a monomial module on its standard monomials, finely graded.
MonomialModule quotient_module(const MonomialIdeal& j);

/// Betti numbers of S/J. Throws InfiniteColength.
BettiTable betti_monomial_quotient(const MonomialIdeal& j, const FieldConfig& field);

}  // namespace monocurve
