#pragma once

#include "monocurve/betti.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace monocurve {

/// x^a in n variables x_1 > x_2 > ... > x_n (stored 0-based).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial variable(std::size_t n, std::size_t i);

    std::size_t num_vars() const { return exponents_.size(); }
    int degree() const { return degree_; }
    int operator[](std::size_t i) const { return exponents_[i]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool divides(const Monomial& other) const;
    /// Largest 0-based index with a positive exponent; empty for 1.
    std::optional<std::size_t> max_index() const;

    Monomial operator*(const Monomial& other) const;
    Monomial times_variable(std::size_t i) const;
    /// Requires exponent i to be positive.
    Monomial over_variable(std::size_t i) const;

    std::string to_string() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents_ == b.exponents_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exponents_ <=> b.exponents_; }

private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

/// Lexicographic comparison, x_1 > x_2 > ... > x_n.
bool lex_greater(const Monomial& a, const Monomial& b);
/// Degree reverse lexicographic comparison with the same variable order.
bool degrevlex_less(const Monomial& a, const Monomial& b);

/// All monomials of degree d in n variables, in decreasing lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);

/// Monomial ideal with its minimal generators. Generators are minimalized on
/// construction and kept sorted by (degree, decreasing lex).
class MonomialIdeal {
public:
    explicit MonomialIdeal(std::size_t n, std::vector<Monomial> generators = {});

    static MonomialIdeal maximal(std::size_t n);
    static MonomialIdeal power_of_maximal(std::size_t n, int d);

    std::size_t num_vars() const { return n_; }
    const std::vector<Monomial>& generators() const { return generators_; }

    bool contains(const Monomial& u) const;
    bool contains(const MonomialIdeal& other) const;
    /// Finite colength iff every variable has a pure power in the ideal.
    bool has_finite_colength() const;
    /// Monomials outside the ideal; throws InfiniteColength.
    std::vector<Monomial> standard_monomials() const;
    /// x_i u / x_max(u) in the ideal for every generator u and i < max(u).
    bool is_stable() const;

    std::string to_string() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_;
    std::vector<Monomial> generators_;
};

/// Hilbert function of S/J by degree. `colength` is set when the quotient
/// has finite length; `hf` always covers 0 .. d_max.
struct HilbertData {
    std::vector<long> hf;
    std::optional<long> colength;

    bool infinite() const { return !colength.has_value(); }
    long at(std::size_t d) const { return d < hf.size() ? hf[d] : 0; }
    /// Hilbert-Samuel function: sum of hf up to d.
    long hs(std::size_t d) const;
};

HilbertData hilbert_function(const MonomialIdeal& j, int d_max);
/// Full Hilbert function of a finite colength quotient (up to its last
/// nonzero degree). Throws InfiniteColength.
HilbertData hilbert_function(const MonomialIdeal& j);

/// a^<d>, the Macaulay bound for hf(d+1) given hf(d) = a (d >= 1).
long macaulay_bound(long a, int d);

/// The lexsegment ideal with the given Hilbert function, which is taken to be
/// zero past its last entry. Throws NotMacaulay.
MonomialIdeal lex_from_hilbert(std::span<const long> hf, std::size_t n);

/// Total Betti numbers b_i(L) of a stable ideal by the Eliahou-Kervaire
/// formula b_i(L) = sum over generators u of C(max(u) - 1, i). Throws
/// NotStable.
BettiTable eliahou_kervaire_betti(const MonomialIdeal& l);

/// The very compressed lexsegment ideal of colength m in n variables.
MonomialIdeal very_compressed(long m, std::size_t n);

/// Image of the ideal modulo the last variable, in n - 1 variables.
MonomialIdeal hyperplane_section(const MonomialIdeal& l);

/// (x^alpha) + sum_i x^(alpha-i) y^(betas_i + i) + (y^beta) in k[x, y].
/// Throws BadProfile unless 2 <= alpha <= beta and the betas are
/// nondecreasing in [0, beta - alpha] with alpha - 1 entries.
MonomialIdeal two_var_lex(int alpha, int beta, std::span<const int> betas);

/// Text format: a header line "n=<int>", then one generator per line as
/// space-separated exponents.
void write_ideal(std::ostream& out, const MonomialIdeal& ideal);
MonomialIdeal read_ideal(std::istream& in);

}  // namespace monocurve
