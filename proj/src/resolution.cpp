#include "monocurve/resolution.hpp"

#include "monocurve/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace monocurve {

namespace {

Degree add_degrees(const Degree& a, const Degree& b)
{
    Degree out = a;
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] += b[k];
    return out;
}

void sort_graded(std::vector<GradedBetti>& graded)
{
    std::sort(graded.begin(), graded.end(), [](const GradedBetti& a, const GradedBetti& b) {
        return a.index != b.index ? a.index < b.index : a.degree < b.degree;
    });
}

}  // namespace

MonomialModule::MonomialModule(std::vector<Degree> basis_degrees, std::vector<Degree> variable_degrees,
                               std::vector<std::vector<std::size_t>> action)
    : basis_degrees_(std::move(basis_degrees)),
      variable_degrees_(std::move(variable_degrees)),
      action_(std::move(action))
{
    const std::size_t dim = basis_degrees_.size();
    const std::size_t width = dim ? basis_degrees_.front().size()
                                  : (variable_degrees_.empty() ? 0 : variable_degrees_.front().size());
    if (action_.size() != variable_degrees_.size())
        throw Error(ErrorCode::DimensionMismatch, "one action table per variable expected");
    for (const auto& d : basis_degrees_)
        if (d.size() != width)
            throw Error(ErrorCode::DimensionMismatch, "basis degrees of mixed length");
    for (const auto& d : variable_degrees_)
        if (d.size() != width)
            throw Error(ErrorCode::DimensionMismatch, "variable degrees of mixed length");
    for (std::size_t v = 0; v < action_.size(); ++v) {
        if (action_[v].size() != dim)
            throw Error(ErrorCode::DimensionMismatch, "action table of the wrong length");
        for (std::size_t b = 0; b < dim; ++b) {
            const std::size_t t = action_[v][b];
            if (t == kZero)
                continue;
            if (t >= dim)
                throw Error(ErrorCode::DimensionMismatch, "action target outside the basis");
            if (basis_degrees_[t] != add_degrees(basis_degrees_[b], variable_degrees_[v]))
                throw Error(ErrorCode::InvalidInput, "action is not homogeneous");
        }
    }
    auto apply = [&](std::size_t v, std::size_t b) { return b == kZero ? kZero : action_[v][b]; };
    for (std::size_t u = 0; u < action_.size(); ++u)
        for (std::size_t v = u + 1; v < action_.size(); ++v)
            for (std::size_t b = 0; b < dim; ++b)
                if (apply(u, apply(v, b)) != apply(v, apply(u, b)))
                    throw Error(ErrorCode::NonCommutingActions,
                                "variables " + std::to_string(u + 1) + " and " + std::to_string(v + 1)
                                    + " do not commute on basis element " + std::to_string(b));
}

BettiTable koszul_betti(const MonomialModule& m, const FieldConfig& field)
{
    const std::size_t n = m.num_vars();
    if (n > 24)
        throw Error(ErrorCode::InvalidInput, "too many variables for the Koszul complex");
    const std::size_t subsets = std::size_t{1} << n;
    const std::size_t dim = m.dimension();

    std::vector<Degree> mask_degree(subsets);
    const std::size_t width = dim ? m.degree(0).size() : 0;
    mask_degree[0] = Degree(width, 0);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        mask_degree[mask] = add_degrees(mask_degree[mask & (mask - 1)], m.variable_degree(low));
    }

    // Each cell b * e_F lives in the strand of degree deg(b) + deg(F).
    struct Strand {
        std::vector<std::vector<std::size_t>> cells;
    };
    std::map<Degree, Strand> strands;
    std::vector<std::size_t> position(dim * subsets);
    for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            auto& strand = strands[add_degrees(m.degree(b), mask_degree[mask])];
            if (strand.cells.empty())
                strand.cells.resize(n + 1);
            auto& bucket = strand.cells[static_cast<std::size_t>(std::popcount(mask))];
            position[b * subsets + mask] = bucket.size();
            bucket.push_back(b * subsets + mask);
        }

    BettiTable table;
    table.field = field;
    table.total.assign(n + 1, 0);
    for (const auto& [degree, strand] : strands) {
        std::vector<std::size_t> ranks(n + 2, 0);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& sources = strand.cells[i];
            const auto& targets = strand.cells[i - 1];
            if (sources.empty() || targets.empty())
                continue;
            std::vector<SparseMatrix::Entry> entries;
            for (std::size_t c = 0; c < sources.size(); ++c) {
                const std::size_t b = sources[c] / subsets;
                const std::size_t mask = sources[c] % subsets;
                std::size_t before = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!(mask >> j & 1U))
                        continue;
                    const std::size_t t = m.act(j, b);
                    if (t != MonomialModule::kZero) {
                        const std::size_t row = position[t * subsets + (mask ^ (std::size_t{1} << j))];
                        entries.push_back({row, c, before % 2 == 0 ? 1L : -1L});
                    }
                    ++before;
                }
            }
            ranks[i] = rank(SparseMatrix(targets.size(), sources.size(), std::move(entries)), field);
        }
        for (std::size_t i = 0; i <= n; ++i) {
            const std::size_t size = strand.cells[i].size();
            if (ranks[i] + ranks[i + 1] > size)
                throw std::logic_error("Koszul strand with negative homology");
            const std::size_t h = size - ranks[i] - ranks[i + 1];
            if (h > 0) {
                table.total[i] += h;
                table.graded.push_back({i, degree, h});
            }
        }
    }
    long chi = 0;
    for (std::size_t i = 0; i <= n; ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(table.total[i]);
    if (chi != koszul_euler_characteristic(m))
        throw std::logic_error("Koszul homology does not match the Euler characteristic of the complex");
    sort_graded(table.graded);
    return table;
}

long koszul_euler_characteristic(const MonomialModule& m)
{
    long chi = 0;
    long binom = 1;
    const long n = static_cast<long>(m.num_vars());
    for (long i = 0; i <= n; ++i) {
        chi += (i % 2 == 0 ? 1 : -1) * binom * static_cast<long>(m.dimension());
        binom = binom * (n - i) / (i + 1);
    }
    return chi;
}

MonomialModule artinian_reduction(const NumericalSemigroup& s, const AperyData& apery)
{
    const long m = s.multiplicity();
    std::vector<Degree> basis;
    for (const auto& e : apery.elements)
        basis.push_back({e.value});
    std::vector<Degree> vars;
    std::vector<std::vector<std::size_t>> action;
    for (std::size_t v = 1; v < s.generators().size(); ++v) {
        const long g = s.generators()[v];
        vars.push_back({g});
        std::vector<std::size_t> row(apery.size(), MonomialModule::kZero);
        for (std::size_t b = 0; b < apery.size(); ++b) {
            const long target = apery.elements[b].value + g;
            const auto r = static_cast<std::size_t>(target % m);
            if (apery.elements[r].value == target)
                row[b] = r;
        }
        action.push_back(std::move(row));
    }
    return MonomialModule(std::move(basis), std::move(vars), std::move(action));
}

BettiTable betti_semigroup(const NumericalSemigroup& s, const FieldConfig& field)
{
    return koszul_betti(artinian_reduction(s, apery_set(s)), field);
}

BettiTable divisor_complex_betti(const NumericalSemigroup& s, const FieldConfig& field)
{
    const auto apery = apery_set(s);
    const auto& gens = s.generators();
    const std::size_t nu = s.nu();

    std::set<long> candidates;
    for (const auto& e : apery.elements)
        for (std::size_t mask = 0; mask < (std::size_t{1} << nu); ++mask) {
            long gamma = e.value;
            for (std::size_t j = 0; j < nu; ++j)
                if (mask >> j & 1U)
                    gamma += gens[j + 1];
            candidates.insert(gamma);
        }

    const std::size_t vertices = nu + 1;
    const std::size_t subsets = std::size_t{1} << vertices;
    std::vector<long> mask_sum(subsets, 0);
    for (std::size_t mask = 1; mask < subsets; ++mask)
        mask_sum[mask] = mask_sum[mask & (mask - 1)] + gens[static_cast<std::size_t>(std::countr_zero(mask))];

    BettiTable table;
    table.field = field;
    table.total.assign(nu + 1, 0);
    for (long gamma : candidates) {
        // faces[s] holds the faces with s vertices; position indexes them.
        std::vector<std::vector<std::size_t>> faces(vertices + 1);
        std::vector<std::size_t> position(subsets, 0);
        for (std::size_t mask = 0; mask < subsets; ++mask)
            if (s.contains(gamma - mask_sum[mask])) {
                auto& bucket = faces[static_cast<std::size_t>(std::popcount(mask))];
                position[mask] = bucket.size();
                bucket.push_back(mask);
            }
        std::vector<std::size_t> ranks(vertices + 2, 0);
        for (std::size_t size = 1; size <= vertices; ++size) {
            if (faces[size].empty())
                continue;
            std::vector<SparseMatrix::Entry> entries;
            for (std::size_t c = 0; c < faces[size].size(); ++c) {
                const std::size_t mask = faces[size][c];
                std::size_t before = 0;
                for (std::size_t j = 0; j < vertices; ++j) {
                    if (!(mask >> j & 1U))
                        continue;
                    entries.push_back({position[mask ^ (std::size_t{1} << j)], c, before % 2 == 0 ? 1L : -1L});
                    ++before;
                }
            }
            ranks[size] = rank(SparseMatrix(faces[size - 1].size(), faces[size].size(), std::move(entries)), field);
        }
        // Faces with i vertices carry reduced homology in dimension i - 1,
        // which is b_{i, gamma}.
        for (std::size_t i = 0; i <= vertices; ++i) {
            const std::size_t h = faces[i].size() - ranks[i] - ranks[i + 1];
            if (h == 0)
                continue;
            if (i >= table.total.size())
                table.total.resize(i + 1, 0);
            table.total[i] += h;
            table.graded.push_back({i, {gamma}, h});
        }
    }
    sort_graded(table.graded);
    return table;
}

MonomialIdeal tangent_cone_initial_ideal(const NumericalSemigroup& s)
{
    const std::size_t nu = s.nu();
    if (nu == 0)
        return MonomialIdeal(0);
    const auto apery = apery_set(s);
    const long m = s.multiplicity();
    const int top = apery.max_order();

    // Coordinate of each Apery element inside its order stratum.
    std::vector<std::size_t> coordinate(apery.size());
    std::vector<std::size_t> stratum_size(static_cast<std::size_t>(top) + 2, 0);
    for (std::size_t r = 0; r < apery.size(); ++r)
        coordinate[r] = stratum_size[static_cast<std::size_t>(apery.elements[r].order)]++;

    std::vector<Monomial> gens;
    for (int d = 1; d <= top + 1; ++d) {
        auto mons = monomials_of_degree(nu, d);
        std::sort(mons.begin(), mons.end(), degrevlex_less);
        const std::size_t dim = stratum_size[static_cast<std::size_t>(d)];
        IncrementalSpan span(dim, FieldConfig::rationals());
        std::vector<long> image(dim);
        for (const auto& u : mons) {
            long gamma = 0;
            for (std::size_t k = 0; k < nu; ++k)
                gamma += u[k] * s.generators()[k + 1];
            std::fill(image.begin(), image.end(), 0);
            const auto& e = apery.elements[static_cast<std::size_t>(gamma % m)];
            if (e.value == gamma && e.order == d)
                image[coordinate[static_cast<std::size_t>(gamma % m)]] = 1;
            const bool standard = span.add_vector(image);
            const bool divisible = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(u); });
            if (standard && divisible)
                throw std::logic_error("initial ideal scan is not closed under multiplication");
            if (!standard && !divisible)
                gens.push_back(u);
        }
    }
    return MonomialIdeal(nu, std::move(gens));
}

MonomialModule quotient_module(const MonomialIdeal& j)
{
    const auto standard = j.standard_monomials();
    const std::size_t n = j.num_vars();
    std::map<Monomial, std::size_t> index;
    std::vector<Degree> basis;
    for (std::size_t b = 0; b < standard.size(); ++b) {
        index.emplace(standard[b], b);
        basis.emplace_back(standard[b].exponents().begin(), standard[b].exponents().end());
    }
    std::vector<Degree> vars;
    std::vector<std::vector<std::size_t>> action;
    for (std::size_t v = 0; v < n; ++v) {
        Degree unit(n, 0);
        unit[v] = 1;
        vars.push_back(std::move(unit));
        std::vector<std::size_t> row(standard.size(), MonomialModule::kZero);
        for (std::size_t b = 0; b < standard.size(); ++b) {
            const auto it = index.find(standard[b].times_variable(v));
            if (it != index.end())
                row[b] = it->second;
        }
        action.push_back(std::move(row));
    }
    return MonomialModule(std::move(basis), std::move(vars), std::move(action));
}

BettiTable betti_monomial_quotient(const MonomialIdeal& j, const FieldConfig& field)
{
    return koszul_betti(quotient_module(j), field);
}

}  // namespace monocurve
