#include "monocurve/monomial.hpp"

#include "monocurve/arith.hpp"
#include "monocurve/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace monocurve {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents))
{
    for (int e : exponents_) {
        if (e < 0)
            throw Error(ErrorCode::InvalidInput, "negative exponent");
        degree_ += e;
    }
}

Monomial Monomial::variable(std::size_t n, std::size_t i)
{
    std::vector<int> e(n, 0);
    e.at(i) = 1;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const
{
    if (degree_ > other.degree_)
        return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i])
            return false;
    return true;
}

std::optional<std::size_t> Monomial::max_index() const
{
    for (std::size_t i = exponents_.size(); i-- > 0;)
        if (exponents_[i] > 0)
            return i;
    return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    if (other.num_vars() != num_vars())
        throw Error(ErrorCode::DimensionMismatch, "monomials in different rings");
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        out.exponents_[i] += other.exponents_[i];
    out.degree_ += other.degree_;
    return out;
}

Monomial Monomial::times_variable(std::size_t i) const
{
    Monomial out = *this;
    ++out.exponents_.at(i);
    ++out.degree_;
    return out;
}

Monomial Monomial::over_variable(std::size_t i) const
{
    Monomial out = *this;
    if (out.exponents_.at(i) == 0)
        throw Error(ErrorCode::InvalidInput, "variable does not divide monomial");
    --out.exponents_[i];
    --out.degree_;
    return out;
}

std::string Monomial::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0)
            continue;
        out << (first ? "" : "*") << 'x' << i + 1;
        if (exponents_[i] > 1)
            out << '^' << exponents_[i];
        first = false;
    }
    return first ? "1" : out.str();
}

bool lex_greater(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i];
    return false;
}

bool degrevlex_less(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.num_vars(); i-- > 0;)
        if (a[i] != b[i])
            return a[i] > b[i];
    return false;
}

namespace {

void fill_degree(std::size_t var, int left, std::vector<int>& current, std::vector<Monomial>& out)
{
    if (var + 1 == current.size()) {
        current[var] = left;
        out.emplace_back(current);
        return;
    }
    for (int e = left; e >= 0; --e) {
        current[var] = e;
        fill_degree(var + 1, left - e, current, out);
    }
    current[var] = 0;
}

bool canonical_less(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    return lex_greater(a, b);
}

long dim_of_degree(std::size_t n, long d)
{
    return static_cast<long>(binomial_u64(static_cast<long>(n) + d - 1, d));
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> current(n, 0);
    fill_degree(0, d, current, out);
    return out;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n)
{
    for (const auto& g : generators)
        if (g.num_vars() != n)
            throw Error(ErrorCode::DimensionMismatch, "generator " + g.to_string() + " not in " + std::to_string(n) + " variables");
    std::sort(generators.begin(), generators.end(), canonical_less);
    for (auto& g : generators) {
        const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                           [&](const Monomial& kept) { return kept.divides(g); });
        if (!redundant)
            generators_.push_back(std::move(g));
    }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n)
{
    return power_of_maximal(n, 1);
}

MonomialIdeal MonomialIdeal::power_of_maximal(std::size_t n, int d)
{
    return MonomialIdeal(n, monomials_of_degree(n, d));
}

bool MonomialIdeal::contains(const Monomial& u) const
{
    return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const
{
    return std::all_of(other.generators_.begin(), other.generators_.end(),
                       [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::has_finite_colength() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        const bool pure = std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) {
            return g.degree() == g[i];
        });
        if (!pure)
            return false;
    }
    return true;
}

std::vector<Monomial> MonomialIdeal::standard_monomials() const
{
    if (!has_finite_colength())
        throw Error(ErrorCode::InfiniteColength, to_string() + " has infinite colength");
    std::vector<Monomial> out;
    const Monomial one = Monomial::one(n_);
    if (contains(one))
        return out;
    // Standard monomials form an order ideal; walk it degree by degree.
    std::vector<Monomial> level{one};
    while (!level.empty()) {
        out.insert(out.end(), level.begin(), level.end());
        std::set<Monomial> next;
        for (const auto& u : level)
            for (std::size_t i = 0; i < n_; ++i) {
                Monomial v = u.times_variable(i);
                if (!contains(v))
                    next.insert(std::move(v));
            }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end(), [](const Monomial& a, const Monomial& b) { return lex_greater(a, b); });
    }
    return out;
}

bool MonomialIdeal::is_stable() const
{
    for (const auto& u : generators_) {
        const auto top = u.max_index();
        if (!top)
            continue;
        const Monomial base = u.over_variable(*top);
        for (std::size_t i = 0; i < *top; ++i)
            if (!contains(base.times_variable(i)))
                return false;
    }
    return true;
}

std::string MonomialIdeal::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out << (i ? ", " : "") << generators_[i].to_string();
    out << ')';
    return out.str();
}

long HilbertData::hs(std::size_t d) const
{
    long sum = 0;
    for (std::size_t e = 0; e <= d && e < hf.size(); ++e)
        sum += hf[e];
    return sum;
}

HilbertData hilbert_function(const MonomialIdeal& j, int d_max)
{
    HilbertData data;
    data.hf.assign(static_cast<std::size_t>(std::max(d_max, -1) + 1), 0);
    if (j.has_finite_colength()) {
        const auto standard = j.standard_monomials();
        for (const auto& u : standard)
            if (u.degree() <= d_max)
                ++data.hf[static_cast<std::size_t>(u.degree())];
        data.colength = static_cast<long>(standard.size());
        return data;
    }
    for (int d = 0; d <= d_max; ++d) {
        const auto mons = monomials_of_degree(j.num_vars(), d);
        data.hf[static_cast<std::size_t>(d)] =
            std::count_if(mons.begin(), mons.end(), [&](const Monomial& u) { return !j.contains(u); });
    }
    return data;
}

HilbertData hilbert_function(const MonomialIdeal& j)
{
    const auto standard = j.standard_monomials();
    int top = -1;
    for (const auto& u : standard)
        top = std::max(top, u.degree());
    return hilbert_function(j, top);
}

long macaulay_bound(long a, int d)
{
    if (a <= 0)
        return 0;
    long result = 0;
    for (long i = d; i >= 1 && a > 0; --i) {
        long k = i;
        while (static_cast<long>(binomial_u64(k + 1, i)) <= a)
            ++k;
        a -= static_cast<long>(binomial_u64(k, i));
        result += static_cast<long>(binomial_u64(k + 1, i + 1));
    }
    return result;
}

MonomialIdeal lex_from_hilbert(std::span<const long> hf, std::size_t n)
{
    if (hf.empty() || hf[0] != 1)
        throw Error(ErrorCode::NotMacaulay, "hf(0) must be 1");
    for (std::size_t d = 1; d < hf.size(); ++d) {
        const long dim = dim_of_degree(n, static_cast<long>(d));
        if (hf[d] < 0 || hf[d] > dim)
            throw Error(ErrorCode::NotMacaulay, "hf(" + std::to_string(d) + ") = " + std::to_string(hf[d])
                                                   + " outside [0, " + std::to_string(dim) + "]");
        if (d >= 2 && hf[d] > macaulay_bound(hf[d - 1], static_cast<int>(d - 1)))
            throw Error(ErrorCode::NotMacaulay, "hf(" + std::to_string(d) + ") = " + std::to_string(hf[d])
                                                   + " exceeds the Macaulay bound "
                                                   + std::to_string(macaulay_bound(hf[d - 1], static_cast<int>(d - 1))));
    }

    std::vector<Monomial> gens;
    for (std::size_t d = 1; d <= hf.size(); ++d) {
        const long value = d < hf.size() ? hf[d] : 0;
        const auto mons = monomials_of_degree(n, static_cast<int>(d));
        const auto keep = static_cast<std::size_t>(static_cast<long>(mons.size()) - value);
        for (std::size_t k = 0; k < keep; ++k) {
            const bool covered = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(mons[k]); });
            if (!covered)
                gens.push_back(mons[k]);
        }
    }
    return MonomialIdeal(n, std::move(gens));
}

BettiTable eliahou_kervaire_betti(const MonomialIdeal& l)
{
    if (!l.is_stable())
        throw Error(ErrorCode::NotStable, l.to_string() + " is not stable");
    BettiTable table;
    table.total.assign(std::max<std::size_t>(l.num_vars(), 1), 0);
    for (const auto& u : l.generators()) {
        const long top = static_cast<long>(u.max_index().value_or(0));
        for (long i = 0; i <= top; ++i)
            table.total[static_cast<std::size_t>(i)] += binomial_u64(top, i);
    }
    return table;
}

MonomialIdeal very_compressed(long m, std::size_t n)
{
    if (m < 1 || n < 1)
        throw Error(ErrorCode::InvalidInput, "very_compressed needs m >= 1 and n >= 1");
    const long nn = static_cast<long>(n);
    long s = 1;
    while (static_cast<long>(binomial_u64(nn + s, nn)) <= m)
        ++s;
    std::vector<long> hf;
    for (long d = 0; d < s; ++d)
        hf.push_back(dim_of_degree(n, d));
    hf.push_back(m - static_cast<long>(binomial_u64(nn + s - 1, nn)));
    return lex_from_hilbert(hf, n);
}

MonomialIdeal hyperplane_section(const MonomialIdeal& l)
{
    const std::size_t n = l.num_vars();
    if (n == 0)
        throw Error(ErrorCode::InvalidInput, "hyperplane section of an ideal in zero variables");
    std::vector<Monomial> gens;
    for (const auto& g : l.generators()) {
        if (g[n - 1] != 0)
            continue;
        gens.emplace_back(std::vector<int>(g.exponents().begin(), g.exponents().end() - 1));
    }
    return MonomialIdeal(n - 1, std::move(gens));
}

MonomialIdeal two_var_lex(int alpha, int beta, std::span<const int> betas)
{
    if (alpha < 2 || beta < alpha)
        throw Error(ErrorCode::BadProfile, "need 2 <= alpha <= beta");
    if (betas.size() != static_cast<std::size_t>(alpha - 1))
        throw Error(ErrorCode::BadProfile, "need exactly alpha - 1 betas");
    int previous = 0;
    for (int b : betas) {
        if (b < previous || b > beta - alpha)
            throw Error(ErrorCode::BadProfile, "betas must be nondecreasing within [0, beta - alpha]");
        previous = b;
    }
    std::vector<Monomial> gens{Monomial({alpha, 0}), Monomial({0, beta})};
    for (int i = 1; i < alpha; ++i)
        gens.emplace_back(std::vector<int>{alpha - i, betas[static_cast<std::size_t>(i - 1)] + i});
    return MonomialIdeal(2, std::move(gens));
}

void write_ideal(std::ostream& out, const MonomialIdeal& ideal)
{
    out << "n=" << ideal.num_vars() << '\n';
    for (const auto& g : ideal.generators()) {
        for (std::size_t i = 0; i < g.num_vars(); ++i)
            out << (i ? " " : "") << g[i];
        out << '\n';
    }
}

MonomialIdeal read_ideal(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || !line.starts_with("n=") || line.size() == 2
        || line.find_first_not_of("0123456789", 2) != std::string::npos)
        throw Error(ErrorCode::InvalidInput, "ideal file must start with a line n=<int>");
    const std::size_t n = std::stoul(line.substr(2));
    std::vector<Monomial> gens;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of("0123456789 ") != std::string::npos)
            throw Error(ErrorCode::InvalidInput, "line " + std::to_string(line_no) + ": unexpected character");
        if (line.empty() && n > 0)
            continue;
        std::istringstream fields(line);
        std::vector<int> e;
        int x;
        while (fields >> x)
            e.push_back(x);
        if (e.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "line " + std::to_string(line_no) + ": expected "
                                                          + std::to_string(n) + " exponents");
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

}  // namespace monocurve
