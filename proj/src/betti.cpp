#include "monocurve/betti.hpp"

#include <sstream>

namespace monocurve {

std::vector<std::size_t> BettiTable::trimmed() const
{
    std::vector<std::size_t> out = total;
    while (!out.empty() && out.back() == 0)
        out.pop_back();
    return out;
}

std::string BettiTable::to_string() const
{
    std::ostringstream out;
    out << '(';
    const auto t = trimmed();
    for (std::size_t i = 0; i < t.size(); ++i)
        out << (i ? ", " : "") << t[i];
    out << ")";
    return out.str();
}

BettiTable quotient_from_ideal(const BettiTable& ideal)
{
    BettiTable out;
    out.field = ideal.field;
    out.total.push_back(1);
    out.total.insert(out.total.end(), ideal.total.begin(), ideal.total.end());
    if (!ideal.graded.empty())
        out.graded.push_back({0, Degree(ideal.graded.front().degree.size(), 0), 1});
    for (const auto& g : ideal.graded)
        out.graded.push_back({g.index + 1, g.degree, g.dim});
    return out;
}

BettiTable ideal_from_quotient(const BettiTable& quotient)
{
    BettiTable out;
    out.field = quotient.field;
    if (quotient.total.size() > 1)
        out.total.assign(quotient.total.begin() + 1, quotient.total.end());
    for (const auto& g : quotient.graded)
        if (g.index > 0)
            out.graded.push_back({g.index - 1, g.degree, g.dim});
    return out;
}

}  // namespace monocurve
