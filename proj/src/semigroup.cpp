#include "monocurve/semigroup.hpp"

#include "monocurve/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace monocurve {

namespace {

std::vector<long> minimal_subset(std::vector<long> sorted)
{
    // An input is redundant iff it is a sum of strictly smaller kept inputs.
    const long top = sorted.back();
    std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
    reach[0] = 1;
    std::vector<long> kept;
    auto next = sorted.begin();
    for (long n = 1; n <= top; ++n) {
        for (long g : kept) {
            if (g > n)
                break;
            if (reach[static_cast<std::size_t>(n - g)]) {
                reach[static_cast<std::size_t>(n)] = 1;
                break;
            }
        }
        if (next != sorted.end() && *next == n) {
            if (!reach[static_cast<std::size_t>(n)]) {
                kept.push_back(n);
                reach[static_cast<std::size_t>(n)] = 1;
            }
            ++next;
        }
    }
    return kept;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const long> raw)
{
    if (raw.empty())
        throw Error(ErrorCode::EmptyInput, "no generators given");
    for (long g : raw)
        if (g < 1)
            throw Error(ErrorCode::InvalidInput, "generator " + std::to_string(g) + " is not positive");

    std::vector<long> sorted(raw.begin(), raw.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    long g = 0;
    for (long x : sorted)
        g = std::gcd(g, x);
    if (g != 1)
        throw Error(ErrorCode::NonCofinite, "generators have gcd " + std::to_string(g));

    NumericalSemigroup s;
    s.generators_ = minimal_subset(std::move(sorted));

    const long m = s.multiplicity();
    const long top = s.generators_.back();
    std::vector<char> member{1};
    long run = 1;
    long n = 0;
    // Grow until m consecutive members appear; the run start is the conductor.
    while (run < m) {
        ++n;
        char in = 0;
        for (long gen : s.generators_) {
            if (gen > n)
                break;
            if (member[static_cast<std::size_t>(n - gen)]) {
                in = 1;
                break;
            }
        }
        member.push_back(in);
        run = in ? run + 1 : 0;
    }
    s.conductor_ = n - run + 1;
    member.resize(static_cast<std::size_t>(s.conductor_ + top) + 1, 1);
    s.member_ = std::move(member);
    return s;
}

std::string NumericalSemigroup::to_string() const
{
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < generators_.size(); ++i)
        out << (i ? "," : "") << generators_[i];
    out << '>';
    return out.str();
}

int AperyData::max_order() const
{
    int best = 0;
    for (const auto& e : elements)
        best = std::max(best, e.order);
    return best;
}

long AperyData::max_element() const
{
    long best = 0;
    for (const auto& e : elements)
        best = std::max(best, e.value);
    return best;
}

long AperyData::count_of_order(int d) const
{
    return std::count_if(elements.begin(), elements.end(), [d](const AperyElement& e) { return e.order == d; });
}

AperyData apery_set(const NumericalSemigroup& s)
{
    const long m = s.multiplicity();
    AperyData data;
    data.elements.resize(static_cast<std::size_t>(m));
    std::vector<char> found(static_cast<std::size_t>(m), 0);
    long remaining = m;
    long top = 0;
    for (long n = 0; remaining > 0; ++n) {
        if (!s.contains(n) || found[static_cast<std::size_t>(n % m)])
            continue;
        found[static_cast<std::size_t>(n % m)] = 1;
        data.elements[static_cast<std::size_t>(n % m)] = {n % m, n, 0};
        top = n;
        --remaining;
    }

    // ord(n) = 1 + max ord(n - g) over generators g with n - g in the semigroup.
    std::vector<int> ord(static_cast<std::size_t>(top) + 1, -1);
    ord[0] = 0;
    for (long n = 1; n <= top; ++n) {
        if (!s.contains(n))
            continue;
        int best = -1;
        for (long g : s.generators()) {
            if (g > n)
                break;
            best = std::max(best, ord[static_cast<std::size_t>(n - g)]);
        }
        ord[static_cast<std::size_t>(n)] = best + 1;
    }
    for (auto& e : data.elements)
        e.order = ord[static_cast<std::size_t>(e.value)];
    return data;
}

long hilbert_samuel_gr(const AperyData& apery, int d)
{
    return std::count_if(apery.elements.begin(), apery.elements.end(),
                         [d](const AperyElement& e) { return e.order <= d; });
}

long hilbert_samuel_gr(const NumericalSemigroup& s, int d)
{
    return hilbert_samuel_gr(apery_set(s), d);
}

NumericalSemigroup interval_completion(const NumericalSemigroup& s)
{
    if (s.width() == 0)
        throw Error(ErrorCode::ZeroWidth, "interval completion of " + s.to_string());
    std::vector<long> gens(static_cast<std::size_t>(s.width()) + 1);
    std::iota(gens.begin(), gens.end(), s.multiplicity());
    return NumericalSemigroup::from_generators(gens);
}

bool in_interval_range(const NumericalSemigroup& s)
{
    return s.width() <= s.multiplicity() - 2;
}

NumericalSemigroup shift(const NumericalSemigroup& s, long j)
{
    if (j < 0)
        throw Error(ErrorCode::InvalidInput, "negative shift " + std::to_string(j));
    std::vector<long> gens = s.generators();
    for (long& g : gens)
        g += j;
    return NumericalSemigroup::from_generators(gens);
}

void for_each_by_width(long w, long m_min, long m_max,
                       const std::function<void(const NumericalSemigroup&)>& visit)
{
    if (w < 1)
        return;
    const unsigned inner = static_cast<unsigned>(w - 1);
    for (long m = std::max(m_min, 2L); m <= m_max; ++m) {
        std::set<std::vector<long>> seen;
        std::vector<NumericalSemigroup> batch;
        for (unsigned long mask = 0; mask < (1UL << inner); ++mask) {
            std::vector<long> gens{m};
            long g = 0;
            for (unsigned b = 0; b < inner; ++b)
                if (mask >> b & 1UL)
                    gens.push_back(m + 1 + static_cast<long>(b));
            gens.push_back(m + w);
            for (long x : gens)
                g = std::gcd(g, x);
            if (g != 1)
                continue;
            auto s = NumericalSemigroup::from_generators(gens);
            if (s.generators().back() != m + w || s.multiplicity() != m)
                continue;
            if (seen.insert(s.generators()).second)
                batch.push_back(std::move(s));
        }
        std::sort(batch.begin(), batch.end(), [](const auto& a, const auto& b) {
            return a.generators() < b.generators();
        });
        for (const auto& s : batch)
            visit(s);
    }
}

std::vector<NumericalSemigroup> enumerate_by_width(long w, long m_min, long m_max)
{
    std::vector<NumericalSemigroup> out;
    for_each_by_width(w, m_min, m_max, [&](const NumericalSemigroup& s) { out.push_back(s); });
    return out;
}

}  // namespace monocurve
