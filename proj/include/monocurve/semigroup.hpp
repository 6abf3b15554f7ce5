#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace monocurve {

/// A numerical semigroup, stored through its unique minimal generating set
/// g_0 < g_1 < ... < g_nu together with a membership table.
///
/// The table covers 0 .. conductor + g_nu so that order recursions and Apery
/// scans never leave it. Instances are immutable once built.
class NumericalSemigroup {
public:
    /// Generators are reduced to the minimal set. Throws EmptyInput,
    /// InvalidInput (entries < 1) or NonCofinite (gcd != 1).
    static NumericalSemigroup from_generators(std::span<const long> raw);
    static NumericalSemigroup from_generators(std::initializer_list<long> raw)
    {
        return from_generators(std::span<const long>(raw.begin(), raw.size()));
    }

    const std::vector<long>& generators() const { return generators_; }
    long multiplicity() const { return generators_.front(); }
    long width() const { return generators_.back() - generators_.front(); }
    /// nu, the number of minimal generators minus one.
    std::size_t nu() const { return generators_.size() - 1; }
    long conductor() const { return conductor_; }
    long frobenius() const { return conductor_ - 1; }
    long horizon() const { return static_cast<long>(member_.size()) - 1; }

    bool contains(long n) const
    {
        if (n < 0)
            return false;
        if (n >= conductor_)
            return true;
        return member_[static_cast<std::size_t>(n)] != 0;
    }

    std::string to_string() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b)
    {
        return a.generators_ == b.generators_;
    }

private:
    NumericalSemigroup() = default;

    std::vector<long> generators_;
    long conductor_ = 0;
    std::vector<char> member_;
};

struct AperyElement {
    long residue;
    long value;
    int order;
};

/// The Apery set with respect to the multiplicity, one element per residue
/// class, ordered by residue. `elements[0]` is always {0, 0, 0}.
struct AperyData {
    std::vector<AperyElement> elements;

    std::size_t size() const { return elements.size(); }
    int max_order() const;
    long max_element() const;
    /// Number of Apery elements of order exactly d.
    long count_of_order(int d) const;
};

/// Apery elements and their orders; the order of gamma is the largest number
/// of minimal generators (with repetition) summing to gamma.
AperyData apery_set(const NumericalSemigroup& s);

/// HS(gr(R_bar), d): the number of Apery elements of order <= d.
long hilbert_samuel_gr(const AperyData& apery, int d);
long hilbert_samuel_gr(const NumericalSemigroup& s, int d);

/// The semigroup generated by {m, m+1, ..., m+w}. Throws ZeroWidth for N.
NumericalSemigroup interval_completion(const NumericalSemigroup& s);

/// True when w <= m - 2, the range where {m, ..., m+w} is itself minimal
/// and the interval completion keeps multiplicity and width.
bool in_interval_range(const NumericalSemigroup& s);

/// The semigroup generated by {g_i + j}. Throws NonCofinite.
NumericalSemigroup shift(const NumericalSemigroup& s, long j);

/// Every semigroup with multiplicity m in [m_min, m_max] and minimal
/// generators inside {m, ..., m+w} whose largest minimal generator is m+w.
/// Emitted in (m, generators) lexicographic order, without duplicates.
void for_each_by_width(long w, long m_min, long m_max,
                       const std::function<void(const NumericalSemigroup&)>& visit);
std::vector<NumericalSemigroup> enumerate_by_width(long w, long m_min, long m_max);

}  // namespace monocurve
