#include "monocurve/linalg.hpp"

#include "monocurve/arith.hpp"
#include "monocurve/error.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <variant>

namespace monocurve {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FieldConfig FieldConfig::prime_field(std::uint32_t p)
{
    if (p >= (1U << 31) || !is_prime(p))
        throw Error(ErrorCode::InvalidInput, std::to_string(p) + " is not a prime below 2^31");
    return FieldConfig(Kind::PrimeField, p);
}

FieldConfig FieldConfig::parse(std::string_view tag)
{
    if (tag == "q" || tag == "Q")
        return rationals();
    if (tag.starts_with("gf:")) {
        std::string digits(tag.substr(3));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })
            && digits.size() <= 10) {
            const auto p = std::stoull(digits);
            if (p < (1ULL << 31))
                return prime_field(static_cast<std::uint32_t>(p));
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown field '" + std::string(tag) + "' (expected q or gf:<prime>)");
}

std::string FieldConfig::tag() const
{
    return kind_ == Kind::Rationals ? "q" : "gf:" + std::to_string(p_);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols)
{
    for (const auto& e : entries)
        if (e.row >= rows || e.col >= cols)
            throw Error(ErrorCode::DimensionMismatch, "matrix entry outside its shape");
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    for (const auto& e : entries) {
        if (!entries_.empty() && entries_.back().row == e.row && entries_.back().col == e.col)
            entries_.back().value += e.value;
        else
            entries_.push_back(e);
        if (entries_.back().value == 0)
            entries_.pop_back();
    }
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<Entry> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_)
        t.push_back({e.col, e.row, e.value});
    return SparseMatrix(cols_, rows_, std::move(t));
}

namespace {

struct Overflow {};

struct Int64Ops {
    using Scalar = long;
    static constexpr bool is_field = false;

    Scalar from_long(long v) const { return v; }
    static bool is_zero(Scalar v) { return v == 0; }
    static Scalar checked(Scalar v)
    {
        if (v == LONG_MIN)
            throw Overflow{};
        return v;
    }
    Scalar mul(Scalar a, Scalar b) const
    {
        Scalar r;
        if (__builtin_mul_overflow(a, b, &r))
            throw Overflow{};
        return checked(r);
    }
    Scalar sub(Scalar a, Scalar b) const
    {
        Scalar r;
        if (__builtin_sub_overflow(a, b, &r))
            throw Overflow{};
        return checked(r);
    }
    Scalar div_exact(Scalar a, Scalar b) const { return a / b; }
    Scalar gcd(Scalar a, Scalar b) const { return std::gcd(a, b); }
    static bool is_negative(Scalar a) { return a < 0; }
};

struct BigOps {
    using Scalar = BigInt;
    static constexpr bool is_field = false;

    Scalar from_long(long v) const { return v; }
    static Scalar from(long v) { return v; }
    static bool is_zero(const Scalar& v) { return v.is_zero(); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar div_exact(const Scalar& a, const Scalar& b) const { return a / b; }
    Scalar gcd(const Scalar& a, const Scalar& b) const { return boost::multiprecision::gcd(a, b); }
    static bool is_negative(const Scalar& a) { return a.sign() < 0; }
};

struct ModPOps {
    using Scalar = std::uint32_t;
    static constexpr bool is_field = true;
    std::uint32_t p;

    Scalar from_long(long v) const
    {
        long r = v % static_cast<long>(p);
        return static_cast<Scalar>(r < 0 ? r + static_cast<long>(p) : r);
    }
    static bool is_zero(Scalar v) { return v == 0; }
    Scalar mul(Scalar a, Scalar b) const { return static_cast<Scalar>(std::uint64_t{a} * b % p); }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p - b; }
    Scalar inv(Scalar a) const
    {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<Scalar>(result);
    }
};

template <class Ops>
using Row = std::vector<std::pair<std::size_t, typename Ops::Scalar>>;

/// Echelon basis indexed by leading column.
template <class Ops>
class Reducer {
public:
    using Scalar = typename Ops::Scalar;

    Reducer(std::size_t dimension, Ops ops) : ops_(ops), pivots_(dimension) {}

    bool insert(Row<Ops> v)
    {
        while (!v.empty()) {
            auto& pivot = pivots_[v.front().first];
            if (pivot.empty()) {
                normalize(v);
                pivot = std::move(v);
                ++rank_;
                return true;
            }
            v = eliminate(v, pivot);
        }
        return false;
    }

    std::size_t rank() const { return rank_; }
    const Ops& ops() const { return ops_; }
    const std::vector<Row<Ops>>& pivots() const { return pivots_; }

private:
    void normalize(Row<Ops>& v) const
    {
        if constexpr (Ops::is_field) {
            const Scalar s = ops_.inv(v.front().second);
            for (auto& [c, x] : v)
                x = ops_.mul(x, s);
        }
        else {
            Scalar g = 0;
            for (const auto& [c, x] : v)
                g = ops_.gcd(g, x);
            if (Ops::is_negative(v.front().second))
                g = ops_.sub(Scalar(0), g);
            for (auto& [c, x] : v)
                x = ops_.div_exact(x, g);
        }
    }

    Row<Ops> eliminate(const Row<Ops>& v, const Row<Ops>& pivot) const
    {
        // Field: v - b * pivot (pivot lead is 1). Ring: a * v - b * pivot
        // with a, b the leads divided by their gcd.
        Scalar a{1};
        Scalar b = v.front().second;
        if constexpr (!Ops::is_field) {
            a = pivot.front().second;
            const Scalar g = ops_.gcd(a, b);
            a = ops_.div_exact(a, g);
            b = ops_.div_exact(b, g);
        }
        Row<Ops> out;
        out.reserve(v.size() + pivot.size());
        auto i = v.begin();
        auto j = pivot.begin();
        while (i != v.end() || j != pivot.end()) {
            Scalar x;
            std::size_t col;
            if (j == pivot.end() || (i != v.end() && i->first < j->first)) {
                col = i->first;
                x = (a == Scalar(1)) ? i->second : ops_.mul(a, i->second);
                ++i;
            }
            else if (i == v.end() || j->first < i->first) {
                col = j->first;
                x = ops_.sub(Scalar(0), ops_.mul(b, j->second));
                ++j;
            }
            else {
                col = i->first;
                const Scalar left = (a == Scalar(1)) ? i->second : ops_.mul(a, i->second);
                x = ops_.sub(left, ops_.mul(b, j->second));
                ++i;
                ++j;
            }
            if (!Ops::is_zero(x))
                out.emplace_back(col, std::move(x));
        }
        if constexpr (!Ops::is_field) {
            if (!out.empty())
                normalize(out);
        }
        return out;
    }

    Ops ops_;
    std::vector<Row<Ops>> pivots_;
    std::size_t rank_ = 0;
};

template <class Ops>
std::size_t dense_rank(const SparseMatrix& m, const Ops& ops)
{
    using Scalar = typename Ops::Scalar;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Scalar> a(rows * cols, Scalar(0));
    for (const auto& e : m.entries())
        a[e.row * cols + e.col] = ops.from_long(e.value);
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return a[r * cols + c]; };

    std::size_t r = 0;
    Scalar prev{1};
    for (std::size_t k = 0; k < cols && r < rows; ++k) {
        std::size_t piv = r;
        while (piv < rows && Ops::is_zero(at(piv, k)))
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t c = k; c < cols; ++c)
                std::swap(at(piv, c), at(r, c));
        if constexpr (Ops::is_field) {
            const Scalar inv = ops.inv(at(r, k));
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (Ops::is_zero(at(i, k)))
                    continue;
                const Scalar f = ops.mul(at(i, k), inv);
                for (std::size_t c = k; c < cols; ++c)
                    at(i, c) = ops.sub(at(i, c), ops.mul(f, at(r, c)));
            }
        }
        else {
            // Bareiss step; the division by the previous pivot is exact.
            const Scalar p = at(r, k);
            for (std::size_t i = r + 1; i < rows; ++i) {
                const Scalar lead = at(i, k);
                for (std::size_t c = k + 1; c < cols; ++c)
                    at(i, c) = ops.div_exact(ops.sub(ops.mul(p, at(i, c)), ops.mul(lead, at(r, c))), prev);
                at(i, k) = Scalar(0);
            }
            prev = p;
        }
        ++r;
    }
    return r;
}

template <class Ops>
std::size_t sparse_rank(const SparseMatrix& m, const Ops& ops)
{
    std::vector<Row<Ops>> rows(m.rows());
    for (const auto& e : m.entries()) {
        // entries divisible by p vanish
        auto x = ops.from_long(e.value);
        if (!Ops::is_zero(x))
            rows[e.row].emplace_back(e.col, std::move(x));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    Reducer<Ops> reducer(m.cols(), ops);
    for (auto& row : rows)
        if (!row.empty())
            reducer.insert(std::move(row));
    return reducer.rank();
}

constexpr std::size_t kDenseLimit = 64;

template <class Ops>
std::size_t rank_with(const SparseMatrix& m, const Ops& ops)
{
    if (m.rows() <= kDenseLimit && m.cols() <= kDenseLimit)
        return dense_rank(m, ops);
    return sparse_rank(m, ops);
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const FieldConfig& field)
{
    if (m.entries().empty())
        return 0;
    if (field.kind() == FieldConfig::Kind::PrimeField)
        return rank_with(m, ModPOps{field.characteristic()});
    try {
        return rank_with(m, Int64Ops{});
    }
    catch (const Overflow&) {
        return rank_with(m, BigOps{});
    }
}

struct IncrementalSpan::Impl {
    std::variant<Reducer<ModPOps>, Reducer<Int64Ops>, Reducer<BigOps>> reducer;
};

IncrementalSpan::IncrementalSpan(std::size_t dimension, const FieldConfig& field)
    : dimension_(dimension)
{
    if (field.kind() == FieldConfig::Kind::PrimeField)
        impl_ = std::make_unique<Impl>(Impl{Reducer<ModPOps>(dimension, ModPOps{field.characteristic()})});
    else
        impl_ = std::make_unique<Impl>(Impl{Reducer<Int64Ops>(dimension, Int64Ops{})});
}

IncrementalSpan::~IncrementalSpan() = default;
IncrementalSpan::IncrementalSpan(IncrementalSpan&&) noexcept = default;
IncrementalSpan& IncrementalSpan::operator=(IncrementalSpan&&) noexcept = default;

bool IncrementalSpan::add_vector(std::span<const long> v)
{
    if (v.size() != dimension_)
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(dimension_));
    auto try_insert = [&](auto& reducer) {
        using Ops = std::decay_t<decltype(reducer.ops())>;
        Row<Ops> row;
        for (std::size_t c = 0; c < v.size(); ++c) {
            auto x = reducer.ops().from_long(v[c]);
            if (!Ops::is_zero(x))
                row.emplace_back(c, std::move(x));
        }
        return reducer.insert(std::move(row));
    };

    bool added = false;
    if (auto* mod = std::get_if<Reducer<ModPOps>>(&impl_->reducer)) {
        added = try_insert(*mod);
    }
    else if (auto* small = std::get_if<Reducer<Int64Ops>>(&impl_->reducer)) {
        try {
            added = try_insert(*small);
        }
        catch (const Overflow&) {
            Reducer<BigOps> big(dimension_, BigOps{});
            for (const auto& pivot : small->pivots()) {
                if (pivot.empty())
                    continue;
                Row<BigOps> promoted;
                for (const auto& [c, x] : pivot)
                    promoted.emplace_back(c, BigInt(x));
                big.insert(std::move(promoted));
            }
            impl_->reducer = std::move(big);
            added = try_insert(std::get<Reducer<BigOps>>(impl_->reducer));
        }
    }
    else {
        added = try_insert(std::get<Reducer<BigOps>>(impl_->reducer));
    }
    if (added)
        ++rank_;
    return added;
}

}  // namespace monocurve
