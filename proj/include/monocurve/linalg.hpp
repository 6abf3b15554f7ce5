#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monocurve {

/// The coefficient field: the rationals, or GF(p) for a prime p < 2^31.
class FieldConfig {
public:
    enum class Kind { Rationals, PrimeField };

    static constexpr std::uint32_t kDefaultPrime = 32003;

    static FieldConfig rationals() { return FieldConfig(Kind::Rationals, 0); }
    /// Throws InvalidInput unless p is a prime below 2^31.
    static FieldConfig prime_field(std::uint32_t p);
    /// Parses "q" or "gf:<p>".
    static FieldConfig parse(std::string_view tag);

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    std::string tag() const;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    FieldConfig(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Integer matrix in coordinate form, read over whichever field the caller
/// chooses. Duplicate coordinates are summed and zeros dropped on
/// construction; the matrix is immutable afterwards.
class SparseMatrix {
public:
    struct Entry {
        std::size_t row;
        std::size_t col;
        long value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries = {});

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    /// Row-major sorted, no duplicates, no zeros.
    const std::vector<Entry>& entries() const { return entries_; }

    SparseMatrix transpose() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

/// Exact rank. Over Q the elimination is fraction-free and falls back to
/// arbitrary precision integers on overflow; blocks below 64x64 use a dense
/// kernel.
std::size_t rank(const SparseMatrix& m, const FieldConfig& field);

/// Maintains a reduced basis of the span of the vectors added so far. The
/// insertion order is the caller's; `add_vector` reports independence.
/// Not thread-safe; use one instance per strand.
class IncrementalSpan {
public:
    IncrementalSpan(std::size_t dimension, const FieldConfig& field);
    ~IncrementalSpan();
    IncrementalSpan(IncrementalSpan&&) noexcept;
    IncrementalSpan& operator=(IncrementalSpan&&) noexcept;

    /// True iff v is independent of the vectors added before. Throws
    /// DimensionMismatch when v has the wrong length.
    bool add_vector(std::span<const long> v);

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return rank_; }

private:
    struct Impl;
    std::size_t dimension_;
    std::size_t rank_ = 0;
    std::unique_ptr<Impl> impl_;
};

}  // namespace monocurve
