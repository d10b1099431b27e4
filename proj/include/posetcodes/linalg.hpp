#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetcodes/element_set.hpp"
#include "posetcodes/gf.hpp"

namespace posetcodes {

using BigInt = boost::multiprecision::cpp_int;

/// Default cap on the number of subspaces or codewords any exhaustive
/// enumeration may visit.
inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

class VectorFq {
public:
    VectorFq(FieldPtr field, std::size_t length);
    VectorFq(FieldPtr field, std::vector<Element> coords);

    /// Canonical basis vector e_i, 1-based.
    static VectorFq unit(FieldPtr field, std::size_t length, std::size_t i);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    Element operator[](std::size_t i) const { return coords_[i]; }
    Element& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Element> coords() const noexcept { return coords_; }

    bool is_zero() const noexcept;
    /// 1-based positions of nonzero coordinates.
    ElementSet support() const;
    std::size_t hamming_weight() const noexcept;

    VectorFq operator+(const VectorFq& other) const;
    VectorFq operator-(const VectorFq& other) const;
    VectorFq scaled(Element lambda) const;

    friend bool operator==(const VectorFq& a, const VectorFq& b)
    {
        return a.field_->same_as(*b.field_) && a.coords_ == b.coords_;
    }

private:
    FieldPtr field_;
    std::vector<Element> coords_;
};

class MatrixFq {
public:
    MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols);
    /// Throws LengthMismatch for ragged rows and FieldMismatch for mixed fields.
    static MatrixFq from_rows(FieldPtr field, std::size_t cols, const std::vector<VectorFq>& rows);
    static MatrixFq from_values(FieldPtr field, const std::vector<std::vector<Element>>& rows);
    static MatrixFq identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Element> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    VectorFq row(std::size_t r) const;
    std::vector<VectorFq> row_vectors() const;
    std::vector<std::vector<Element>> values() const;

    bool is_rref() const;

    friend bool operator==(const MatrixFq& a, const MatrixFq& b)
    {
        return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

struct RrefResult {
    MatrixFq matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // 0-based pivot columns of the nonzero rows
};

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape of
/// the input is preserved.
RrefResult rref(const MatrixFq& m);

/// Subspace of F_q^n identified by its RREF basis (no zero rows). Two
/// subspaces are equal iff their bases are identical.
class Subspace {
public:
    /// Zero subspace of F_q^n.
    Subspace(FieldPtr field, std::size_t ambient_dim);

    const FieldPtr& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const MatrixFq& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Union of the supports of the basis rows, which is the support of the
    /// whole subspace.
    ElementSet support() const;

    /// Throws LengthMismatch / FieldMismatch.
    bool contains(const VectorFq& v) const;
    bool is_subspace_of(const Subspace& other) const;

    /// Coordinates of `v` with respect to the basis. Requires contains(v).
    std::vector<Element> coordinates_of(const VectorFq& v) const;

    /// sum_i coeffs[i] * basis row i.
    VectorFq combine(std::span<const Element> coeffs) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

    friend Subspace span(FieldPtr field, std::size_t length, const std::vector<VectorFq>& vectors);

private:
    explicit Subspace(RrefResult reduced);

    MatrixFq basis_;
    std::vector<std::size_t> pivots_;
};

/// Canonical subspace spanned by `vectors`. Throws FieldMismatch or
/// LengthMismatch if any vector disagrees with (field, length).
Subspace span(FieldPtr field, std::size_t length, const std::vector<VectorFq>& vectors);
Subspace span(const MatrixFq& generators);

/// Exact Gaussian binomial [n r]_q. Throws RangeError unless 0 <= r <= n, q >= 2.
BigInt gaussian_binomial(long long n, long long r, long long q);

/// Every r-dimensional subspace of `ambient`, indexed 0..count()-1.
///
/// Subspaces are parametrized by r x k RREF matrices R in coordinates of the
/// ambient basis (k = dim ambient); the subspace is rowspace(R * B). Index
/// order walks pivot-column sets lexicographically and, within one pivot set,
/// the free entries as an odometer over field representatives (last free entry
/// fastest). at(i) unranks directly, so disjoint index ranges can be handed to
/// independent workers.
class SubspaceEnumerator {
public:
    /// Throws RankError if r > dim(ambient) and BudgetExceeded(r) if the count
    /// exceeds `budget`.
    SubspaceEnumerator(const Subspace& ambient, std::size_t r,
                       std::uint64_t budget = default_enumeration_budget);

    std::uint64_t count() const noexcept { return total_; }
    std::size_t dim() const noexcept { return r_; }
    Subspace at(std::uint64_t index) const;

    /// Visits indices [begin, end) in order. The visitor returns false to stop.
    void for_each(std::uint64_t begin, std::uint64_t end,
                  const std::function<bool(std::uint64_t, const Subspace&)>& visit) const;
    void for_each(const std::function<bool(std::uint64_t, const Subspace&)>& visit) const
    {
        for_each(0, total_, visit);
    }

    std::vector<Subspace> all() const;

private:
    struct PivotBlock {
        std::vector<std::size_t> pivots;
        std::vector<std::pair<std::size_t, std::size_t>> free_cells;  // (row, col)
        std::uint64_t first_index;
        std::uint64_t count;
    };

    Subspace build(const PivotBlock& block, const std::vector<Element>& free_values) const;

    Subspace ambient_;
    std::size_t r_;
    std::vector<PivotBlock> blocks_;
    std::uint64_t total_ = 0;
};

/// Calls `visit` on each of the q^dim - 1 nonzero vectors of `s`, ordered by
/// the odometer over coefficient vectors (last coefficient fastest). Throws
/// BudgetExceeded when q^dim - 1 exceeds `budget`. The visitor returns false to
/// stop early.
void for_each_nonzero_codeword(const Subspace& s, const std::function<bool(const VectorFq&)>& visit,
                               std::uint64_t budget = default_enumeration_budget);

std::vector<VectorFq> nonzero_codewords(const Subspace& s,
                                        std::uint64_t budget = default_enumeration_budget);

} // namespace posetcodes

template <>
struct std::hash<posetcodes::Subspace> {
    std::size_t operator()(const posetcodes::Subspace& s) const noexcept;
};
