#include "posetcodes/linalg.hpp"

#include <algorithm>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

// ---------------------------------------------------------------- VectorFq

VectorFq::VectorFq(FieldPtr field, std::size_t length) : field_(std::move(field)), coords_(length, 0) {}

VectorFq::VectorFq(FieldPtr field, std::vector<Element> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    for (Element c : coords_)
        if (c >= field_->order())
            throw RangeError("coordinate " + std::to_string(c) + " is not an element of GF(" +
                             std::to_string(field_->order()) + ")");
}

VectorFq VectorFq::unit(FieldPtr field, std::size_t length, std::size_t i)
{
    if (i < 1 || i > length)
        throw RangeError("unit vector index " + std::to_string(i) + " outside {1,...," + std::to_string(length) + "}");
    VectorFq v(std::move(field), length);
    v.coords_[i - 1] = 1;
    return v;
}

bool VectorFq::is_zero() const noexcept
{
    return std::all_of(coords_.begin(), coords_.end(), [](Element c) { return c == 0; });
}

ElementSet VectorFq::support() const
{
    ElementSet s(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0)
            s.insert(static_cast<int>(i + 1));
    return s;
}

std::size_t VectorFq::hamming_weight() const noexcept
{
    return static_cast<std::size_t>(std::count_if(coords_.begin(), coords_.end(), [](Element c) { return c != 0; }));
}

VectorFq VectorFq::operator+(const VectorFq& other) const
{
    require_same_field(*field_, *other.field_);
    if (size() != other.size())
        throw LengthMismatch("vector lengths " + std::to_string(size()) + " and " + std::to_string(other.size()));
    VectorFq out(field_, size());
    for (std::size_t i = 0; i < size(); ++i)
        out.coords_[i] = field_->add(coords_[i], other.coords_[i]);
    return out;
}

VectorFq VectorFq::operator-(const VectorFq& other) const
{
    return *this + other.scaled(field_->neg(1));
}

VectorFq VectorFq::scaled(Element lambda) const
{
    VectorFq out(field_, size());
    for (std::size_t i = 0; i < size(); ++i)
        out.coords_[i] = field_->mul(lambda, coords_[i]);
    return out;
}

// ---------------------------------------------------------------- MatrixFq

MatrixFq::MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

MatrixFq MatrixFq::from_rows(FieldPtr field, std::size_t cols, const std::vector<VectorFq>& rows)
{
    MatrixFq m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_field(*field, *rows[r].field());
        if (rows[r].size() != cols)
            throw LengthMismatch("row " + std::to_string(r + 1) + " has length " + std::to_string(rows[r].size()) +
                                 ", expected " + std::to_string(cols));
        std::copy(rows[r].coords().begin(), rows[r].coords().end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

MatrixFq MatrixFq::from_values(FieldPtr field, const std::vector<std::vector<Element>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<VectorFq> vecs;
    vecs.reserve(rows.size());
    for (const auto& r : rows)
        vecs.emplace_back(field, r);
    return from_rows(std::move(field), cols, vecs);
}

MatrixFq MatrixFq::identity(FieldPtr field, std::size_t n)
{
    MatrixFq m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

VectorFq MatrixFq::row(std::size_t r) const
{
    auto s = row_span(r);
    return VectorFq(field_, std::vector<Element>(s.begin(), s.end()));
}

std::vector<VectorFq> MatrixFq::row_vectors() const
{
    std::vector<VectorFq> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

std::vector<std::vector<Element>> MatrixFq::values() const
{
    std::vector<std::vector<Element>> out;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto s = row_span(r);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

bool MatrixFq::is_rref() const
{
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    bool first = true;
    for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t lead = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead == cols_) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || (*this)(r, lead) != 1 || (!first && lead <= last_pivot))
            return false;
        for (std::size_t other = 0; other < rows_; ++other)
            if (other != r && (*this)(other, lead) != 0)
                return false;
        last_pivot = lead;
        first = false;
    }
    return true;
}

// ---------------------------------------------------------------- rref

RrefResult rref(const MatrixFq& input)
{
    MatrixFq m = input;
    const Field& f = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && m(pick, col) == 0)
            ++pick;
        if (pick == m.rows())
            continue;
        if (pick != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(pick, c), m(row, c));
        const Element scale = f.inv(m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = f.mul(scale, m(row, c));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            const Element factor = f.neg(m(r, col));
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = f.add(m(r, c), f.mul(factor, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), row, std::move(pivots)};
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(FieldPtr field, std::size_t ambient_dim) : basis_(std::move(field), 0, ambient_dim) {}

Subspace::Subspace(RrefResult reduced) : basis_(reduced.matrix.field(), reduced.rank, reduced.matrix.cols()),
                                         pivots_(std::move(reduced.pivots))
{
    for (std::size_t r = 0; r < reduced.rank; ++r)
        for (std::size_t c = 0; c < basis_.cols(); ++c)
            basis_(r, c) = reduced.matrix(r, c);
}

ElementSet Subspace::support() const
{
    ElementSet s(ambient_dim());
    for (std::size_t r = 0; r < dim(); ++r)
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            if (basis_(r, c) != 0)
                s.insert(static_cast<int>(c + 1));
    return s;
}

std::vector<Element> Subspace::coordinates_of(const VectorFq& v) const
{
    std::vector<Element> coeffs(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        coeffs[r] = v[pivots_[r]];
    return coeffs;
}

VectorFq Subspace::combine(std::span<const Element> coeffs) const
{
    const Field& f = *field();
    VectorFq out(field(), ambient_dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        if (coeffs[r] == 0)
            continue;
        for (std::size_t c = 0; c < ambient_dim(); ++c)
            out[c] = f.add(out[c], f.mul(coeffs[r], basis_(r, c)));
    }
    return out;
}

bool Subspace::contains(const VectorFq& v) const
{
    require_same_field(*field(), *v.field());
    if (v.size() != ambient_dim())
        throw LengthMismatch("vector of length " + std::to_string(v.size()) + " vs ambient dimension " +
                             std::to_string(ambient_dim()));
    // With an RREF basis, v lies in the span iff it equals the combination
    // read off at the pivot columns.
    const auto coeffs = coordinates_of(v);
    return combine(coeffs) == v;
}

bool Subspace::is_subspace_of(const Subspace& other) const
{
    require_same_field(*field(), *other.field());
    if (ambient_dim() != other.ambient_dim())
        throw LengthMismatch("subspaces of F_q^" + std::to_string(ambient_dim()) + " and F_q^" +
                             std::to_string(other.ambient_dim()));
    if (dim() > other.dim())
        return false;
    for (std::size_t r = 0; r < dim(); ++r)
        if (!other.contains(basis_.row(r)))
            return false;
    return true;
}

Subspace span(FieldPtr field, std::size_t length, const std::vector<VectorFq>& vectors)
{
    return Subspace(rref(MatrixFq::from_rows(std::move(field), length, vectors)));
}

Subspace span(const MatrixFq& generators)
{
    return span(generators.field(), generators.cols(), generators.row_vectors());
}

// ---------------------------------------------------------------- counting

BigInt gaussian_binomial(long long n, long long r, long long q)
{
    if (r < 0 || r > n || q < 2)
        throw RangeError("gaussian_binomial(" + std::to_string(n) + ", " + std::to_string(r) + ", " +
                         std::to_string(q) + ") out of range");
    // Each prefix of prod_{i<t} (q^{n-i} - 1) / (q^{i+1} - 1) is itself [n t]_q,
    // so every division is exact.
    BigInt result = 1;
    for (long long i = 0; i < r; ++i) {
        BigInt num = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - i)) - 1;
        BigInt den = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1)) - 1;
        result = result * num / den;
    }
    return result;
}

// ---------------------------------------------------------------- enumeration

SubspaceEnumerator::SubspaceEnumerator(const Subspace& ambient, std::size_t r, std::uint64_t budget)
    : ambient_(ambient), r_(r)
{
    const std::size_t k = ambient.dim();
    if (r > k)
        throw RankError("cannot enumerate " + std::to_string(r) + "-dimensional subspaces of a " +
                        std::to_string(k) + "-dimensional space");
    const BigInt expected = gaussian_binomial(static_cast<long long>(k), static_cast<long long>(r),
                                              ambient.field()->order());
    if (expected > budget)
        throw BudgetExceeded(expected.str() + " subspaces of dimension " + std::to_string(r) +
                                 " exceed the enumeration budget of " + std::to_string(budget),
                             static_cast<int>(r));

    const std::uint64_t q = ambient.field()->order();
    std::vector<std::size_t> pivots(r);
    for (std::size_t i = 0; i < r; ++i)
        pivots[i] = i;
    while (true) {
        PivotBlock block;
        block.pivots = pivots;
        for (std::size_t row = 0; row < r; ++row)
            for (std::size_t col = pivots[row] + 1; col < k; ++col)
                if (!std::binary_search(pivots.begin(), pivots.end(), col))
                    block.free_cells.emplace_back(row, col);
        block.first_index = total_;
        block.count = 1;
        for (std::size_t t = 0; t < block.free_cells.size(); ++t)
            block.count *= q;
        total_ += block.count;
        blocks_.push_back(std::move(block));

        // Next combination in lexicographic order.
        std::size_t i = r;
        while (i > 0 && pivots[i - 1] == k - r + (i - 1))
            --i;
        if (i == 0)
            break;
        ++pivots[i - 1];
        for (std::size_t j = i; j < r; ++j)
            pivots[j] = pivots[j - 1] + 1;
    }
}

Subspace SubspaceEnumerator::build(const PivotBlock& block, const std::vector<Element>& free_values) const
{
    const Field& f = *ambient_.field();
    const std::size_t k = ambient_.dim();
    const std::size_t n = ambient_.ambient_dim();
    const MatrixFq& basis = ambient_.basis();

    MatrixFq coeffs(ambient_.field(), r_, k);
    for (std::size_t row = 0; row < r_; ++row)
        coeffs(row, block.pivots[row]) = 1;
    for (std::size_t t = 0; t < block.free_cells.size(); ++t)
        coeffs(block.free_cells[t].first, block.free_cells[t].second) = free_values[t];

    MatrixFq product(ambient_.field(), r_, n);
    for (std::size_t row = 0; row < r_; ++row)
        for (std::size_t c = 0; c < k; ++c) {
            const Element a = coeffs(row, c);
            if (a == 0)
                continue;
            for (std::size_t col = 0; col < n; ++col)
                product(row, col) = f.add(product(row, col), f.mul(a, basis(c, col)));
        }
    return span(product);
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const
{
    if (index >= total_)
        throw RangeError("subspace index " + std::to_string(index) + " >= " + std::to_string(total_));
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                               [](std::uint64_t i, const PivotBlock& b) { return i < b.first_index; });
    const PivotBlock& block = *std::prev(it);
    const std::uint64_t q = ambient_.field()->order();
    std::uint64_t local = index - block.first_index;
    std::vector<Element> free_values(block.free_cells.size());
    for (std::size_t t = free_values.size(); t-- > 0;) {
        free_values[t] = static_cast<Element>(local % q);
        local /= q;
    }
    return build(block, free_values);
}

void SubspaceEnumerator::for_each(std::uint64_t begin, std::uint64_t end,
                                  const std::function<bool(std::uint64_t, const Subspace&)>& visit) const
{
    end = std::min(end, total_);
    for (std::uint64_t i = begin; i < end; ++i)
        if (!visit(i, at(i)))
            return;
}

std::vector<Subspace> SubspaceEnumerator::all() const
{
    std::vector<Subspace> out;
    out.reserve(total_);
    for_each([&](std::uint64_t, const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

void for_each_nonzero_codeword(const Subspace& s, const std::function<bool(const VectorFq&)>& visit,
                               std::uint64_t budget)
{
    const std::uint64_t q = s.field()->order();
    const BigInt total = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(s.dim())) - 1;
    if (total > budget)
        throw BudgetExceeded(total.str() + " codewords exceed the enumeration budget of " + std::to_string(budget));

    std::vector<Element> coeffs(s.dim(), 0);
    while (true) {
        std::size_t pos = coeffs.size();
        while (pos > 0) {
            --pos;
            if (++coeffs[pos] < q)
                break;
            coeffs[pos] = 0;
            if (pos == 0) {
                pos = coeffs.size();
                break;
            }
        }
        if (pos == coeffs.size())
            return;
        if (!visit(s.combine(coeffs)))
            return;
    }
}

std::vector<VectorFq> nonzero_codewords(const Subspace& s, std::uint64_t budget)
{
    std::vector<VectorFq> out;
    for_each_nonzero_codeword(s, [&](const VectorFq& v) {
        out.push_back(v);
        return true;
    }, budget);
    return out;
}

} // namespace posetcodes

std::size_t std::hash<posetcodes::Subspace>::operator()(const posetcodes::Subspace& s) const noexcept
{
    std::size_t h = s.ambient_dim() * 1000003U + s.dim();
    const auto& b = s.basis();
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (posetcodes::Element e : b.row_span(r))
            h = h * 31U + static_cast<std::size_t>(e);
    return h;
}
