#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace posetcodes {

/// Canonical representative of an element of F_q, in [0, q). For q = p^m the
/// base-p digits of the representative are the polynomial coefficients
/// (constant term first).
using Element = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// The finite field F_q, q = p^m <= 2^16. Prime fields use modular arithmetic;
/// extension fields use exp/log tables over the smallest monic irreducible
/// polynomial of degree m (ordered by the integer encoding of its coefficients).
class Field {
public:
    static constexpr std::uint32_t max_order = 1U << 16;

    /// Shared instance for F_q. Throws RangeError unless q is a prime power in
    /// [2, 2^16].
    static FieldPtr get(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }

    /// Coefficients c_0..c_{m-1} of the monic modulus x^m + ... (empty for m = 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    /// Throws DivisionByZero for a = 0.
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t e) const;

    /// All q elements in increasing representative order (0 first).
    std::vector<Element> elements() const;

    bool same_as(const Field& other) const noexcept { return q_ == other.q_; }

    Field(std::uint32_t p, std::uint32_t m);

private:
    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

/// Throws FieldMismatch if the two fields differ.
void require_same_field(const Field& a, const Field& b);

} // namespace posetcodes
