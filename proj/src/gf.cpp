#include "posetcodes/gf.hpp"

#include <map>
#include <mutex>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, constant term first

Poly to_poly(std::uint32_t value, std::uint32_t p, std::uint32_t len)
{
    Poly out(len, 0);
    for (std::uint32_t i = 0; i < len; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

std::uint32_t from_poly(const Poly& poly, std::uint32_t p)
{
    std::uint32_t value = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it)
        value = value * p + *it;
    return value;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t result = 1, base = a % p;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of `num` modulo the monic-or-not polynomial `den` over F_p.
Poly poly_mod(Poly num, const Poly& den, std::uint32_t p)
{
    std::size_t dd = den.size() - 1;
    while (dd > 0 && den[dd] == 0)
        --dd;
    const std::uint32_t lead_inv = inv_mod(den[dd], p);
    for (std::size_t i = num.size(); i-- > dd;) {
        if (num[i] == 0)
            continue;
        const std::uint64_t factor = std::uint64_t{num[i]} * lead_inv % p;
        for (std::size_t t = 0; t <= dd; ++t) {
            const std::size_t at = i - dd + t;
            num[at] = static_cast<std::uint32_t>((num[at] + p - factor * den[t] % p) % p);
        }
    }
    num.resize(dd);
    return num;
}

bool is_irreducible(const Poly& monic, std::uint32_t p)
{
    const std::uint32_t m = static_cast<std::uint32_t>(monic.size() - 1);
    for (std::uint32_t d = 1; d <= m / 2; ++d) {
        std::uint32_t count = 1;
        for (std::uint32_t t = 0; t < d; ++t)
            count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly divisor = to_poly(low, p, d);
            divisor.push_back(1);
            Poly rem = poly_mod(monic, divisor, p);
            bool zero = true;
            for (auto c : rem)
                zero = zero && c == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& modulus, std::uint32_t p)
{
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return poly_mod(std::move(prod), modulus, p);
}

bool is_prime(std::uint32_t v)
{
    if (v < 2)
        return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

} // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m), q_(1)
{
    for (std::uint32_t i = 0; i < m; ++i)
        q_ *= p;
    if (m == 1)
        return;

    Poly modulus_full;
    for (std::uint32_t low = 0; low < q_; ++low) {
        Poly candidate = to_poly(low, p, m);
        candidate.push_back(1);
        if (candidate[0] != 0 && is_irreducible(candidate, p)) {
            modulus_full = std::move(candidate);
            break;
        }
    }
    modulus_.assign(modulus_full.begin(), modulus_full.end() - 1);

    // Search for a primitive element in representative order.
    const std::uint32_t group = q_ - 1;
    for (std::uint32_t g = 2; g < q_; ++g) {
        const Poly gen = to_poly(g, p, m);
        exp_.assign(2 * static_cast<std::size_t>(group), 0);
        Poly power = to_poly(1, p, m);
        std::uint32_t order = 0;
        do {
            exp_[order] = from_poly(power, p);
            power = mulmod(power, gen, modulus_full, p);
            ++order;
        } while (from_poly(power, p) != 1 && order < group);
        if (order == group && from_poly(power, p) == 1)
            break;
    }
    for (std::uint32_t i = 0; i < group; ++i)
        exp_[group + i] = exp_[i];
    log_.assign(q_, 0);
    for (std::uint32_t i = 0; i < group; ++i)
        log_[exp_[i]] = i;
}

FieldPtr Field::get(std::uint32_t q)
{
    static std::mutex mutex;
    static std::map<std::uint32_t, FieldPtr> cache;

    if (q < 2 || q > max_order)
        throw RangeError("field order " + std::to_string(q) + " outside [2, 65536]");
    std::uint32_t p = 2;
    while (q % p != 0)
        ++p;
    std::uint32_t m = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1 || !is_prime(p))
        throw RangeError("field order " + std::to_string(q) + " is not a prime power");

    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot)
        slot = std::make_shared<const Field>(p, m);
    return slot;
}

Element Field::add(Element a, Element b) const
{
    if (m_ == 1)
        return (a + b) % p_;
    if (p_ == 2)
        return a ^ b;
    Element out = 0, scale = 1;
    while (a != 0 || b != 0) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

Element Field::neg(Element a) const
{
    if (m_ == 1)
        return (p_ - a % p_) % p_;
    if (p_ == 2)
        return a;
    Element out = 0, scale = 1;
    while (a != 0) {
        out += ((p_ - a % p_) % p_) * scale;
        a /= p_;
        scale *= p_;
    }
    return out;
}

Element Field::mul(Element a, Element b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (m_ == 1)
        return static_cast<Element>(std::uint64_t{a} * b % p_);
    return exp_[log_[a] + log_[b]];
}

Element Field::inv(Element a) const
{
    if (a == 0)
        throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (m_ == 1)
        return inv_mod(a, p_);
    const std::uint32_t group = q_ - 1;
    return exp_[(group - log_[a]) % group];
}

Element Field::pow(Element a, std::uint64_t e) const
{
    Element result = 1;
    Element base = a;
    for (; e != 0; e >>= 1) {
        if (e & 1U)
            result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

std::vector<Element> Field::elements() const
{
    std::vector<Element> out(q_);
    for (Element i = 0; i < q_; ++i)
        out[i] = i;
    return out;
}

void require_same_field(const Field& a, const Field& b)
{
    if (!a.same_as(b))
        throw FieldMismatch("GF(" + std::to_string(a.order()) + ") vs GF(" + std::to_string(b.order()) + ")");
}

} // namespace posetcodes
