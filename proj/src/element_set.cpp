#include "posetcodes/element_set.hpp"

#include <algorithm>
#include <string>

#include "posetcodes/errors.hpp"

namespace posetcodes {

ElementSet::ElementSet(std::size_t universe, std::initializer_list<int> elements)
    : ElementSet(universe)
{
    for (int e : elements)
        insert(e);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<int>& elements)
    : ElementSet(universe)
{
    for (int e : elements)
        insert(e);
}

void ElementSet::insert(int element)
{
    if (element < 1 || static_cast<std::size_t>(element) > universe_)
        throw RangeError("element " + std::to_string(element) + " outside {1,...," +
                         std::to_string(universe_) + "}");
    auto i = static_cast<std::size_t>(element - 1);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void ElementSet::erase(int element)
{
    if (!contains(element))
        return;
    auto i = static_cast<std::size_t>(element - 1);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept
{
    const std::size_t common = std::min(words_.size(), other.words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t theirs = w < common ? other.words_[w] : 0;
        if ((words_[w] & ~theirs) != 0)
            return false;
    }
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
    if (other.universe_ > universe_) {
        universe_ = other.universe_;
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t w = 0; w < other.words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other)
{
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
}

std::vector<int> ElementSet::elements() const
{
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(b)) + 1);
            bits &= bits - 1;
        }
    }
    return out;
}

} // namespace posetcodes
