#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace posetcodes {

/// Subset of the ground set {1,...,n}, bit-packed. All public indices are
/// 1-based; bit i-1 of the storage holds element i.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<int> elements);
    ElementSet(std::size_t universe, const std::vector<int>& elements);

    std::size_t universe() const noexcept { return universe_; }

    bool contains(int element) const noexcept
    {
        auto i = static_cast<std::size_t>(element - 1);
        return element >= 1 && i < universe_ && ((words_[i / 64] >> (i % 64)) & 1U);
    }

    /// Throws RangeError when element lies outside {1,...,universe}.
    void insert(int element);
    void erase(int element);

    std::size_t size() const noexcept
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const noexcept;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    /// Members in increasing order, 1-based.
    std::vector<int> elements() const;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace posetcodes
