#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monosize {

/// Fixed-width bit set over variable indices, sized at construction.
class VarSet {
  public:
    VarSet() = default;
    explicit VarSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    std::size_t width() const noexcept { return width_; }

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    VarSet &operator|=(const VarSet &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Removes the members of `o`.
    VarSet &subtract(const VarSet &o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    bool is_subset_of(const VarSet &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }
    bool intersects(const VarSet &o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    /// Lowest member, or width() when empty.
    std::size_t first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return width_;
    }
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < width_; ++i)
            if (test(i))
                out.push_back(i);
        return out;
    }

    friend bool operator==(const VarSet &, const VarSet &) = default;
    friend auto operator<=>(const VarSet &, const VarSet &) = default;

  private:
    std::size_t width_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace monosize
