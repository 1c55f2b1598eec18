#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace kposet {

/// Fixed-length bitset sized at runtime. Used for up-/down-sets and solver
/// domains, where the universe is the element indexing of one poset. Sets of
/// up to 128 bits live inline.
class DynamicBitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size) : size_(size), words_((size + 63) / 64) {}

    auto size() const noexcept -> std::size_t { return size_; }

    auto test(std::size_t i) const -> bool { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    void set_all()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    void reset_all()
    {
        for (auto & w : words_)
            w = 0;
    }

    auto any() const -> bool
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    auto none() const -> bool { return ! any(); }

    auto count() const -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    auto find_first() const -> std::size_t { return find_from(0); }
    auto find_next(std::size_t i) const -> std::size_t { return find_from(i + 1); }

    auto intersects(const DynamicBitset & other) const -> bool
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & other.words_[w])
                return true;
        return false;
    }

    auto is_subset_of(const DynamicBitset & other) const -> bool
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w])
                return false;
        return true;
    }

    auto operator&=(const DynamicBitset & other) -> DynamicBitset &
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= other.words_[w];
        return *this;
    }

    auto operator|=(const DynamicBitset & other) -> DynamicBitset &
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= other.words_[w];
        return *this;
    }

    auto operator-=(const DynamicBitset & other) -> DynamicBitset &
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~other.words_[w];
        return *this;
    }

    friend auto operator&(DynamicBitset a, const DynamicBitset & b) -> DynamicBitset { return a &= b; }
    friend auto operator|(DynamicBitset a, const DynamicBitset & b) -> DynamicBitset { return a |= b; }

    friend auto operator==(const DynamicBitset &, const DynamicBitset &) -> bool = default;

    auto words() const noexcept -> std::span<const std::uint64_t> { return {words_.data(), words_.size()}; }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                auto b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

private:
    auto find_from(std::size_t i) const -> std::size_t
    {
        if (i >= size_)
            return npos;
        std::size_t w = i / 64;
        auto bits = words_[w] & (~std::uint64_t{0} << (i % 64));
        while (true) {
            if (bits)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
            if (++w >= words_.size())
                return npos;
            bits = words_[w];
        }
    }

    void trim()
    {
        if (size_ % 64 != 0 && ! words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    class Words {
    public:
        Words() = default;
        explicit Words(std::size_t count) : count_(count)
        {
            if (count > inline_words)
                heap_.assign(count, 0);
        }

        auto size() const noexcept -> std::size_t { return count_; }
        auto empty() const noexcept -> bool { return count_ == 0; }
        auto data() noexcept -> std::uint64_t * { return count_ > inline_words ? heap_.data() : inline_.data(); }
        auto data() const noexcept -> const std::uint64_t * { return count_ > inline_words ? heap_.data() : inline_.data(); }
        auto operator[](std::size_t i) -> std::uint64_t & { return data()[i]; }
        auto operator[](std::size_t i) const -> std::uint64_t { return data()[i]; }
        auto back() -> std::uint64_t & { return data()[count_ - 1]; }
        auto begin() -> std::uint64_t * { return data(); }
        auto end() -> std::uint64_t * { return data() + count_; }
        auto begin() const -> const std::uint64_t * { return data(); }
        auto end() const -> const std::uint64_t * { return data() + count_; }

        friend auto operator==(const Words & a, const Words & b) -> bool
        {
            return a.count_ == b.count_ && std::equal(a.begin(), a.end(), b.begin());
        }

    private:
        static constexpr std::size_t inline_words = 2;
        std::size_t count_ = 0;
        std::array<std::uint64_t, inline_words> inline_{};
        std::vector<std::uint64_t> heap_;
    };

    std::size_t size_ = 0;
    Words words_;
};

} // namespace kposet
