#ifndef THETACUT_VERTEX_SET_HPP
#define THETACUT_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace thetacut {

/// Fixed-capacity bitset over vertex indices 0..capacity-1, stored as 64-bit words.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity)
        : capacity_(capacity), words_((capacity + kWordBits - 1) / kWordBits, 0) {}

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v) s.set(v);
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }
    std::span<const Word> words() const noexcept { return words_; }

    bool test(std::size_t v) const noexcept {
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void set(std::size_t v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void reset(std::size_t v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
    void flip(std::size_t v) noexcept { words_[v / kWordBits] ^= Word{1} << (v % kWordBits); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const noexcept {
        for (Word w : words_)
            if (w != 0) return true;
        return false;
    }
    bool empty() const noexcept { return !any(); }

    /// Number of common members; both sets must share a capacity.
    std::size_t intersection_count(const VertexSet& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Removes every member of `o`.
    VertexSet& subtract(const VertexSet& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }

    /// Complement within the capacity.
    VertexSet complement() const {
        VertexSet c(capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w != 0) {
                const int b = std::countr_zero(w);
                f(i * kWordBits + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void trim() noexcept {
        if (capacity_ % kWordBits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (capacity_ % kWordBits)) - 1;
    }

    std::size_t capacity_ = 0;
    std::vector<Word> words_;
};

}  // namespace thetacut

#endif
