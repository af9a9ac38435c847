#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace mintest {

/// Fixed-length bit vector packed into 64-bit words. Bit i lives in word i/64 at position i%64.
class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t bits) : size_(bits), words_(word_count(bits), 0) {}

    static constexpr std::size_t word_count(std::size_t bits) { return (bits + word_bits - 1) / word_bits; }

    std::size_t size() const { return size_; }
    std::span<const word_type> words() const { return words_; }
    std::span<word_type> words() { return words_; }

    bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
    void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    BitVector& operator&=(const BitVector& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitVector& operator|=(const BitVector& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    BitVector& operator^=(const BitVector& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::size_t hash() const {
        std::size_t h = size_;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<word_type>{}(w);
        return h;
    }

private:
    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const { return v.hash(); }
};

} // namespace mintest
