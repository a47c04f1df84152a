// Fixed-capacity dynamic bitset used for element membership masks.
// Element indices are dense (0..n-1), so a packed word array beats
// std::set by a wide margin for the subgroup computations in this library.
#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace hs {

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool operator==(const Bitset& o) const { return words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return words_ != o.words_; }

    // True if every member of *this is also in o.
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // Orders masks by their sorted member lists: the set containing the
    // smaller first-differing element sorts first.  Used to pick canonical
    // representatives deterministically.
    bool set_less(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t diff = words_[i] ^ o.words_[i];
            if (diff) {
                std::uint64_t low = diff & ~(diff - 1);
                return words_[i] & low;  // we own the smallest differing element
            }
        }
        return false;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                f(static_cast<std::int32_t>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    // Like for_each, but stops as soon as f returns true.
    template <typename F>
    void for_each_until(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(w));
                if (f(static_cast<std::int32_t>(wi * 64 + b))) return;
                w &= w - 1;
            }
        }
    }

    std::vector<std::int32_t> members() const {
        std::vector<std::int32_t> out;
        out.reserve(count());
        for_each([&](std::int32_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace hs
