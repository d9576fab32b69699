#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spincs/error.hpp"

namespace spincs {

// Coefficient vector over Z/2. Dimensions here are tiny (Betti numbers of
// catalog manifolds), so one byte per bit is plenty.
class F2Vec {
  public:
    F2Vec() = default;
    explicit F2Vec(std::size_t n) : bits_(n, 0) {}

    static F2Vec from_mask(std::uint64_t mask, std::size_t n) {
        F2Vec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v.bits_[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
        return v;
    }

    std::size_t size() const { return bits_.size(); }

    int operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, int v) {
        bits_[i] = static_cast<std::uint8_t>(v & 1);
    }
    void flip(std::size_t i) { bits_[i] ^= 1u; }

    F2Vec operator+(const F2Vec& o) const {
        if (size() != o.size())
            fail("dimension_mismatch", "Z/2 vector sizes differ");
        F2Vec r(size());
        for (std::size_t i = 0; i < size(); ++i)
            r.bits_[i] = bits_[i] ^ o.bits_[i];
        return r;
    }
    F2Vec& operator+=(const F2Vec& o) { return *this = *this + o; }

    int dot(const F2Vec& o) const {
        if (size() != o.size())
            fail("dimension_mismatch", "Z/2 vector sizes differ");
        int s = 0;
        for (std::size_t i = 0; i < size(); ++i)
            s ^= bits_[i] & o.bits_[i];
        return s;
    }

    bool is_zero() const {
        for (auto b : bits_)
            if (b)
                return false;
        return true;
    }

    std::uint64_t mask() const {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < size(); ++i)
            if (bits_[i])
                m |= (std::uint64_t{1} << i);
        return m;
    }

    bool operator==(const F2Vec& o) const { return bits_ == o.bits_; }
    bool operator!=(const F2Vec& o) const { return !(*this == o); }

  private:
    std::vector<std::uint8_t> bits_;
};

// Rank of a list of row vectors over Z/2 by Gaussian elimination.
inline int f2_rank(std::vector<F2Vec> rows) {
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && !rows[pivot][col])
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != row && rows[r][col])
                rows[r] += rows[row];
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace spincs
