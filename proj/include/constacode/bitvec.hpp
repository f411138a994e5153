#pragma once

// Packed vectors over F2 and row reduction.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constacode/error.hpp"

namespace constacode {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    std::size_t size() const { return length_; }
    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    bool get(std::size_t i) const { return words_[i / 64] >> (i % 64) & 1U; }
    void set(std::size_t i, bool v = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= mask;
        else
            words_[i / 64] &= ~mask;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
        return w;
    }
    bool is_zero() const {
        for (auto x : words_)
            if (x) return false;
        return true;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.length_ != length_) throw Error(ErrorKind::LengthMismatch, "bit vectors of different lengths");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec x, const BitVec& y) { return x ^= y; }

    /// Parity of the bitwise AND.
    bool dot(const BitVec& o) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1;
    }

    std::optional<std::size_t> first_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return std::nullopt;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

    /// Bit 0 is the most significant bit of the first byte; zero padded to whole bytes.
    std::string to_hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (std::size_t byte = 0; byte * 8 < length_; ++byte) {
            unsigned v = 0;
            for (std::size_t k = 0; k < 8; ++k) {
                const std::size_t i = byte * 8 + k;
                v = v << 1 | (i < length_ && get(i) ? 1U : 0U);
            }
            out += digits[v >> 4];
            out += digits[v & 15U];
        }
        return out;
    }

    static BitVec from_hex(const std::string& hex, std::size_t length) {
        if (hex.size() != 2 * ((length + 7) / 8))
            throw Error(ErrorKind::ParseError, "hex string has the wrong size for length " + std::to_string(length));
        BitVec v(length);
        for (std::size_t c = 0; c < hex.size(); ++c) {
            const char ch = hex[c];
            unsigned nib;
            if (ch >= '0' && ch <= '9')
                nib = static_cast<unsigned>(ch - '0');
            else if (ch >= 'a' && ch <= 'f')
                nib = static_cast<unsigned>(ch - 'a' + 10);
            else if (ch >= 'A' && ch <= 'F')
                nib = static_cast<unsigned>(ch - 'A' + 10);
            else
                throw Error(ErrorKind::ParseError, "bad hex digit");
            for (std::size_t k = 0; k < 4; ++k) {
                const std::size_t i = c * 4 + k;
                const bool bit = nib >> (3 - k) & 1U;
                if (i < length)
                    v.set(i, bit);
                else if (bit)
                    throw Error(ErrorKind::ParseError, "nonzero padding bit in hex string");
            }
        }
        return v;
    }

    std::string to_binary() const {
        std::string s(length_, '0');
        for (std::size_t i = 0; i < length_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Reduced row-echelon basis of a row space over F2.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t length = 0) : length_(length) {}

    EchelonBasis(std::size_t length, const std::vector<BitVec>& rows) : length_(length) {
        for (const auto& r : rows) insert(r);
    }

    std::size_t length() const { return length_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after clearing every pivot column.
    BitVec reduce(BitVec v) const {
        if (v.size() != length_) throw Error(ErrorKind::LengthMismatch, "vector length differs from code length");
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.get(pivots_[i])) v ^= rows_[i];
        return v;
    }

    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    /// Adds v to the span; returns false when it was already there.
    bool insert(const BitVec& v) {
        BitVec r = reduce(v);
        const auto p = r.first_set();
        if (!p) return false;
        for (auto& row : rows_)
            if (row.get(*p)) row ^= r;
        // keep rows ordered by pivot column
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < *p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), *p);
        return true;
    }

    /// Basis of the orthogonal complement under the standard dot product.
    std::vector<BitVec> orthogonal_complement() const {
        std::vector<bool> is_pivot(length_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<BitVec> out;
        for (std::size_t j = 0; j < length_; ++j) {
            if (is_pivot[j]) continue;
            BitVec v(length_);
            v.set(j);
            for (std::size_t i = 0; i < rows_.size(); ++i)
                if (rows_[i].get(j)) v.set(pivots_[i]);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    std::size_t length_;
    std::vector<BitVec> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace constacode
