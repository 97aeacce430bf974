#ifndef PFLINK_BITVECTOR_HPP
#define PFLINK_BITVECTOR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace pflink {

/// Element d = (d1,...,dn) of {0,1}^n. The global enumeration order is by
/// index() = sum d_i * 2^(i-1), i.e. d1 is the least significant bit; this
/// order is fixed so that certificates are byte-stable.
class BitVector {
public:
    BitVector(int n, unsigned bits) : n_(n), bits_(bits) {
        if (n < 0 || n > 20) throw std::invalid_argument("bitvector: length out of range");
        if (bits >> n) throw std::invalid_argument("bitvector: bits out of range");
    }

    static BitVector zero(int n) { return BitVector(n, 0); }

    /// All of {0,1}^n in index order, starting at (0,...,0).
    static std::vector<BitVector> all(int n) {
        std::vector<BitVector> v;
        v.reserve(1u << n);
        for (unsigned b = 0; b < (1u << n); ++b) v.emplace_back(n, b);
        return v;
    }

    int length() const { return n_; }
    unsigned index() const { return bits_; }
    bool bit(int i) const { return (bits_ >> (i - 1)) & 1u; }  // 1-based, d_i
    bool is_zero() const { return bits_ == 0; }

    int weight() const {
        int w = 0;
        for (int i = 1; i <= n_; ++i) w += bit(i);
        return w;
    }

    /// Minimal index i with d_i != 0; throws on the zero vector.
    int min_index() const {
        for (int i = 1; i <= n_; ++i)
            if (bit(i)) return i;
        throw std::domain_error("bitvector: min_index of zero vector");
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator<(const BitVector& o) const { return bits_ < o.bits_; }

    std::string str() const {
        std::string s = "(";
        for (int i = 1; i <= n_; ++i) s += (bit(i) ? "1" : "0") + std::string(i < n_ ? "," : "");
        return s + ")";
    }

private:
    int n_;
    unsigned bits_;
};

} // namespace pflink

#endif
