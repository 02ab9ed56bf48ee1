#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace smallcover {

/// Largest supported ambient dimension of Z_2^n.
inline constexpr int kMaxDimension = 16;

/// Element of Z_2^n stored as a bitmask: bit i holds the coefficient of e_{i+1}.
class BitVector {
public:
    constexpr BitVector() = default;
    constexpr explicit BitVector(std::uint32_t bits) : bits_(bits) {}

    /// Standard basis vector; unit(0) is e_1.
    static constexpr BitVector unit(int i) { return BitVector{std::uint32_t{1} << i}; }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool is_zero() const { return bits_ == 0; }
    constexpr int weight() const { return std::popcount(bits_); }
    constexpr bool fits(int n) const { return n >= 32 || (bits_ >> n) == 0; }

    constexpr BitVector& operator^=(BitVector other) {
        bits_ ^= other.bits_;
        return *this;
    }
    friend constexpr BitVector operator^(BitVector a, BitVector b) { return a ^= b; }
    friend constexpr auto operator<=>(BitVector, BitVector) = default;

private:
    std::uint32_t bits_ = 0;
};

enum class Parity { even, odd };

constexpr Parity parity(BitVector v) { return (v.weight() & 1) != 0 ? Parity::odd : Parity::even; }

/// GF(2) rank of `vectors` in Z_2^n. Throws std::invalid_argument if n is out of
/// range or a vector does not fit in n bits.
int rank(std::span<const BitVector> vectors, int n);

bool is_independent(std::span<const BitVector> vectors, int n);

/// True iff v lies in the span of `vectors`.
bool in_span(BitVector v, std::span<const BitVector> vectors, int n);

/// Upper bound on the input size of circuits(); the enumeration is exhaustive.
inline constexpr std::size_t kMaxCircuitInput = 16;

/// Every inclusion-minimal set of indices whose vectors XOR to zero.
/// Each subset is sorted ascending and the list is sorted lexicographically.
/// Throws InvariantError if a vector is zero.
std::vector<std::vector<int>> circuits(std::span<const BitVector> vectors, int n);

}  // namespace smallcover
