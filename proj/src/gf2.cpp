#include "smallcover/gf2.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "smallcover/errors.hpp"

namespace smallcover {
namespace {

void check_width(std::span<const BitVector> vectors, int n) {
    if (n < 1 || n > kMaxDimension) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxDimension) + "]");
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (!vectors[i].fits(n)) {
            throw std::invalid_argument("vector " + std::to_string(i) + " (" +
                                        std::to_string(vectors[i].bits()) + ") wider than " +
                                        std::to_string(n) + " bits");
        }
    }
}

// XOR basis keyed by the highest set bit.
class EchelonBasis {
public:
    // Returns true if v was independent of the current basis (and adds it).
    bool insert(std::uint32_t v) {
        v = reduce(v);
        if (v == 0) return false;
        pivots_[std::bit_width(v) - 1] = v;
        ++rank_;
        return true;
    }

    std::uint32_t reduce(std::uint32_t v) const {
        while (v != 0) {
            const int top = std::bit_width(v) - 1;
            if (pivots_[top] == 0) break;
            v ^= pivots_[top];
        }
        return v;
    }

    int rank() const { return rank_; }

private:
    std::array<std::uint32_t, 32> pivots_{};
    int rank_ = 0;
};

}  // namespace

int rank(std::span<const BitVector> vectors, int n) {
    check_width(vectors, n);
    EchelonBasis basis;
    for (BitVector v : vectors) basis.insert(v.bits());
    return basis.rank();
}

bool is_independent(std::span<const BitVector> vectors, int n) {
    return rank(vectors, n) == static_cast<int>(vectors.size());
}

bool in_span(BitVector v, std::span<const BitVector> vectors, int n) {
    check_width(vectors, n);
    check_width(std::span<const BitVector>(&v, 1), n);
    EchelonBasis basis;
    for (BitVector w : vectors) basis.insert(w.bits());
    return basis.reduce(v.bits()) == 0;
}

std::vector<std::vector<int>> circuits(std::span<const BitVector> vectors, int n) {
    check_width(vectors, n);
    if (vectors.size() > kMaxCircuitInput) {
        throw std::invalid_argument("circuits: at most " + std::to_string(kMaxCircuitInput) +
                                    " vectors supported");
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].is_zero()) {
            throw InvariantError("circuits: vector " + std::to_string(i) + " is zero");
        }
    }

    const std::uint32_t k = static_cast<std::uint32_t>(vectors.size());
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;

    // Subsets in order of increasing size; a zero-sum subset is a circuit iff it
    // contains no circuit found earlier (every zero-sum set contains a circuit).
    std::vector<std::uint32_t> subsets(full);
    for (std::uint32_t s = 1; s <= full; ++s) subsets[s - 1] = s;
    std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    std::vector<std::uint32_t> found;
    for (std::uint32_t s : subsets) {
        std::uint32_t sum = 0;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            sum ^= vectors[std::countr_zero(rest)].bits();
        }
        if (sum != 0) continue;
        const bool minimal = std::none_of(found.begin(), found.end(),
                                          [s](std::uint32_t c) { return (c & s) == c; });
        if (minimal) found.push_back(s);
    }

    std::vector<std::vector<int>> result;
    result.reserve(found.size());
    for (std::uint32_t s : found) {
        std::vector<int> indices;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            indices.push_back(std::countr_zero(rest));
        }
        result.push_back(std::move(indices));
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace smallcover
