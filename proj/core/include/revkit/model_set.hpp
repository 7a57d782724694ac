// Sets of interpretations over a fixed finite universe, stored as 64-bit
// masks.  Every semantic computation in the library (entailment, minima,
// postulate checks) reduces to a handful of mask operations on this type.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace revkit {

class ModelSet {
public:
    ModelSet() = default;

    ModelSet(int universe_size, std::uint64_t bits)
        : universe_(universe_size), bits_(bits & mask_for(universe_size)) {}

    static ModelSet empty(int universe_size) { return ModelSet(universe_size, 0); }

    static ModelSet full(int universe_size) {
        return ModelSet(universe_size, mask_for(universe_size));
    }

    static ModelSet of(int universe_size, const std::vector<int>& members) {
        ModelSet s = empty(universe_size);
        for (int m : members) s.insert(m);
        return s;
    }

    int universe_size() const { return universe_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    void insert(int i) { bits_ |= (std::uint64_t{1} << i); }
    void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

    bool is_empty() const { return bits_ == 0; }
    bool is_full() const { return bits_ == mask_for(universe_); }
    int count() const { return __builtin_popcountll(bits_); }

    ModelSet intersect(const ModelSet& o) const { return ModelSet(universe_, bits_ & o.bits_); }
    ModelSet unite(const ModelSet& o) const { return ModelSet(universe_, bits_ | o.bits_); }
    ModelSet minus(const ModelSet& o) const { return ModelSet(universe_, bits_ & ~o.bits_); }
    ModelSet complement() const { return ModelSet(universe_, ~bits_); }

    bool subset_of(const ModelSet& o) const { return (bits_ & ~o.bits_) == 0; }

    bool operator==(const ModelSet&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < universe_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    static std::uint64_t mask_for(int universe_size) {
        if (universe_size < 0 || universe_size > 64)
            throw std::invalid_argument("ModelSet: universe size must be in [0, 64]");
        if (universe_size == 64) return ~std::uint64_t{0};
        return (std::uint64_t{1} << universe_size) - 1;
    }

private:
    int universe_ = 0;
    std::uint64_t bits_ = 0;
};

} // namespace revkit
