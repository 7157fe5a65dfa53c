#ifndef FROBKIT_ABELIAN_HPP
#define FROBKIT_ABELIAN_HPP

#include <memory>

#include "frobkit/smith.hpp"

namespace frobkit {

class AbelianGroup;
using GroupPtr = std::shared_ptr<const AbelianGroup>;

/// Element of an AbelianGroup in canonical coordinates: torsion slots
/// reduced into [0, d_i), trivial slots dropped, free slots in Z.
/// Equality of elements is coordinate-wise equality.
class GroupElement {
public:
    GroupElement() = default;
    GroupElement(GroupPtr group, IntVec coords)
        : group_(std::move(group)), coords_(std::move(coords)) {}

    const GroupPtr& group() const { return group_; }
    const IntVec& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const GroupElement& o) const { return coords_ == o.coords_; }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

    GroupElement operator+(const GroupElement& o) const;
    GroupElement operator-() const;
    GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
    GroupElement operator*(const BigInt& k) const;

    /// Coordinates on the free slots only.
    IntVec free_part() const;

private:
    GroupPtr group_;
    IntVec coords_;
};

/// A finitely generated abelian group presented as
///   Z^{generators} / (row span of the relation matrix),
/// normalized by the Smith normal form of the relations.
class AbelianGroup : public std::enable_shared_from_this<AbelianGroup> {
public:
    /// relations: one row per relation, one column per generator.
    static GroupPtr cokernel(const IntMatrix& relations);

    size_t generator_count() const { return generators_; }
    const IntMatrix& relations() const { return relations_; }
    const SmithDecomposition& snf() const { return snf_; }

    size_t free_rank() const { return free_rank_; }
    /// Nontrivial diagonal entries > 1, a divisibility chain.
    const std::vector<BigInt>& torsion_invariants() const { return torsion_; }

    /// Modulus per canonical slot: d_i > 1 for torsion slots, 0 for free slots.
    const std::vector<BigInt>& slot_moduli() const { return moduli_; }

    bool is_trivial() const { return moduli_.empty(); }

    /// Canonical form of a vector on the generators.
    GroupElement reduce(const IntVec& v) const;

    GroupElement zero() const { return reduce(IntVec(generators_, BigInt(0))); }

    /// Canonicalize raw slot coordinates (same slot layout as reduce's output).
    IntVec canonicalize(IntVec coords) const;

private:
    AbelianGroup() = default;

    size_t generators_ = 0;
    IntMatrix relations_;
    SmithDecomposition snf_;
    size_t free_rank_ = 0;
    std::vector<BigInt> torsion_;
    std::vector<BigInt> moduli_;
    // Per slot, the corresponding column of V from the SNF: slot value = <red_[k], v>.
    std::vector<IntVec> red_;
};

bool is_torsion(const GroupElement& x);

}  // namespace frobkit

#endif
