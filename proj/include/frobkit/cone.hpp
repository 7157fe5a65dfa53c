#ifndef FROBKIT_CONE_HPP
#define FROBKIT_CONE_HPP

#include "frobkit/abelian.hpp"

namespace frobkit {

/// Weil divisor: one integer coefficient per ray.
using WeilDivisor = IntVec;
/// Q-Weil divisor: one rational coefficient per ray.
using QWeilDivisor = std::vector<BigRat>;

/// Extremal primitive rays of { v : <m, v> >= 0 for all m in generators },
/// sorted lexicographically. Brute-force double description; desk scale.
/// Throws InputError when the generators do not span Q^d or the cone they
/// span is not strongly convex (the dual is then not pointed/full).
std::vector<IntVec> dualize(size_t d, const std::vector<IntVec>& generators);

/// A strongly convex rational polyhedral full-dimensional cone in N = Z^d,
/// given by its extremal primitive rays. Defines the affine toric ring
/// k[dual(cone) ∩ M]. Immutable; the class group is computed up front.
class Cone {
public:
    Cone(size_t lattice_rank, std::vector<IntVec> rays);

    size_t lattice_rank() const { return d_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    size_t ray_count() const { return rays_.size(); }

    /// Cl = coker(M -> Z^rays), m |-> (<m, v_rho>)_rho; one generator per
    /// ray, relations = rows of the pairing matrix.
    const GroupPtr& class_group() const { return cl_; }

    /// div(u^m): coefficient at rho is <m, v_rho>.
    WeilDivisor principal_divisor(const IntVec& m) const;

    GroupElement divisor_class(const WeilDivisor& div) const;

    /// Class of -sum of the prime toric divisors.
    GroupElement canonical_class() const;

    bool is_q_gorenstein() const { return is_torsion(canonical_class()); }

private:
    size_t d_;
    std::vector<IntVec> rays_;
    GroupPtr cl_;
};

/// Coefficient-wise floor.
WeilDivisor round_down(const QWeilDivisor& div);

/// k[S] for the affine semigroup S generated by lattice points inside the
/// dual of `cone`; the generators are trusted to generate S.
class SemigroupRing {
public:
    SemigroupRing(Cone cone, std::vector<IntVec> semigroup_generators);

    /// Cone reconstructed from a generating set of the dual (rays = dualize(gens)).
    static SemigroupRing from_generators(size_t d, std::vector<IntVec> semigroup_generators);

    const Cone& cone() const { return cone_; }
    const std::vector<IntVec>& generators() const { return gens_; }

    /// m in dual(cone), i.e. <m, v_rho> >= 0 for every ray.
    bool contains(const IntVec& m) const;

private:
    Cone cone_;
    std::vector<IntVec> gens_;
};

}  // namespace frobkit

#endif
