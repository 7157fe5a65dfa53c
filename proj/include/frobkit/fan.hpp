#ifndef FROBKIT_FAN_HPP
#define FROBKIT_FAN_HPP

#include "frobkit/cone.hpp"

namespace frobkit {

/// A smooth complete fan in N = Z^d, given by its rays and maximal cones
/// (as ray index sets). Smoothness (each maximal cone a Z-basis) is
/// checked; completeness is sanity-checked in rank <= 2 and trusted above.
class Fan {
public:
    Fan(size_t lattice_rank, std::vector<IntVec> rays,
        std::vector<std::vector<size_t>> maximal_cones);

    size_t lattice_rank() const { return d_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    size_t ray_count() const { return rays_.size(); }
    const std::vector<std::vector<size_t>>& maximal_cones() const { return max_cones_; }

    /// A_{d-1}(X) = coker(M -> Z^rays); torsion-free for smooth complete fans.
    const GroupPtr& class_group() const { return cl_; }

    WeilDivisor principal_divisor(const IntVec& m) const;
    GroupElement divisor_class(const WeilDivisor& div) const;
    /// K_X = -sum of the prime toric divisors.
    GroupElement canonical_class() const;

    /// Fan of projective n-space: rays e_1..e_n and -(e_1+...+e_n).
    static Fan projective_space(size_t n);

private:
    size_t d_;
    std::vector<IntVec> rays_;
    std::vector<std::vector<size_t>> max_cones_;
    GroupPtr cl_;
};

}  // namespace frobkit

#endif
