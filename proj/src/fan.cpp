#include "frobkit/fan.hpp"

#include <algorithm>
#include <set>

namespace frobkit {

namespace {

// cyclic comparator for rank-2 completeness sanity check
int half_plane(const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

BigInt cross(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

Fan::Fan(size_t lattice_rank, std::vector<IntVec> rays,
         std::vector<std::vector<size_t>> maximal_cones)
    : d_(lattice_rank), rays_(std::move(rays)), max_cones_(std::move(maximal_cones)) {
    if (d_ == 0) throw InputError("fan: lattice rank must be positive");
    if (rays_.empty()) throw InputError("fan: no rays");
    std::set<IntVec> seen;
    for (const auto& r : rays_) {
        if (r.size() != d_) throw InputError("fan: ray of wrong dimension");
        if (content(r) != 1) throw InputError("fan: ray not primitive (or zero)");
        if (!seen.insert(r).second) throw InputError("fan: duplicate ray");
    }
    if (max_cones_.empty()) throw InputError("fan: no maximal cones");
    for (const auto& mc : max_cones_) {
        if (mc.size() != d_)
            throw InputError("fan: maximal cone must have exactly d rays (smooth case)");
        IntMatrix m(d_, d_);
        std::set<size_t> dup;
        for (size_t k = 0; k < d_; ++k) {
            if (mc[k] >= rays_.size()) throw InputError("fan: ray index out of range");
            if (!dup.insert(mc[k]).second) throw InputError("fan: repeated ray in a cone");
            for (size_t j = 0; j < d_; ++j) m(k, j) = rays_[mc[k]][j];
        }
        BigInt det = determinant(m);
        if (det != 1 && det != -1)
            throw InputError("fan: non-smooth maximal cone (|det| != 1)");
    }

    // completeness sanity check in low rank; trusted input above
    if (d_ == 1) {
        if (rays_.size() != 2 || rays_[0][0] + rays_[1][0] != 0)
            throw InputError("fan: rank-1 complete fan must have rays +1 and -1");
    } else if (d_ == 2) {
        std::vector<size_t> order(rays_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            int ha = half_plane(rays_[a]), hb = half_plane(rays_[b]);
            if (ha != hb) return ha < hb;
            return cross(rays_[a], rays_[b]) > 0;
        });
        std::set<std::set<size_t>> cones;
        for (const auto& mc : max_cones_) cones.insert({mc[0], mc[1]});
        for (size_t i = 0; i < order.size(); ++i) {
            size_t a = order[i], b = order[(i + 1) % order.size()];
            if (cross(rays_[a], rays_[b]) <= 0)
                throw InputError("fan: rank-2 rays do not wind around the origin (not complete)");
            if (!cones.count({a, b}))
                throw InputError("fan: missing maximal cone between adjacent rays (not complete)");
        }
        if (cones.size() != rays_.size())
            throw InputError("fan: extra maximal cones in rank 2");
    }

    IntMatrix pairing(d_, rays_.size());
    for (size_t j = 0; j < d_; ++j)
        for (size_t rho = 0; rho < rays_.size(); ++rho)
            pairing(j, rho) = rays_[rho][j];
    cl_ = AbelianGroup::cokernel(pairing);
}

WeilDivisor Fan::principal_divisor(const IntVec& m) const {
    if (m.size() != d_) throw InputError("principal_divisor: dimension mismatch");
    WeilDivisor div(rays_.size());
    for (size_t rho = 0; rho < rays_.size(); ++rho) div[rho] = dot(m, rays_[rho]);
    return div;
}

GroupElement Fan::divisor_class(const WeilDivisor& div) const {
    if (div.size() != rays_.size())
        throw InputError("divisor_class: coefficient count mismatch");
    return cl_->reduce(div);
}

GroupElement Fan::canonical_class() const {
    return divisor_class(WeilDivisor(rays_.size(), BigInt(-1)));
}

Fan Fan::projective_space(size_t n) {
    if (n == 0) throw InputError("projective_space: dimension must be positive");
    std::vector<IntVec> rays;
    for (size_t i = 0; i < n; ++i) {
        IntVec e(n, BigInt(0));
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVec(n, BigInt(-1)));
    std::vector<std::vector<size_t>> cones;
    for (size_t skip = 0; skip <= n; ++skip) {
        std::vector<size_t> mc;
        for (size_t i = 0; i <= n; ++i)
            if (i != skip) mc.push_back(i);
        cones.push_back(mc);
    }
    return Fan(n, std::move(rays), std::move(cones));
}

}  // namespace frobkit
