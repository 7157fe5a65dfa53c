#include "frobkit/cone.hpp"

#include <algorithm>
#include <set>

namespace frobkit {

namespace {

// Extremality inside a pointed full-dimensional cone cut out by `normals`:
// the constraints tight at r must span a hyperplane.
bool extremal_by_rank(const IntVec& r, const std::vector<IntVec>& normals, size_t d) {
    std::vector<IntVec> tight;
    for (const auto& n : normals)
        if (dot(n, r) == 0) tight.push_back(n);
    return rank_of(std::move(tight)) == d - 1;
}

}  // namespace

std::vector<IntVec> dualize(size_t d, const std::vector<IntVec>& generators) {
    if (d == 0) throw InputError("dualize: lattice rank must be positive");
    for (const auto& g : generators)
        if (g.size() != d) throw InputError("dualize: generator of wrong dimension");
    if (rank_of(generators) != d)
        throw InputError("dualize: generators do not span Q^d");

    // Double description: start from the whole space (lineality = Z^d) and
    // intersect with one half-space <g, .> >= 0 at a time.
    std::vector<IntVec> lineality;
    for (size_t i = 0; i < d; ++i) {
        IntVec e(d, BigInt(0));
        e[i] = 1;
        lineality.push_back(e);
    }
    std::vector<IntVec> rays;
    std::vector<IntVec> processed;

    for (const auto& a : generators) {
        processed.push_back(a);

        // Split the lineality space against the new constraint.
        size_t nz = lineality.size();
        for (size_t i = 0; i < lineality.size(); ++i)
            if (dot(a, lineality[i]) != 0) {
                nz = i;
                break;
            }
        if (nz != lineality.size()) {
            IntVec b = lineality[nz];
            std::vector<IntVec> rest(lineality.begin(), lineality.begin() + nz);
            for (size_t i = nz + 1; i < lineality.size(); ++i) {
                const IntVec& l = lineality[i];
                BigInt pb = dot(a, b), pl = dot(a, l);
                if (pl == 0) {
                    rest.push_back(l);
                    continue;
                }
                BigInt g, x, y;
                mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                           pb.get_mpz_t(), pl.get_mpz_t());
                IntVec nb(d), nl(d);
                for (size_t k = 0; k < d; ++k) {
                    nb[k] = x * b[k] + y * l[k];                      // pairing g
                    nl[k] = (pl / g) * b[k] - (pb / g) * l[k];        // pairing 0
                }
                b = std::move(nb);
                rest.push_back(primitive(std::move(nl)));
            }
            if (dot(a, b) < 0)
                for (auto& x : b) x = -x;
            // project old rays onto the hyperplane, b picks up the positive side
            BigInt pb = dot(a, b);
            std::vector<IntVec> nrays;
            nrays.push_back(primitive(std::move(b)));
            for (const auto& r : rays) {
                BigInt pr = dot(a, r);
                IntVec nr(d);
                for (size_t k = 0; k < d; ++k) nr[k] = pb * r[k] - pr * b[k];
                nr = primitive(std::move(nr));
                if (content(nr) != 0) nrays.push_back(std::move(nr));
            }
            lineality = std::move(rest);
            rays = std::move(nrays);
        } else {
            std::vector<IntVec> keep, pos, neg;
            for (auto& r : rays) {
                BigInt p = dot(a, r);
                if (p > 0)
                    pos.push_back(r);
                else if (p == 0)
                    keep.push_back(r);
                else
                    neg.push_back(r);
            }
            if (neg.empty()) continue;
            std::vector<IntVec> next = keep;
            next.insert(next.end(), pos.begin(), pos.end());
            for (const auto& p : pos)
                for (const auto& n : neg) {
                    BigInt pp = dot(a, p), pn = dot(a, n);
                    IntVec w(d);
                    for (size_t k = 0; k < d; ++k) w[k] = pp * n[k] - pn * p[k];
                    w = primitive(std::move(w));
                    if (content(w) != 0) next.push_back(std::move(w));
                }
            rays = std::move(next);
        }

        // prune duplicates and non-extremal rays by the tight-constraint rank test
        std::set<IntVec> seen;
        std::vector<IntVec> pruned;
        const size_t ell = lineality.size();
        for (auto& r : rays) {
            if (!seen.insert(r).second) continue;
            std::vector<IntVec> tight_vecs;
            for (const auto& c : processed)
                if (dot(c, r) == 0) tight_vecs.push_back(c);
            if (rank_of(std::move(tight_vecs)) + ell + 1 < d) continue;
            pruned.push_back(std::move(r));
        }
        rays = std::move(pruned);
    }

    if (!lineality.empty())
        throw InputError("dualize: generators do not span Q^d (dual not pointed)");
    if (rank_of(rays) != d)
        throw InputError("dualize: input cone is not strongly convex (dual not full-dimensional)");

    // final extremality pass against the full constraint set
    std::vector<IntVec> out;
    for (const auto& r : rays)
        if (extremal_by_rank(r, processed, d)) out.push_back(r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cone::Cone(size_t lattice_rank, std::vector<IntVec> rays)
    : d_(lattice_rank), rays_(std::move(rays)) {
    if (d_ == 0) throw InputError("cone: lattice rank must be positive");
    if (rays_.empty()) throw InputError("cone: no rays");
    std::set<IntVec> seen;
    for (const auto& r : rays_) {
        if (r.size() != d_) throw InputError("cone: ray of wrong dimension");
        if (content(r) == 0) throw InputError("cone: zero ray");
        if (content(r) != 1) throw InputError("cone: ray is not primitive");
        if (!seen.insert(r).second) throw InputError("cone: duplicate ray");
    }
    if (rank_of(rays_) != d_)
        throw InputError("cone: rays do not span Q^d (cone not full-dimensional)");

    // dual generators double as the strong convexity certificate
    auto dual = dualize(d_, rays_);  // throws if the cone contains a line
    for (const auto& r : rays_)
        if (!extremal_by_rank(r, dual, d_))
            throw InputError("cone: ray is a non-negative combination of the others");

    IntMatrix pairing(d_, rays_.size());
    for (size_t j = 0; j < d_; ++j)
        for (size_t rho = 0; rho < rays_.size(); ++rho)
            pairing(j, rho) = rays_[rho][j];
    cl_ = AbelianGroup::cokernel(pairing);
}

WeilDivisor Cone::principal_divisor(const IntVec& m) const {
    if (m.size() != d_) throw InputError("principal_divisor: dimension mismatch");
    WeilDivisor div(rays_.size());
    for (size_t rho = 0; rho < rays_.size(); ++rho) div[rho] = dot(m, rays_[rho]);
    return div;
}

GroupElement Cone::divisor_class(const WeilDivisor& div) const {
    if (div.size() != rays_.size())
        throw InputError("divisor_class: coefficient count mismatch");
    return cl_->reduce(div);
}

GroupElement Cone::canonical_class() const {
    return divisor_class(WeilDivisor(rays_.size(), BigInt(-1)));
}

WeilDivisor round_down(const QWeilDivisor& div) {
    WeilDivisor out(div.size());
    for (size_t i = 0; i < div.size(); ++i) out[i] = rat_floor(div[i]);
    return out;
}

SemigroupRing::SemigroupRing(Cone cone, std::vector<IntVec> semigroup_generators)
    : cone_(std::move(cone)), gens_(std::move(semigroup_generators)) {
    if (gens_.empty()) throw InputError("semigroup ring: no generators");
    for (const auto& a : gens_) {
        if (a.size() != cone_.lattice_rank())
            throw InputError("semigroup ring: generator of wrong dimension");
        if (content(a) == 0) throw InputError("semigroup ring: zero generator");
        if (!contains(a))
            throw InputError("semigroup ring: generator outside the dual cone");
    }
}

SemigroupRing SemigroupRing::from_generators(size_t d, std::vector<IntVec> gens) {
    auto rays = dualize(d, gens);
    return SemigroupRing(Cone(d, std::move(rays)), std::move(gens));
}

bool SemigroupRing::contains(const IntVec& m) const {
    for (const auto& v : cone_.rays())
        if (dot(m, v) < 0) return false;
    return true;
}

}  // namespace frobkit
