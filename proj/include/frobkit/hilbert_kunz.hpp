#ifndef FROBKIT_HILBERT_KUNZ_HPP
#define FROBKIT_HILBERT_KUNZ_HPP

#include "frobkit/cone.hpp"

namespace frobkit {

/// Monomial ideal in a semigroup ring, given by generators in the dual
/// cone. Certified m-primary at construction: for every semigroup
/// generator a_i there must be a k_i <= k_max with k_i * a_i inside the
/// ideal semigroup.
class MonomialIdeal {
public:
    MonomialIdeal(SemigroupRing ring, std::vector<IntVec> generators, unsigned k_max = 64);

    /// The maximal ideal: generated by the ring's semigroup generators.
    static MonomialIdeal maximal(SemigroupRing ring, unsigned k_max = 64);

    const SemigroupRing& ring() const { return ring_; }
    const std::vector<IntVec>& generators() const { return gens_; }
    const std::vector<unsigned>& primary_exponents() const { return k_; }

    /// m lies in the ideal semigroup scaled by q: m - q*g_j in the dual cone
    /// for some generator g_j.
    bool contains_scaled(const IntVec& m, const BigInt& q) const;

private:
    SemigroupRing ring_;
    std::vector<IntVec> gens_;
    std::vector<unsigned> k_;  // per ring generator
};

struct HKOptions {
    BigInt budget = BigInt(100000000);  // max box points enumerated
    unsigned jobs = 1;
};

/// Exact colength of I^{[q]}: the number of semigroup points outside the
/// scaled ideal, by certified box enumeration with deduplication.
BigInt hk_length_toric(const MonomialIdeal& ideal, const BigInt& p, unsigned e,
                       const HKOptions& opts = {});

struct HKSample {
    unsigned e = 0;
    BigInt q;
    BigInt length;
};

struct HKEstimate {
    size_t d = 0;
    // per adjacent sample pair: exact solution of a q^d + b q^{d-1} = length
    std::vector<std::pair<BigRat, BigRat>> pairs;
    BigRat ehk_estimate;
    BigRat beta_estimate;
    // residual length - (a q^d + b q^{d-1}) per sample under the final pair
    std::vector<BigRat> residuals;
};

/// Exact two-point solves on adjacent samples; the last pair is reported as
/// the estimate. Needs >= 2 samples at strictly increasing e.
HKEstimate estimate_ehk_beta(std::vector<HKSample> samples, size_t d);

/// sum of c_i * r_i^e, exactly.
BigRat evaluate_closed_form(const std::vector<std::pair<BigRat, BigInt>>& terms, unsigned e);

}  // namespace frobkit

#endif
