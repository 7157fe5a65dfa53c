#ifndef FROBKIT_FROBENIUS_HPP
#define FROBKIT_FROBENIUS_HPP

#include "frobkit/fan.hpp"

namespace frobkit {

struct FrobeniusSummand {
    GroupElement cls;
    BigInt multiplicity;
    IntVec witness_s;             // one residue representative for the class
    WeilDivisor witness_divisor;  // round_down((1/q) (twist + div(u^s)))
};

/// Splitting of the e-th Frobenius pushforward of the structure sheaf into
/// rank-one classes: one summand class per residue s in [0, q)^d, the class
/// of the rounded-down divisor (1/q) div(u^s). Multiplicities sum to q^d.
struct FrobeniusDecomposition {
    BigInt p;
    unsigned e = 1;
    BigInt q;
    BigInt total_rank;  // q^d
    GroupPtr group;
    std::vector<FrobeniusSummand> summands;  // sorted by class coordinates
};

struct EnumOptions {
    BigInt budget = BigInt(100000000);  // max residues enumerated
    unsigned jobs = 1;
    WeilDivisor twist;  // optional divisor twist D: rounds (1/q)(D + div(u^s))
};

FrobeniusDecomposition frobenius_decompose_affine(const Cone& cone, const BigInt& p,
                                                  unsigned e, const EnumOptions& opts = {});

/// Same enumeration over the fan's ray class group. Smoothness is enforced
/// by Fan itself (the summands must be line bundles).
FrobeniusDecomposition frobenius_decompose_projective(const Fan& fan, const BigInt& p,
                                                      unsigned e, const EnumOptions& opts = {});

/// Sum of multiplicity * class over the summands.
GroupElement class_sum(const FrobeniusDecomposition& dec);

enum class Orientation { AsStated, SignFlipped };
enum class OrientationPolicy { Auto, ForceAsStated, ForceFlipped };

/// Outcome of one of the two Riemann-Roch identities, checked with the
/// rational coefficient cleared: 2*lhs - (q^d - q^{d-1})*rhs.
struct VerificationReport {
    BigInt p;
    unsigned e = 1;
    BigInt q;
    GroupElement lhs;         // 2 * class sum (under the orientation used)
    GroupElement rhs;         // (q^d - q^{d-1}) * canonical class
    GroupElement difference;  // lhs - rhs
    bool torsion_flag = false;
    bool pass = false;
    Orientation orientation_used = Orientation::AsStated;
};

/// cl(eA) = (q^d - q^{d-1})/2 * cl(omega) in Cl_Q: the difference must be
/// torsion. Under Auto the sign-flipped orientation is tried when the
/// stated one fails, and the report records the choice.
VerificationReport verify_theorem_main(const Cone& cone, const BigInt& p, unsigned e,
                                       const EnumOptions& opts = {},
                                       OrientationPolicy policy = OrientationPolicy::Auto);

/// c1(F^e_* O_X) = (q^d - q^{d-1})/2 * K_X, exactly (the class group of a
/// smooth complete toric variety is free, so no torsion slack).
VerificationReport verify_theorem_analogue(const Fan& fan, const BigInt& p, unsigned e,
                                           const EnumOptions& opts = {},
                                           OrientationPolicy policy = OrientationPolicy::Auto);

/// Degree-(d-1) Riemann-Roch component of a module class:
/// -free(cls) + (rank/2) free(canonical class), as exact rationals.
/// (Torsion information is quotiented away; only the free part is returned.)
std::vector<BigRat> tau_top(const Cone& cone, const GroupElement& m_class, const BigInt& rank);

struct ChernComparison {
    BigInt c1;                 // first Chern class of the pushforward, in degrees
    BigRat c2_from_summands;   // e_2 of the line bundle degrees
    BigRat c2_closed_form;     // closed form in K^2 and c2 of the tangent sheaf
};

/// c2 of F^e_* O on P^n, computed two ways; n >= 2.
ChernComparison chern_c2_projective_space(size_t n, const BigInt& p, unsigned e,
                                          const EnumOptions& opts = {});

}  // namespace frobkit

#endif
