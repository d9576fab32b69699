#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spincs/rational.hpp"

namespace spincs {

enum class Group { SU2, SO3 };

std::string group_str(Group g);
Group parse_group(const std::string& s);

enum class Realness { AlreadyReal, RealifiedComplex };

// One irreducible (or more generally one honest representation) term: its
// weight multiset on the standard circle subgroup, in units where the SU2
// standard representation has weights +1/-1, plus a realness tag. Already
// real terms list the weights of the complexification; realified terms list
// the weights of the underlying complex representation.
struct RepTerm {
    Realness realness = Realness::AlreadyReal;
    std::vector<int> weights; // sorted ascending

    bool operator==(const RepTerm&) const = default;
};

// Validated constructors. Weight multisets must be symmetric under negation
// (Weyl invariance); SO3 weights must be even in SU2 units; already-real SU2
// terms must carry each odd weight with even multiplicity (quaternionic
// strings realify in pairs).
RepTerm real_term(std::vector<int> weights, Group group);
RepTerm complex_term(std::vector<int> weights, Group group);

RepTerm su2_standard(); // realified C^2, weights {-1, 1}
RepTerm so3_vector();   // already real, weights {-2, 0, 2}
RepTerm trivial_term(int rank);

// Signed multiset of terms: a virtual real representation.
struct VirtualRep {
    Group group = Group::SU2;
    std::vector<std::pair<RepTerm, long long>> terms;
};

VirtualRep make_rep(Group group,
                    std::vector<std::pair<RepTerm, long long>> terms);
VirtualRep direct_sum(const VirtualRep& a, const VirtualRep& b);
VirtualRep negate(const VirtualRep& a);
VirtualRep scale(const VirtualRep& a, long long k);

// Signed real dimension.
long long rank(const VirtualRep& rho);

// The Ad-invariant form -Tr(rho(eta1) rho(eta2)) / 8 pi^2 evaluated on
// eta_i = m, n times the generator of the integer lattice {eta : exp(eta)=1}
// of the standard circle subgroup. Z-valued on every validated rep.
Rational pairing(const VirtualRep& rho, long long m, long long n);
bool integrality_check(const VirtualRep& rho);

// Second Stiefel-Whitney class of the induced map BG -> BSO: always 0 for
// SU2; for SO3 the sum over terms of (positive circle weights in SO3 units)
// mod 2.
int w2_of_rep(const VirtualRep& rho);

// An element of the degree-4 level group of BG, recorded by its integer
// coordinate against the generator (1' for SU2, 1 for SO3) together with its
// (p1, w2) image. p1 is stored against the group's H^4 generator: c2 for
// SU2 (so p1(1') = -2), the Pontryagin generator for SO3 (so p1(1) = 1).
struct LevelClass {
    Group group = Group::SU2;
    long long coeff = 0;
    long long p1 = 0;
    int w2 = 0;

    bool operator==(const LevelClass&) const = default;
};

LevelClass level_from_coeff(Group group, long long k);
LevelClass lambda(const VirtualRep& rho);
LevelClass level_from_p1_w2(Group group, long long p1, int w2);

// Pullback along the double cover SU2 -> SO3: k * 1 -> 2k * 1'.
LevelClass pullback_beta(const LevelClass& x);

// The composite H^4(BG) -> E^4(BG) -> H^4(BG) is multiplication by 2.
long long p1_of_integral_image(long long k, Group group);

// Rep expression grammar ("su2: std - 4", "so3: 3*(id - 3)"). Terms: std,
// id, bare integers (trivial of that rank), real[w...], cplx[w...],
// integer * factor, parenthesised subexpressions.
VirtualRep parse_rep(const std::string& text);
VirtualRep parse_rep(Group group, const std::string& expr);

} // namespace spincs
