#pragma once

#include <array>
#include <string>
#include <vector>

#include "spincs/rational.hpp"
#include "spincs/rep_level.hpp"

namespace spincs {

// Finitely presented group: generator names plus relator words. A word is a
// list of letters, letter +-(i+1) meaning generator i or its inverse.
struct FPGroup {
    std::string name;
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;
};

FPGroup free_group(int n);
FPGroup z_power(int n); // pi_1 of the n-torus
FPGroup surface_fp(int genus);
FPGroup named_pi1(const std::string& name); // "Z2", "Z3", "free1", "surface2"

// Finite group given by its multiplication table. Group axioms are checked
// at construction, so a live value is always a group.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<std::string> names,
                                  std::string name = "custom");

    int order() const { return static_cast<int>(table_.size()); }
    int mult(int a, int b) const { return table_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    const std::string& element_name(int i) const { return names_[i]; }
    const std::string& name() const { return name_; }

  private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::vector<std::string> names_;
    std::string name_;
};

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric3();
FiniteGroup quaternion8();
FiniteGroup dihedral4();
FiniteGroup named_group(const std::string& name); // "Z/2", "S3", "Q8", "D4"

// Group-table document: JSON {"order": n, "table": [row-major], "names": [..]}
FiniteGroup group_from_document(const std::string& document);
std::string group_document(const FiniteGroup& g);

// One point of the moduli stack: a conjugation orbit of relator-satisfying
// generator images, kept together with its stabilizer subgroup (the stack
// datum). representative is the lexicographically minimal tuple.
struct GaugeClass {
    std::vector<int> representative;
    long long orbit_size = 0;
    std::vector<int> stabilizer;
};

// Complete list of conjugation orbits of Hom(pi1, G), deterministic order
// (ascending representative). Fails with budget_exceeded if |G|^#generators
// exceeds the budget.
std::vector<GaugeClass> enumerate_moduli(const FPGroup& pi1,
                                         const FiniteGroup& G,
                                         long long budget = 10000000);

long long stabilizer_pi0_report(const GaugeClass& cls);

// dim of the smooth stratum: -dim G * chi(surface) + 2 dim of the stabilizer.
long long dim_smooth(long long genus, long long dim_g, long long dim_stab);

// su2 modeled as Q^3 with the bracket [e1,e2] = e3 (cyclically); vectors are
// in lattice-normalized units so pairings stay rational.
using LieVec = std::array<Rational, 3>;

LieVec lie_bracket(const LieVec& a, const LieVec& b);
bool lie_is_zero(const LieVec& a);

// The rho-pairing extended Ad-invariantly: <x, y>_rho = (x . y) pairing(rho).
Rational lie_pairing(const VirtualRep& rho, const LieVec& x, const LieVec& y);

// A constant connection on a torus: one Lie algebra component per direction.
struct ConstantConnection {
    std::vector<LieVec> components;
};

// dx^dy curvature coefficient on T^2: the bracket of the two components.
LieVec curvature(const ConstantConnection& B);

// Moment of the gauge action at B against the infinitesimal transformation
// zeta, unit-volume T^2 normalization.
Rational moment(const ConstantConnection& B, const LieVec& zeta,
                const VirtualRep& rho);

// Tangent vector to the space of constant connections on T^2.
struct TangentPair {
    LieVec dx{};
    LieVec dy{};
};

// Symplectic form omega(A1, A2) = <A1dx, A2dy> - <A1dy, A2dx>.
Rational symplectic(const TangentPair& a1, const TangentPair& a2,
                    const VirtualRep& rho);

// Euler-Lagrange criterion: the variation vanishes for every tangent
// direction iff the curvature does. Requires a nondegenerate pairing.
bool el_critical_test(const ConstantConnection& B, const VirtualRep& rho);

} // namespace spincs
