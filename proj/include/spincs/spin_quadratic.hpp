#pragma once

#include <vector>

#include "spincs/ko.hpp"
#include "spincs/rational.hpp"

namespace spincs {

// A spin structure, recorded as an offset in H^1 relative to the ring's
// named base spin structure (spin(X) is a torsor over H^1(X; Z/2)).
struct SpinStructure {
    RingPtr ring;
    CohClass offset;

    bool operator==(const SpinStructure& o) const {
        return offset == o.offset && *ring == *o.ring;
    }
};

SpinStructure base_spin(const RingPtr& ring);
SpinStructure spin_shift(const SpinStructure& sigma, const CohClass& l);
std::string spin_str(const SpinStructure& sigma);

// Spin-structure dependence of the action in the determined regime
// w1(E) = 0: the value is (-1)^{<w2(E) ^ l, [X]>}, independent of sigma.
// For w1(E) != 0 this is underdetermined; use q_general.
Phase q(const KOClass& E, const CohClass& l, const SpinStructure& sigma);

// The bilinear form refined by q: (-1)^{<w1(E) ^ l1 ^ l2, [X]>}.
Phase bform(const KOClass& E, const CohClass& l1, const CohClass& l2);

// Z/4-valued quadratic refinement of bform(E, ., .). The theory pins the
// w1 = 0 part but not the values on the (line - 1) component, so the caller
// supplies those as `linear_part`: one Z/4 value per H^1 basis element,
// subject to the parity constraint 2*linear_part[i] = B_E(e_i, e_i). The
// refinement identity q(l1+l2) = q(l1) q(l2) B_E(l1,l2) then holds by
// construction. When w1(E) = 0 the line component is the zero class and its
// factor is 1; the linear part is validated but does not contribute.
Phase q_general(const KOClass& E, const CohClass& l,
                const SpinStructure& sigma,
                const std::vector<int>& linear_part);

} // namespace spincs
