#pragma once

#include <optional>

#include "spincs/rep_level.hpp"
#include "spincs/spin_quadratic.hpp"

namespace spincs {

// The action phase of a closed spun 3-manifold with a rank-zero twist. The
// absolute value is analytic data this library never fabricates: it is
// either supplied exactly or left unknown (nullopt). Ratios across spin
// shifts are always computable and equal q.
struct ClosedAction {
    RingPtr manifold;
    KOClass E;
    SpinStructure sigma;
    std::optional<Phase> value;
};

ClosedAction closed_action(RingPtr manifold, KOClass E, SpinStructure sigma,
                           std::optional<Phase> value = std::nullopt);

// The same action evaluated at sigma + l; the value picks up the factor
// q(E, l, sigma), or stays unknown if it started unknown.
ClosedAction shift_spin(const ClosedAction& a, const CohClass& l);

// Ratio of action phases under the spin-structure shift by l: the full
// spin dependence of the action in the determined regime w1(E) = 0.
Phase spin_ratio(const KOClass& E, const CohClass& l,
                 const SpinStructure& sigma);

enum class CircleSpin { Bounding, NonBounding };

CircleSpin parse_circle_spin(const std::string& s);
std::string circle_spin_str(CircleSpin s);

// Action phase of T^2 x S^1 with a flat rank-zero twist of the given w2
// evaluation on the surface and a constant-loop family: +1 over the bounding
// circle, (-1)^{ind2} = (-1)^{w2} over the non-bounding one.
Phase product_tau(int surface_w2, CircleSpin circle_spin);

// The Z/2 spin-cobordism obstruction <w2(E) ^ l, [X]>; value 1 means the
// (manifold, class, line) structure does not bound.
int cobordism_detector(const KOClass& E, const CohClass& l);

// True iff the action at this level cannot see the spin structure (its w2
// image vanishes); every spin ratio is then +1.
bool spin_independence_check(const LevelClass& level);

} // namespace spincs
