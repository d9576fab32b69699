#include "spincs/action_eval.hpp"

#include <cctype>

namespace spincs {

ClosedAction closed_action(RingPtr manifold, KOClass E, SpinStructure sigma,
                           std::optional<Phase> value) {
    if (manifold->dimension() != 3)
        fail("dimension_mismatch", "actions live on 3-manifolds");
    if (!(*manifold == *E.ring) || !(*manifold == *sigma.ring))
        fail("ring_mismatch",
             "class and spin structure must live on the manifold");
    return {std::move(manifold), std::move(E), std::move(sigma),
            std::move(value)};
}

ClosedAction shift_spin(const ClosedAction& a, const CohClass& l) {
    ClosedAction out = a;
    out.sigma = spin_shift(a.sigma, l);
    if (a.value)
        out.value = *a.value * q(a.E, l, a.sigma);
    return out;
}

Phase spin_ratio(const KOClass& E, const CohClass& l,
                 const SpinStructure& sigma) {
    return q(E, l, sigma);
}

CircleSpin parse_circle_spin(const std::string& s) {
    std::string t;
    for (char c : s)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "bounding" || t == "b")
        return CircleSpin::Bounding;
    if (t == "nonbounding" || t == "nb" || t == "non-bounding")
        return CircleSpin::NonBounding;
    fail("parse_error", "circle spin structure must be bounding or "
                        "nonbounding");
}

std::string circle_spin_str(CircleSpin s) {
    return s == CircleSpin::Bounding ? "bounding" : "nonbounding";
}

Phase product_tau(int surface_w2, CircleSpin circle_spin) {
    if (surface_w2 != 0 && surface_w2 != 1)
        fail("invalid_argument", "w2 evaluation must be 0 or 1");
    if (circle_spin == CircleSpin::Bounding)
        return Phase::one();
    return Phase::sign(surface_w2); // ind2 of the twisted surface operator
}

int cobordism_detector(const KOClass& E, const CohClass& l) {
    const CohomologyRing& R = *E.ring;
    if (R.dimension() != 3)
        fail("dimension_mismatch", "the detector lives on 3-manifolds");
    if (l.degree != 1)
        fail("degree_mismatch", "expected a degree-1 class");
    if (!E.w1.is_zero())
        fail("underdetermined",
             "the detector is defined in the w1(E) = 0 regime");
    return evaluate(R, cup(R, E.w2, l));
}

bool spin_independence_check(const LevelClass& level) {
    return level.w2 == 0;
}

} // namespace spincs
