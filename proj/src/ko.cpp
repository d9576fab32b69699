#include "spincs/ko.hpp"

namespace spincs {

namespace {

void require_3manifold(const CohomologyRing& ring) {
    if (ring.dimension() != 3)
        fail("dimension_mismatch",
             "KO classification applies to 3-manifold rings only");
}

void require_same_ring(const KOClass& x, const KOClass& y) {
    if (x.ring != y.ring && !(*x.ring == *y.ring))
        fail("ring_mismatch", "classes live over different rings");
}

} // namespace

KOClass ko_class(RingPtr ring, CohClass w1, CohClass w2) {
    require_3manifold(*ring);
    if (w1.degree != 1 || w2.degree != 2)
        fail("degree_mismatch", "KO data must be (degree 1, degree 2)");
    // run the coordinate-length checks
    ring->make_class(1, w1.coords);
    ring->make_class(2, w2.coords);
    return {std::move(ring), std::move(w1), std::move(w2)};
}

KOClass ko_zero(const RingPtr& ring) {
    require_3manifold(*ring);
    return {ring, ring->zero_class(1), ring->zero_class(2)};
}

KOClass add(const KOClass& x, const KOClass& y) {
    require_same_ring(x, y);
    const CohomologyRing& R = *x.ring;
    CohClass w1 = R.make_class(1, x.w1.coords + y.w1.coords);
    CohClass w2 = R.make_class(
        2, cup(R, x.w1, y.w1).coords + x.w2.coords + y.w2.coords);
    return {x.ring, std::move(w1), std::move(w2)};
}

KOClass neg(const KOClass& x) {
    const CohomologyRing& R = *x.ring;
    CohClass w2 = R.make_class(2, x.w2.coords + cup(R, x.w1, x.w1).coords);
    return {x.ring, x.w1, std::move(w2)};
}

KOClass from_bundle_pair(const RingPtr& ring, const CohClass& w1E,
                         const CohClass& w2E, const CohClass& w1F,
                         const CohClass& w2F) {
    require_3manifold(*ring);
    if (w1E.degree != 1 || w1F.degree != 1 || w2E.degree != 2 ||
        w2F.degree != 2)
        fail("degree_mismatch", "bundle data must be (degree 1, degree 2)");
    const CohomologyRing& R = *ring;
    CohClass w1 = R.make_class(1, w1E.coords + w1F.coords);
    CohClass w2 = R.make_class(2, w2E.coords + w2F.coords +
                                      cup(R, w1E, w1F).coords +
                                      cup(R, w1F, w1F).coords);
    return {ring, std::move(w1), std::move(w2)};
}

KOClass tensor_line(const KOClass& x, const CohClass& l0) {
    if (l0.degree != 1)
        fail("degree_mismatch", "can only tensor by a degree-1 line class");
    const CohomologyRing& R = *x.ring;
    R.make_class(1, l0.coords);
    if (x.w1.is_zero())
        return x; // w1(E (x) l0) = 0 and w2(E (x) l0) = w2(E)

    // x = (line(w1) - 1) + rest with rest = (0, w2); twisting the line part
    // gives (line(w1 + l0) - 1) - (line(l0) - 1) and the rest is unchanged.
    CohClass z2 = R.zero_class(2);
    KOClass line_twisted = from_bundle_pair(
        x.ring, R.make_class(1, x.w1.coords + l0.coords), z2, l0, z2);
    KOClass rest = {x.ring, R.zero_class(1), x.w2};
    return add(line_twisted, rest);
}

std::vector<KOClass> all_ko_classes(const RingPtr& ring) {
    require_3manifold(*ring);
    std::vector<KOClass> out;
    for (const CohClass& a : all_classes(*ring, 1))
        for (const CohClass& b : all_classes(*ring, 2))
            out.push_back({ring, a, b});
    return out;
}

} // namespace spincs
