#pragma once

#include <vector>

#include "spincs/cohomology.hpp"

namespace spincs {

// A rank-zero real virtual bundle class on a closed 3-manifold, recorded by
// its Stiefel-Whitney data (w1, w2). The set of such classes is the group
// H^1 x H^2 under the twisted product
//   (a1, b1) . (a2, b2) = (a1 + a2, a1 ^ a2 + b1 + b2).
struct KOClass {
    RingPtr ring;
    CohClass w1;
    CohClass w2;

    bool operator==(const KOClass& o) const {
        return w1 == o.w1 && w2 == o.w2 && *ring == *o.ring;
    }
    bool operator!=(const KOClass& o) const { return !(*this == o); }
};

KOClass ko_class(RingPtr ring, CohClass w1, CohClass w2);
KOClass ko_zero(const RingPtr& ring);

KOClass add(const KOClass& x, const KOClass& y);
KOClass neg(const KOClass& x);

// Class of the virtual difference E - F from the Stiefel-Whitney data of the
// two bundles: (w1E + w1F, w2E + w2F + w1E ^ w1F + w1F ^ w1F).
KOClass from_bundle_pair(const RingPtr& ring, const CohClass& w1E,
                         const CohClass& w2E, const CohClass& w1F,
                         const CohClass& w2F);

// Tensor by the flat real line bundle with w1 = l0. For w1(x) = 0 the class
// is unchanged; in general x splits as (line - 1) + (w1 = 0 remainder) and
// each part is twisted by the Whitney formula for line bundles.
KOClass tensor_line(const KOClass& x, const CohClass& l0);

// Every class of the ring, ordered by (w1 mask, w2 mask).
std::vector<KOClass> all_ko_classes(const RingPtr& ring);

} // namespace spincs
