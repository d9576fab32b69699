#include "spincs/spin_quadratic.hpp"

namespace spincs {

namespace {

void require_compatible(const KOClass& E, const SpinStructure& sigma) {
    if (E.ring != sigma.ring && !(*E.ring == *sigma.ring))
        fail("ring_mismatch", "class and spin structure over different rings");
}

void require_degree1(const CohomologyRing& R, const CohClass& l) {
    if (l.degree != 1)
        fail("degree_mismatch", "expected a degree-1 class");
    R.make_class(1, l.coords);
}

} // namespace

SpinStructure base_spin(const RingPtr& ring) {
    return {ring, ring->zero_class(1)};
}

SpinStructure spin_shift(const SpinStructure& sigma, const CohClass& l) {
    require_degree1(*sigma.ring, l);
    return {sigma.ring, sigma.ring->make_class(1, sigma.offset.coords +
                                                      l.coords)};
}

std::string spin_str(const SpinStructure& sigma) {
    if (sigma.offset.is_zero())
        return sigma.ring->base_spin_name();
    return sigma.ring->base_spin_name() + " + " +
           class_str(*sigma.ring, sigma.offset);
}

Phase q(const KOClass& E, const CohClass& l, const SpinStructure& sigma) {
    require_compatible(E, sigma);
    const CohomologyRing& R = *E.ring;
    require_degree1(R, l);
    if (!E.w1.is_zero())
        fail("underdetermined",
             "q is only determined for w1(E) = 0; use q_general with an "
             "explicit linear part");
    if (E.w2.is_zero())
        return Phase::one();
    return Phase::sign(evaluate(R, cup(R, E.w2, l)));
}

Phase bform(const KOClass& E, const CohClass& l1, const CohClass& l2) {
    const CohomologyRing& R = *E.ring;
    require_degree1(R, l1);
    require_degree1(R, l2);
    return Phase::sign(evaluate(R, cup(R, cup(R, E.w1, l1), l2)));
}

Phase q_general(const KOClass& E, const CohClass& l,
                const SpinStructure& sigma,
                const std::vector<int>& linear_part) {
    require_compatible(E, sigma);
    const CohomologyRing& R = *E.ring;
    require_degree1(R, l);

    std::size_t b1 = static_cast<std::size_t>(R.betti()[1]);
    if (linear_part.size() != b1)
        fail("inconsistent_linear_part",
             "linear part must list one Z/4 value per H^1 basis element");

    // beta(u, v) = 2 * <w1(E) ^ u ^ v> in Z/4 units
    auto beta = [&](std::size_t i, std::size_t j) {
        return 2 * evaluate(R, cup(R, cup(R, E.w1, R.basis_class(1, i)),
                                   R.basis_class(1, j)));
    };
    // torsor consistency: a refinement forces 2 q(e_i) = beta(e_i, e_i)
    for (std::size_t i = 0; i < b1; ++i) {
        int v = ((linear_part[i] % 4) + 4) % 4;
        if ((2 * v) % 4 != beta(i, i))
            fail("inconsistent_linear_part",
                 "value at basis element " + std::to_string(i) +
                     " violates the Z/4 parity forced by B_E");
    }

    int k = 0; // quarter turns
    // the linear part lives on the (line - 1) component only; when
    // w1(E) = 0 that component is the zero class and its q is forced to 1
    if (!E.w1.is_zero()) {
        for (std::size_t i = 0; i < b1; ++i) {
            if (!l.coords[i])
                continue;
            k += linear_part[i];
            for (std::size_t j = i + 1; j < b1; ++j)
                if (l.coords[j])
                    k += beta(i, j);
        }
    }
    k += 2 * evaluate(R, cup(R, E.w2, l));
    return Phase::of(((k % 4) + 4) % 4, 4);
}

} // namespace spincs
