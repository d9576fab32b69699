#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "spincs/spin_quadratic.hpp"
#include "test_util.hpp"

using namespace spincs;

namespace {

std::vector<std::vector<int>> linear_part_grid() {
    // on T^3 every basis square is zero, so all values must be even
    return {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2},
            {2, 2, 0}, {2, 0, 2}, {0, 2, 2}, {2, 2, 2}};
}

RingPtr rp3() {
    std::ifstream in(std::string(SPINCS_DATA_DIR) + "/rings/rp3.json");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_ring(ss.str());
}

} // namespace

TEST_CASE("q on the 3-torus") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    KOClass E = ko_class(t3, t3->zero_class(1), parse_class(*t3, "l1^l2", 2));
    CHECK(q(E, parse_class(*t3, "l3", 1), sigma) == Phase::minus_one());
    CHECK(q(E, parse_class(*t3, "l1", 1), sigma) == Phase::one());
    CHECK(q(E, parse_class(*t3, "l2", 1), sigma) == Phase::one());
    for (const CohClass& l : all_classes(*t3, 1))
        CHECK(q(ko_zero(t3), l, sigma) == Phase::one());
}

TEST_CASE("q refuses the underdetermined regime") {
    RingPtr t3 = torus3();
    KOClass E = ko_class(t3, parse_class(*t3, "l1", 1), t3->zero_class(2));
    CHECK(error_code_of([&] {
              q(E, parse_class(*t3, "l2", 1), base_spin(t3));
          }) == "underdetermined");
}

TEST_CASE("q is linear in E and in l, and spin-independent (w1 = 0)") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    std::vector<CohClass> h1 = all_classes(*t3, 1);
    std::vector<CohClass> h2 = all_classes(*t3, 2);

    for (const CohClass& b : h2)
        for (const CohClass& b2 : h2) {
            KOClass E = ko_class(t3, t3->zero_class(1), b);
            KOClass E2 = ko_class(t3, t3->zero_class(1), b2);
            for (const CohClass& l : h1)
                CHECK(q(add(E, E2), l, sigma) ==
                      q(E, l, sigma) * q(E2, l, sigma));
        }

    for (const CohClass& b : h2) {
        KOClass E = ko_class(t3, t3->zero_class(1), b);
        for (const CohClass& l1 : h1)
            for (const CohClass& l2 : h1) {
                CohClass sum = t3->make_class(1, l1.coords + l2.coords);
                CHECK(q(E, sum, sigma) ==
                      q(E, l1, sigma) * q(E, l2, sigma));
            }
        for (const CohClass& l : h1)
            for (const CohClass& off : h1)
                CHECK(q(E, l, spin_shift(sigma, off)) == q(E, l, sigma));
    }
}

TEST_CASE("bform values") {
    RingPtr t3 = torus3();
    KOClass E = ko_class(t3, parse_class(*t3, "l1", 1), t3->zero_class(2));
    CHECK(bform(E, parse_class(*t3, "l2", 1), parse_class(*t3, "l3", 1)) ==
          Phase::minus_one());
    CHECK(bform(E, t3->zero_class(1), parse_class(*t3, "l3", 1)) ==
          Phase::one());

    for (const CohClass& b : all_classes(*t3, 2)) {
        KOClass F = ko_class(t3, t3->zero_class(1), b);
        for (const CohClass& u : all_classes(*t3, 1))
            for (const CohClass& v : all_classes(*t3, 1))
                CHECK(bform(F, u, v) == Phase::one()); // trivial if w1 = 0
    }
}

TEST_CASE("bform is symmetric and bilinear") {
    RingPtr t3 = torus3();
    std::vector<CohClass> h1 = all_classes(*t3, 1);
    for (const CohClass& a : h1) {
        KOClass E = ko_class(t3, a, t3->zero_class(2));
        for (const CohClass& u : h1)
            for (const CohClass& v : h1) {
                CHECK(bform(E, u, v) == bform(E, v, u));
                for (const CohClass& w : h1) {
                    CohClass uv = t3->make_class(1, u.coords + v.coords);
                    CHECK(bform(E, uv, w) ==
                          bform(E, u, w) * bform(E, v, w));
                }
            }
    }
}

TEST_CASE("q_general: degenerate case agrees with q") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    std::vector<int> zero_part = {0, 0, 0};
    for (const CohClass& b : all_classes(*t3, 2)) {
        KOClass E = ko_class(t3, t3->zero_class(1), b);
        for (const CohClass& l : all_classes(*t3, 1))
            CHECK(q_general(E, l, sigma, zero_part) == q(E, l, sigma));
    }
}

TEST_CASE("q_general: refinement identity across the linear-part grid") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    std::vector<CohClass> h1 = all_classes(*t3, 1);
    for (const KOClass& E : all_ko_classes(t3))
        for (const auto& lp : linear_part_grid())
            for (const CohClass& l1 : h1)
                for (const CohClass& l2 : h1) {
                    CohClass prod = t3->make_class(1, l1.coords + l2.coords);
                    CHECK(q_general(E, prod, sigma, lp) ==
                          q_general(E, l1, sigma, lp) *
                              q_general(E, l2, sigma, lp) *
                              bform(E, l1, l2));
                }
}

TEST_CASE("q_general: decomposed and undecomposed inputs agree") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    std::vector<int> lp = {2, 0, 2};
    for (const CohClass& a : all_classes(*t3, 1))
        for (const CohClass& b : all_classes(*t3, 2)) {
            KOClass whole = ko_class(t3, a, b);
            KOClass line_part = ko_class(t3, a, t3->zero_class(2));
            KOClass rest = ko_class(t3, t3->zero_class(1), b);
            CHECK(whole == add(line_part, rest));
            for (const CohClass& l : all_classes(*t3, 1))
                CHECK(q_general(whole, l, sigma, lp) ==
                      q_general(line_part, l, sigma, lp) *
                          q_general(rest, l, sigma, lp));
        }
}

TEST_CASE("q_general rejects an inconsistent linear part") {
    RingPtr t3 = torus3();
    KOClass E = ko_class(t3, parse_class(*t3, "l1", 1), t3->zero_class(2));
    // on T^3 all squares vanish, so odd values violate the torsor parity
    CHECK(error_code_of([&] {
              q_general(E, parse_class(*t3, "l2", 1), base_spin(t3),
                        {1, 0, 0});
          }) == "inconsistent_linear_part");
    CHECK(error_code_of([&] {
              q_general(E, parse_class(*t3, "l2", 1), base_spin(t3),
                        {0, 0});
          }) == "inconsistent_linear_part");
}

TEST_CASE("projective space: genuinely Z/4-valued refinements") {
    // B_E(a, a) = -1 when w1(E) = a, so the linear part must be odd and
    // q_general takes values in the 4th roots of unity
    RingPtr p = rp3();
    SpinStructure sigma = base_spin(p);
    CohClass a = parse_class(*p, "a", 1);
    KOClass E = ko_class(p, a, p->zero_class(2));

    CHECK(bform(E, a, a) == Phase::minus_one());
    CHECK(error_code_of([&] { q_general(E, a, sigma, {0}); }) ==
          "inconsistent_linear_part");

    for (int lp : {1, 3}) {
        Phase qa = q_general(E, a, sigma, {lp});
        CHECK(qa == Phase::of(lp, 4)); // i or -i
        // the refinement identity pins q(a)^2 = B_E(a, a)^(-1)... and the
        // identity itself holds on all pairs
        for (const CohClass& l1 : all_classes(*p, 1))
            for (const CohClass& l2 : all_classes(*p, 1)) {
                CohClass prod = p->make_class(1, l1.coords + l2.coords);
                CHECK(q_general(E, prod, sigma, {lp}) ==
                      q_general(E, l1, sigma, {lp}) *
                          q_general(E, l2, sigma, {lp}) *
                          bform(E, l1, l2));
            }
        CHECK(qa * qa * bform(E, a, a) == Phase::one()); // q(0) = 1
    }
}

TEST_CASE("cross-ring inputs are rejected") {
    RingPtr t3 = torus3();
    RingPtr m = s1_x_s2();
    KOClass E = ko_zero(t3);
    CHECK(error_code_of([&] {
              q(E, t3->zero_class(1), base_spin(m));
          }) == "ring_mismatch");
    CHECK(error_code_of([&] {
              q_general(E, t3->zero_class(1), base_spin(m), {0, 0, 0});
          }) == "ring_mismatch");
}

TEST_CASE("spin_shift torsor") {
    RingPtr t3 = torus3();
    SpinStructure sigma = base_spin(t3);
    CohClass l1 = parse_class(*t3, "l1", 1);
    CohClass l2 = parse_class(*t3, "l2", 1);
    CHECK(spin_shift(sigma, t3->zero_class(1)) == sigma);
    CHECK(spin_shift(spin_shift(sigma, l1), l1) == sigma);
    CHECK(spin_shift(spin_shift(sigma, l1), l2) ==
          spin_shift(sigma, t3->make_class(1, l1.coords + l2.coords)));
    CHECK(spin_str(sigma) == "all-bounding");
    CHECK(spin_str(spin_shift(sigma, l1)) == "all-bounding + l1");
}
