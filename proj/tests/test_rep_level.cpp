#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "spincs/rep_level.hpp"
#include "test_util.hpp"

using namespace spincs;

namespace {

VirtualRep std_minus_4() {
    return make_rep(Group::SU2, {{su2_standard(), 1}, {trivial_term(4), -1}});
}

VirtualRep id_minus_3() {
    return make_rep(Group::SO3, {{so3_vector(), 1}, {trivial_term(3), -1}});
}

// finite-difference oracle: differentiate the explicit rotation matrices of
// the representation restricted to the circle at the lattice generator, and
// evaluate -Tr(M^2) / 8 pi^2 numerically
double pairing_oracle_su2_std_minus_4() {
    const double h = 1e-6;
    const double pi = std::acos(-1.0);
    // realified standard rep: R^4 rotating with speeds +1 and -1 over the
    // loop exp(t eta0), t in [0,1]
    auto rot4 = [&](double t) {
        double c = std::cos(2 * pi * t), s = std::sin(2 * pi * t);
        std::vector<std::vector<double>> m(4, std::vector<double>(4, 0.0));
        m[0][0] = c;
        m[0][1] = -s;
        m[1][0] = s;
        m[1][1] = c;
        m[2][2] = c;
        m[2][3] = s;
        m[3][2] = -s;
        m[3][3] = c;
        return m;
    };
    auto at = rot4(h), back = rot4(-h);
    std::vector<std::vector<double>> gen(4, std::vector<double>(4, 0.0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            gen[i][j] = (at[i][j] - back[i][j]) / (2 * h);
    double tr = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            tr += gen[i][j] * gen[j][i];
    return -tr / (8 * pi * pi); // trivial summands contribute nothing
}

// double-cover endpoint oracle for w2 of an SO3 rep: walk each rotation
// plane around the full loop in the double cover with exact half-winding
// bookkeeping; the loop closes iff each accumulated lift winding is integral
int w2_lift_oracle(const VirtualRep& rho) {
    REQUIRE(rho.group == Group::SO3);
    long long sign_flips = 0;
    for (const auto& [term, mult] : rho.terms) {
        std::vector<int> weights = term.weights;
        if (term.realness == Realness::RealifiedComplex)
            for (int w : term.weights)
                weights.push_back(-w);
        for (int w : weights) {
            if (w <= 0)
                continue;
            long long speed = w / 2; // SO3-normalized rotation speed
            // lift winding = speed/2; a half-integral winding flips the sign
            Rational lift(speed, 2);
            if (!lift.is_integer())
                sign_flips += mult;
        }
    }
    return static_cast<int>(((sign_flips % 2) + 2) % 2);
}

VirtualRep random_rep(std::mt19937& rng, Group g) {
    std::uniform_int_distribution<int> nterms(1, 3), coin(0, 1), wdist(1, 4),
        npos(1, 3), mdist(1, 3), zeros(0, 2);
    std::vector<std::pair<RepTerm, long long>> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        bool realified = coin(rng) == 1;
        std::vector<int> w;
        int k = npos(rng);
        for (int i = 0; i < k; ++i) {
            int x = wdist(rng);
            if (g == Group::SO3)
                x *= 2;
            bool doubled =
                g == Group::SU2 && !realified && x % 2 != 0;
            int copies = doubled ? 2 : 1;
            for (int c = 0; c < copies; ++c) {
                w.push_back(x);
                w.push_back(-x);
            }
        }
        for (int z = zeros(rng); z > 0; --z)
            w.push_back(0);
        long long mult = mdist(rng) * (coin(rng) ? 1 : -1);
        RepTerm term = realified ? complex_term(w, g) : real_term(w, g);
        terms.push_back({term, mult});
    }
    return make_rep(g, std::move(terms));
}

} // namespace

TEST_CASE("rank anchors") {
    CHECK(rank(std_minus_4()) == 0);
    CHECK(rank(id_minus_3()) == 0);
    CHECK(rank(VirtualRep{Group::SU2, {}}) == 0);
    CHECK(rank(make_rep(Group::SU2, {{su2_standard(), 1}})) == 4);
    CHECK(rank(make_rep(Group::SO3, {{so3_vector(), 2}})) == 6);
}

TEST_CASE("pairing values and bilinearity") {
    VirtualRep rho = std_minus_4();
    CHECK(pairing(rho, 1, 1) == Rational(2));
    CHECK(pairing(id_minus_3(), 1, 1) == Rational(1));
    CHECK(pairing(VirtualRep{Group::SU2, {}}, 1, 1) == Rational(0));
    for (long long m = -3; m <= 3; ++m)
        for (long long n = -3; n <= 3; ++n) {
            CHECK(pairing(rho, m, n) ==
                  Rational(m) * Rational(n) * pairing(rho, 1, 1));
            CHECK(pairing(rho, m, n) == pairing(rho, n, m));
        }
}

TEST_CASE("pairing against the finite-difference trace oracle") {
    double numeric = pairing_oracle_su2_std_minus_4();
    CHECK(std::abs(numeric - 2.0) < 1e-4);
    Rational exact = pairing(std_minus_4(), 1, 1);
    CHECK(exact.is_integer());
    CHECK(exact.num() == std::llround(numeric));
}

TEST_CASE("integrality and additivity over a 50-rep random sweep") {
    for (Group g : {Group::SU2, Group::SO3}) {
        std::mt19937 rng(g == Group::SU2 ? 12345u : 54321u);
        for (int i = 0; i < 50; ++i) {
            VirtualRep a = random_rep(rng, g);
            VirtualRep b = random_rep(rng, g);
            CHECK(integrality_check(a));
            CHECK(pairing(direct_sum(a, b), 1, 1) ==
                  pairing(a, 1, 1) + pairing(b, 1, 1));
            CHECK(pairing(direct_sum(a, negate(b)), 1, 1) ==
                  pairing(a, 1, 1) - pairing(b, 1, 1));
        }
    }
}

TEST_CASE("w2 anchors and the double-cover lifting oracle") {
    CHECK(w2_of_rep(id_minus_3()) == 1);
    CHECK(w2_of_rep(std_minus_4()) == 0);
    CHECK(w2_of_rep(direct_sum(id_minus_3(), id_minus_3())) == 0);
    std::mt19937 rng(777u);
    for (int i = 0; i < 50; ++i) {
        VirtualRep rho = random_rep(rng, Group::SO3);
        CHECK(w2_of_rep(rho) == w2_lift_oracle(rho));
    }
}

TEST_CASE("lambda anchors") {
    LevelClass su2_gen = lambda(std_minus_4());
    CHECK(su2_gen.group == Group::SU2);
    CHECK(su2_gen.coeff == 1);
    CHECK(su2_gen.p1 == -2);
    CHECK(su2_gen.w2 == 0);

    LevelClass so3_gen = lambda(id_minus_3());
    CHECK(so3_gen.group == Group::SO3);
    CHECK(so3_gen.coeff == 1);
    CHECK(so3_gen.p1 == 1);
    CHECK(so3_gen.w2 == 1);

    VirtualRep twice = direct_sum(std_minus_4(), std_minus_4());
    CHECK(lambda(twice).coeff == 2 * su2_gen.coeff);
}

TEST_CASE("lambda is a homomorphism over 50 random pairs") {
    for (Group g : {Group::SU2, Group::SO3}) {
        std::mt19937 rng(g == Group::SU2 ? 999u : 888u);
        for (int i = 0; i < 50; ++i) {
            VirtualRep a = random_rep(rng, g);
            VirtualRep b = random_rep(rng, g);
            CHECK(lambda(direct_sum(a, b)).coeff ==
                  lambda(a).coeff + lambda(b).coeff);
        }
    }
}

TEST_CASE("pullback along the double cover") {
    CHECK(pullback_beta(level_from_coeff(Group::SO3, 1)) ==
          level_from_coeff(Group::SU2, 2));
    CHECK(pullback_beta(level_from_coeff(Group::SO3, 0)) ==
          level_from_coeff(Group::SU2, 0));
    CHECK(pullback_beta(level_from_coeff(Group::SO3, 3)).coeff == 6);
    // on the H^4 coordinate the pullback is multiplication by 4 up to the
    // generator orientation
    for (long long k = -10; k <= 10; ++k) {
        LevelClass x = level_from_coeff(Group::SO3, k);
        CHECK(std::abs(pullback_beta(x).p1) == 4 * std::abs(x.p1));
    }
    CHECK(error_code_of([] {
              pullback_beta(level_from_coeff(Group::SU2, 1));
          }) == "group_mismatch");
}

TEST_CASE("p1 of the integral image is doubling") {
    CHECK(p1_of_integral_image(1, Group::SU2) == 2);
    CHECK(p1_of_integral_image(0, Group::SO3) == 0);
    CHECK(p1_of_integral_image(-5, Group::SU2) == -10);
}

TEST_CASE("p1 is linear in the level: p1(n*1') = n * p1(1')") {
    long long p1_gen = level_from_coeff(Group::SU2, 1).p1;
    CHECK(p1_gen == -2);
    for (long long n = -10; n <= 10; ++n)
        CHECK(level_from_coeff(Group::SU2, n).p1 == n * p1_gen);
}

TEST_CASE("(p1, w2) determines the coefficient, -10..10") {
    for (Group g : {Group::SU2, Group::SO3})
        for (long long k = -10; k <= 10; ++k) {
            LevelClass x = level_from_coeff(g, k);
            CHECK(level_from_p1_w2(g, x.p1, x.w2) == x);
        }
    CHECK(error_code_of([] { level_from_p1_w2(Group::SO3, 1, 0); }) ==
          "level_consistency");
    CHECK(error_code_of([] { level_from_p1_w2(Group::SU2, 1, 0); }) ==
          "level_consistency");
}

TEST_CASE("malformed representations are rejected") {
    CHECK(error_code_of([] { complex_term({1}, Group::SU2); }) ==
          "malformed_rep");
    CHECK(error_code_of([] { real_term({1, -1}, Group::SU2); }) ==
          "malformed_rep");
    CHECK(real_term({1, 1, -1, -1}, Group::SU2).weights.size() == 4);
    CHECK(error_code_of([] { real_term({-1, 0, 1}, Group::SO3); }) ==
          "malformed_rep");
    CHECK(error_code_of([] { direct_sum(std_minus_4(), id_minus_3()); }) ==
          "group_mismatch");
}

TEST_CASE("rep expression grammar") {
    VirtualRep a = parse_rep("su2: std - 4");
    CHECK(rank(a) == 0);
    CHECK(lambda(a).coeff == 1);

    VirtualRep b = parse_rep("so3: 3*(id - 3)");
    CHECK(rank(b) == 0);
    CHECK(lambda(b).coeff == 3);

    VirtualRep c = parse_rep(Group::SU2, "2*std - 8");
    CHECK(lambda(c).coeff == 2);

    VirtualRep d = parse_rep("su2: cplx[1,-1] - 4");
    CHECK(lambda(d) == lambda(a));

    VirtualRep e = parse_rep("so3: real[-2,0,2] - 3");
    CHECK(lambda(e) == lambda(id_minus_3()));

    CHECK(rank(parse_rep("su2: -4 + std")) == 0);

    CHECK(error_code_of([] { parse_rep("su2: id"); }) == "parse_error");
    CHECK(error_code_of([] { parse_rep("so3: std"); }) == "parse_error");
    CHECK(error_code_of([] { parse_rep("std - 4"); }) == "parse_error");
    CHECK(error_code_of([] { parse_rep("su2: std -"); }) == "parse_error");
    CHECK(error_code_of([] { parse_rep("e8: std"); }) == "parse_error");
}
