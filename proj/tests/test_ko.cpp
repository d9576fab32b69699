#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <vector>

#include "spincs/ko.hpp"
#include "test_util.hpp"

using namespace spincs;

namespace {

RingPtr rp3() {
    std::ifstream in(std::string(SPINCS_DATA_DIR) + "/rings/rp3.json");
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_ring(ss.str());
}

} // namespace

namespace {

// test-side bundle model: a sum of flat real line bundles, one H^1 class per
// line. Whitney-sum Stiefel-Whitney arithmetic gives (w1, w2).
struct LineSum {
    std::vector<CohClass> lines;

    CohClass w1(const CohomologyRing& R) const {
        CohClass s = R.zero_class(1);
        for (const CohClass& l : lines)
            s.coords += l.coords;
        return s;
    }
    CohClass w2(const CohomologyRing& R) const {
        CohClass s = R.zero_class(2);
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j)
                s.coords += cup(R, lines[i], lines[j]).coords;
        return s;
    }
    LineSum twisted(const CohomologyRing& R, const CohClass& l0) const {
        LineSum t;
        for (const CohClass& l : lines)
            t.lines.push_back(R.make_class(1, l.coords + l0.coords));
        return t;
    }
};

KOClass class_of(const RingPtr& r, const LineSum& E, const LineSum& F) {
    return from_bundle_pair(r, E.w1(*r), E.w2(*r), F.w1(*r), F.w2(*r));
}

} // namespace

TEST_CASE("twisted group law examples") {
    RingPtr t3 = torus3();
    CohClass l1 = parse_class(*t3, "l1", 1);
    CohClass l2 = parse_class(*t3, "l2", 1);
    CohClass z2 = t3->zero_class(2);

    KOClass x = ko_class(t3, l1, z2);
    KOClass y = ko_class(t3, l2, z2);
    KOClass sum = add(x, y);
    CHECK(sum.w1 == parse_class(*t3, "l1+l2", 1));
    CHECK(sum.w2 == cup(*t3, l1, l2));

    CHECK(add(ko_zero(t3), x) == x);

    // (l1, b) + (l1, b + l1^l1) = 0 for every b
    for (const CohClass& b : all_classes(*t3, 2)) {
        KOClass u = ko_class(t3, l1, b);
        KOClass v = ko_class(
            t3, l1, t3->make_class(2, b.coords + cup(*t3, l1, l1).coords));
        CHECK(add(u, v) == ko_zero(t3));
    }
}

TEST_CASE("neg examples") {
    RingPtr t3 = torus3();
    CohClass l1 = parse_class(*t3, "l1", 1);
    for (const CohClass& b : all_classes(*t3, 2)) {
        KOClass x = ko_class(t3, t3->zero_class(1), b);
        CHECK(neg(x) == x); // 2-torsion when w1 = 0
    }
    KOClass line = ko_class(t3, l1, t3->zero_class(2));
    CHECK(neg(line) == line); // l1 ^ l1 = 0 on T^3
    for (const KOClass& x : all_ko_classes(t3))
        CHECK(add(x, neg(x)) == ko_zero(t3));
}

TEST_CASE("group axioms hold exhaustively on T^3 and S^1 x S^2") {
    for (const RingPtr& r : {torus3(), s1_x_s2()}) {
        std::vector<KOClass> all = all_ko_classes(r);
        KOClass zero = ko_zero(r);
        for (const KOClass& x : all) {
            CHECK(add(zero, x) == x);
            CHECK(add(x, zero) == x);
            CHECK(add(x, neg(x)) == zero);
            // order divides 4: 2x = (0, w1^w1), 4x = 0
            KOClass twice = add(x, x);
            CHECK(twice.w1.is_zero());
            CHECK(twice.w2 == cup(*r, x.w1, x.w1));
            CHECK(add(twice, twice) == zero);
        }
        for (const KOClass& x : all)
            for (const KOClass& y : all)
                for (const KOClass& z : all)
                    CHECK(add(add(x, y), z) == add(x, add(y, z)));
    }
}

TEST_CASE("ring mismatch is rejected") {
    CHECK(error_code_of(
              [&] { add(ko_zero(torus3()), ko_zero(s1_x_s2())); }) ==
          "ring_mismatch");
    CHECK(error_code_of([&] { ko_zero(torus2()); }) ==
          "dimension_mismatch");
}

TEST_CASE("from_bundle_pair examples") {
    RingPtr t3 = torus3();
    CohClass l1 = parse_class(*t3, "l1", 1);
    CohClass l2 = parse_class(*t3, "l2", 1);
    CohClass z1 = t3->zero_class(1);
    CohClass z2 = t3->zero_class(2);

    for (const CohClass& a : all_classes(*t3, 1))
        for (const CohClass& b : all_classes(*t3, 2))
            CHECK(from_bundle_pair(t3, a, b, a, b) == ko_zero(t3)); // E - E

    for (const CohClass& b : all_classes(*t3, 2))
        CHECK(from_bundle_pair(t3, z1, b, z1, z2) ==
              ko_class(t3, z1, b)); // zero-w1 case of the classifier

    KOClass d = from_bundle_pair(t3, l1, z2, l2, z2);
    CHECK(d.w1 == parse_class(*t3, "l1+l2", 1));
    CHECK(d.w2 == cup(*t3, l1, l2)); // l2 ^ l2 = 0
}

TEST_CASE("classifying map is a homomorphism: [E-F] + [F-G] = [E-G]") {
    RingPtr t3 = torus3();
    std::vector<CohClass> h1 = all_classes(*t3, 1);
    std::vector<CohClass> h2 = all_classes(*t3, 2);
    for (const CohClass& e1 : h1)
        for (const CohClass& e2 : h2)
            for (const CohClass& f1 : h1)
                for (const CohClass& f2 : h2)
                    for (const CohClass& g1 : h1)
                        for (const CohClass& g2 : h2) {
                            KOClass lhs =
                                add(from_bundle_pair(t3, e1, e2, f1, f2),
                                    from_bundle_pair(t3, f1, f2, g1, g2));
                            CHECK(lhs == from_bundle_pair(t3, e1, e2, g1,
                                                          g2));
                        }
}

TEST_CASE("tensor_line examples") {
    RingPtr t3 = torus3();
    CohClass l1 = parse_class(*t3, "l1", 1);
    CohClass l2 = parse_class(*t3, "l2", 1);

    for (const CohClass& b : all_classes(*t3, 2)) {
        KOClass x = ko_class(t3, t3->zero_class(1), b);
        CHECK(tensor_line(x, l1) == x); // unchanged when w1 = 0
    }
    for (const KOClass& x : all_ko_classes(t3))
        CHECK(tensor_line(x, t3->zero_class(1)) == x); // trivial line

    // oracle for the general case: expand (l1 - 1) (x) l2 =
    // (l1 l2 - 1) - (l2 - 1) with Whitney arithmetic and re-encode
    KOClass x = ko_class(t3, l1, t3->zero_class(2));
    KOClass expect = add(
        from_bundle_pair(t3, t3->make_class(1, l1.coords + l2.coords),
                         t3->zero_class(2), t3->zero_class(1),
                         t3->zero_class(2)),
        neg(from_bundle_pair(t3, l2, t3->zero_class(2), t3->zero_class(1),
                             t3->zero_class(2))));
    CHECK(tensor_line(x, l2) == expect);
    CHECK(tensor_line(x, l2).w2 == cup(*t3, l1, l2));
}

TEST_CASE("tensor_line is independent of the bundle presentation") {
    // every class of T^3 is from_bundle_pair(E, F) with E, F sums of three
    // lines; twisting each presentation linewise must land on tensor_line
    RingPtr t3 = torus3();
    std::vector<CohClass> h1 = all_classes(*t3, 1);

    std::vector<LineSum> sums; // all multisets of 3 lines, up to order
    for (std::size_t i = 0; i < h1.size(); ++i)
        for (std::size_t j = i; j < h1.size(); ++j)
            for (std::size_t k = j; k < h1.size(); ++k)
                sums.push_back(LineSum{{h1[i], h1[j], h1[k]}});

    for (const LineSum& E : sums)
        for (const LineSum& F : sums) {
            KOClass x = class_of(t3, E, F);
            for (const CohClass& l0 : h1) {
                KOClass direct = tensor_line(x, l0);
                KOClass viaBundles = class_of(t3, E.twisted(*t3, l0),
                                              F.twisted(*t3, l0));
                CHECK(direct == viaBundles);
            }
        }
}

TEST_CASE("tensor_line involution") {
    RingPtr t3 = torus3();
    for (const KOClass& x : all_ko_classes(t3))
        for (const CohClass& l : all_classes(*t3, 1))
            CHECK(tensor_line(tensor_line(x, l), l) == x);
}

TEST_CASE("projective space: a ring with a nonzero H^1 square") {
    // the catalog tori have no element of order 4; the loaded projective
    // ring does, since its generator squares to the nonzero H^2 class
    RingPtr p = rp3();
    CHECK(p->betti() == std::vector<int>{1, 1, 1, 1});
    CohClass a = parse_class(*p, "a", 1);
    CHECK(cup(*p, a, a) == p->basis_class(2, 0));
    CHECK(evaluate(*p, cup(*p, cup(*p, a, a), a)) == 1);

    std::vector<KOClass> all = all_ko_classes(p);
    CHECK(all.size() == 4);
    KOClass zero = ko_zero(p);
    for (const KOClass& x : all) {
        KOClass twice = add(x, x);
        CHECK(twice.w2 == cup(*p, x.w1, x.w1));
        CHECK(add(twice, twice) == zero);
        CHECK(add(x, neg(x)) == zero);
        for (const KOClass& y : all)
            for (const KOClass& z : all)
                CHECK(add(add(x, y), z) == add(x, add(y, z)));
    }

    // x = (a, 0) has order exactly 4 and is not its own inverse
    KOClass x = ko_class(p, a, p->zero_class(2));
    CHECK(add(x, x) != zero);
    CHECK(neg(x) != x);
    CHECK(neg(x).w2 == p->basis_class(2, 0));

    // twisting by the nontrivial line shifts w2 by a^2
    KOClass tw = tensor_line(x, a);
    CHECK(tw.w1 == a);
    CHECK(tw.w2 == p->basis_class(2, 0));
    CHECK(tensor_line(tensor_line(x, a), a) == x);
}
