#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spincs/z2.hpp"

namespace spincs {

class CohomologyRing;
using RingPtr = std::shared_ptr<const CohomologyRing>;

// A cohomology class: degree plus Z/2 coordinates against the ring basis of
// that degree.
struct CohClass {
    int degree = 0;
    F2Vec coords;

    bool operator==(const CohClass& o) const {
        return degree == o.degree && coords == o.coords;
    }
    bool operator!=(const CohClass& o) const { return !(*this == o); }
    bool is_zero() const { return coords.is_zero(); }
};

// Z/2 cohomology ring of a closed connected manifold, presented by explicit
// cup-product structure tensors and a fundamental-class functional. Values
// are immutable after construction; every construction path (catalog or
// document load) verifies connectedness, cup commutativity/associativity and
// Poincare duality, so a live ring is always a valid one.
class CohomologyRing {
  public:
    int dimension() const { return dim_; }
    const std::vector<int>& betti() const { return betti_; }
    const std::vector<std::vector<std::string>>& labels() const {
        return labels_;
    }
    const std::string& name() const { return name_; }
    // Display name of the reference spin structure of the catalog manifold
    // ("all-bounding" = bounding on each circle factor).
    const std::string& base_spin_name() const { return base_spin_; }

    CohClass zero_class(int degree) const;
    CohClass basis_class(int degree, std::size_t index) const;
    CohClass make_class(int degree, F2Vec coords) const;

    // Structure tensor entry: product of basis elements (di, i) and (dj, j)
    // as a vector in degree di + dj.
    const F2Vec& cup_entry(int di, int dj, std::size_t i, std::size_t j) const;
    const F2Vec& fundamental_coords() const { return fundamental_; }

    // Structural equality; display metadata (name, base spin label) ignored.
    bool operator==(const CohomologyRing& o) const;

  private:
    friend struct RingBuilder;
    CohomologyRing() = default;

    int dim_ = 0;
    std::vector<int> betti_;
    std::vector<std::vector<std::string>> labels_;
    // cup_[di][dj][i][j], allocated for di + dj <= dim_
    std::vector<std::vector<std::vector<std::vector<F2Vec>>>> cup_;
    F2Vec fundamental_;
    std::string name_ = "custom";
    std::string base_spin_ = "base";
};

CohClass cup(const CohomologyRing& ring, const CohClass& a, const CohClass& b);
int evaluate(const CohomologyRing& ring, const CohClass& top);

// Catalog rings, built by Kunneth products of circle and sphere factors (the
// genus-g surface by its intersection form).
RingPtr torus3();
RingPtr s1_x_s2();
RingPtr torus2();
RingPtr surface(int genus);

// Ring-document I/O. The document is JSON with exactly the fields
// `dimension`, `betti`, `labels`, `cup`, `fundamental_coords`; unknown
// fields are rejected and omitted cup entries mean zero.
RingPtr load_ring(const std::string& document);
std::string ring_document(const CohomologyRing& ring);

// All 2^betti[degree] classes of one degree, ordered by coordinate mask.
std::vector<CohClass> all_classes(const CohomologyRing& ring, int degree);

// Class grammar used by the CLI: summands joined by '+', each summand a
// basis label or a cup product of labels joined by '^', zero written "0".
CohClass parse_class(const CohomologyRing& ring, const std::string& text,
                     int degree);
std::string class_str(const CohomologyRing& ring, const CohClass& c);

} // namespace spincs
