#pragma once

#include <string>
#include <vector>

#include "spincs/rational.hpp"

namespace spincs {

// A symbolic Z/2-graded line: an opaque label (e.g. "Pfaff(Y,E)"), a parity,
// and whether this factor is the dual line. Dual of dual is the original;
// dualization preserves parity.
struct GradedLine {
    std::string label;
    int parity = 0;
    bool dual = false;

    bool operator==(const GradedLine&) const = default;
};

GradedLine dual(GradedLine l);

// An element of an ordered tensor product of graded lines. The value is a
// unit-circle phase times an optional product of opaque symbols ("symbolic
// unknown" action values); sign identities are verified on the phase part
// without committing to analytic values.
struct LineExpr {
    std::vector<GradedLine> factors;
    Phase phase;
    std::vector<std::string> symbols; // sorted; empty <=> phase known

    bool known() const { return symbols.empty(); }
    bool operator==(const LineExpr&) const = default;
};

LineExpr line_element(std::vector<GradedLine> factors, Phase phase,
                      std::vector<std::string> symbols = {});

// Concatenates factors; phases multiply, symbols merge.
LineExpr tensor(const LineExpr& a, const LineExpr& b);

// Contracts the final pair. Order (L, L*) picks up (-1)^{|L|}; the opposite
// order (L*, L) contracts with no sign.
LineExpr supertrace(const LineExpr& e);

// Reorders factors; the phase picks up (-1) for every inversion of two odd
// factors (Koszul rule). perm[i] is the old position of the new i-th factor.
LineExpr permute(const LineExpr& e, const std::vector<std::size_t>& perm);

// (-1)^(k choose 2), the sign of reversing orientation across k odd
// boundary components.
Phase orientation_sign(long long k);

// Gluing contraction for action elements: the expression must end with a
// matched line/dual pair coming from the two sides of a cut; reduces by the
// supertrace.
LineExpr glue(const LineExpr& e);

// Squares the element: Pfaff factors become their Det counterparts, the
// phase doubles, parities are carried through as data.
LineExpr pfaff_square(const LineExpr& e);

// Glue-expression document: JSON {"factors": [{label, parity, dual}...],
// "phase": "p/q" | "unknown", "symbols": [..]?, "ops": [...]} where ops are
// {"op": "supertrace" | "glue" | "pfaff_square"},
// {"op": "permute", "perm": [...]}, {"op": "orientation", "k": n},
// {"op": "tensor", "factors": ..., "phase": ..., "symbols": ...}.
LineExpr run_line_document(const std::string& document);
std::string line_expr_document(const LineExpr& e);

} // namespace spincs
