#include "spincs/graded_lines.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace spincs {

using nlohmann::json;

GradedLine dual(GradedLine l) {
    l.dual = !l.dual;
    return l;
}

LineExpr line_element(std::vector<GradedLine> factors, Phase phase,
                      std::vector<std::string> symbols) {
    std::sort(symbols.begin(), symbols.end());
    return {std::move(factors), phase, std::move(symbols)};
}

LineExpr tensor(const LineExpr& a, const LineExpr& b) {
    LineExpr r = a;
    r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
    r.phase = a.phase * b.phase;
    r.symbols.insert(r.symbols.end(), b.symbols.begin(), b.symbols.end());
    std::sort(r.symbols.begin(), r.symbols.end());
    return r;
}

namespace {

LineExpr contract_tail(const LineExpr& e, const char* code) {
    if (e.factors.size() < 2)
        fail(code, "expression has no final pair to contract");
    const GradedLine& a = e.factors[e.factors.size() - 2];
    const GradedLine& b = e.factors[e.factors.size() - 1];
    if (a.label != b.label || a.parity != b.parity || a.dual == b.dual)
        fail(code, "final factors are not a matching line/dual pair: '" +
                       a.label + (a.dual ? "*" : "") + "' vs '" + b.label +
                       (b.dual ? "*" : "") + "'");
    LineExpr r = e;
    r.factors.pop_back();
    r.factors.pop_back();
    // (L, L*) is the supertrace with sign (-1)^{|L|}; (L*, L) has no sign
    if (!a.dual)
        r.phase = r.phase * Phase::sign(a.parity);
    return r;
}

} // namespace

LineExpr supertrace(const LineExpr& e) {
    return contract_tail(e, "mismatched_pair");
}

LineExpr permute(const LineExpr& e, const std::vector<std::size_t>& perm) {
    if (perm.size() != e.factors.size())
        fail("invalid_permutation", "permutation length differs from the "
                                    "number of factors");
    std::set<std::size_t> used(perm.begin(), perm.end());
    if (used.size() != perm.size() ||
        (!perm.empty() && *used.rbegin() >= e.factors.size()))
        fail("invalid_permutation", "not a permutation of the factors");

    LineExpr r = e;
    r.factors.clear();
    for (std::size_t p : perm)
        r.factors.push_back(e.factors[p]);
    long long odd_inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j] && e.factors[perm[i]].parity &&
                e.factors[perm[j]].parity)
                ++odd_inversions;
    r.phase = r.phase * Phase::sign(odd_inversions);
    return r;
}

Phase orientation_sign(long long k) {
    if (k < 0)
        fail("invalid_argument", "component count must be nonnegative");
    return Phase::sign(k * (k - 1) / 2);
}

LineExpr glue(const LineExpr& e) { return contract_tail(e, "unmatched_tail"); }

namespace {

std::string det_label(const std::string& label) {
    if (label.rfind("Pfaff", 0) == 0)
        return "Det" + label.substr(5);
    return "Det(" + label + ")";
}

} // namespace

LineExpr pfaff_square(const LineExpr& e) {
    LineExpr r;
    for (const GradedLine& f : e.factors)
        r.factors.push_back({det_label(f.label), f.parity, f.dual});
    r.phase = e.phase.pow(2);
    for (const std::string& s : e.symbols) {
        r.symbols.push_back(s);
        r.symbols.push_back(s);
    }
    std::sort(r.symbols.begin(), r.symbols.end());
    return r;
}

// ---------------------------------------------------------------------------
// documents

namespace {

Phase parse_phase(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Phase::of(std::stoll(s), 1);
        return Phase::of(std::stoll(s.substr(0, slash)),
                         std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        fail("schema_violation", "phase must be a rational angle 'p/q'");
    }
}

std::vector<GradedLine> factors_from_json(const json& j) {
    if (!j.is_array())
        fail("schema_violation", "factors must be an array");
    std::vector<GradedLine> out;
    for (const auto& f : j) {
        if (!f.is_object() || !f.contains("label") || !f.contains("parity"))
            fail("schema_violation",
                 "factor entries need 'label' and 'parity'");
        static const std::set<std::string> keys = {"label", "parity",
                                                   "dual"};
        for (auto it = f.begin(); it != f.end(); ++it)
            if (!keys.count(it.key()))
                fail("schema_violation",
                     "unknown factor field '" + it.key() + "'");
        if (!f["label"].is_string())
            fail("schema_violation", "factor label must be a string");
        if (!f["parity"].is_number_integer() ||
            (f["parity"].get<int>() != 0 && f["parity"].get<int>() != 1))
            fail("schema_violation", "factor parity must be 0 or 1");
        bool d = false;
        if (f.contains("dual")) {
            if (!f["dual"].is_boolean())
                fail("schema_violation", "factor dual must be a boolean");
            d = f["dual"].get<bool>();
        }
        out.push_back({f["label"].get<std::string>(),
                       f["parity"].get<int>(), d});
    }
    return out;
}

LineExpr expr_from_json(const json& j) {
    if (!j.is_object() || !j.contains("factors"))
        fail("schema_violation", "expression needs a 'factors' array");
    std::vector<GradedLine> factors = factors_from_json(j["factors"]);
    Phase phase;
    std::vector<std::string> symbols;
    if (j.contains("phase")) {
        if (!j["phase"].is_string())
            fail("schema_violation", "phase must be a string");
        std::string p = j["phase"].get<std::string>();
        if (p == "unknown")
            symbols.push_back("tau");
        else
            phase = parse_phase(p);
    }
    if (j.contains("symbols")) {
        if (!j["symbols"].is_array())
            fail("schema_violation", "symbols must be an array of strings");
        for (const auto& s : j["symbols"]) {
            if (!s.is_string())
                fail("schema_violation", "symbols must be strings");
            symbols.push_back(s.get<std::string>());
        }
    }
    return line_element(std::move(factors), phase, std::move(symbols));
}

} // namespace

LineExpr run_line_document(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        fail("schema_violation", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("schema_violation", "glue document must be a JSON object");
    static const std::set<std::string> keys = {"factors", "phase", "symbols",
                                               "ops"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!keys.count(it.key()))
            fail("schema_violation", "unknown field '" + it.key() + "'");

    LineExpr e = expr_from_json(doc);
    if (!doc.contains("ops"))
        return e;
    if (!doc["ops"].is_array())
        fail("schema_violation", "ops must be an array");
    for (const auto& op : doc["ops"]) {
        if (!op.is_object() || !op.contains("op") || !op["op"].is_string())
            fail("schema_violation", "each op needs an 'op' name");
        std::string name = op["op"].get<std::string>();
        if (name == "supertrace") {
            e = supertrace(e);
        } else if (name == "glue") {
            e = glue(e);
        } else if (name == "pfaff_square") {
            e = pfaff_square(e);
        } else if (name == "permute") {
            if (!op.contains("perm") || !op["perm"].is_array())
                fail("schema_violation", "permute needs a 'perm' array");
            std::vector<std::size_t> perm;
            for (const auto& x : op["perm"]) {
                if (!x.is_number_integer() || x.get<long long>() < 0)
                    fail("schema_violation",
                         "perm entries must be nonnegative integers");
                perm.push_back(x.get<std::size_t>());
            }
            e = permute(e, perm);
        } else if (name == "orientation") {
            if (!op.contains("k") || !op["k"].is_number_integer())
                fail("schema_violation", "orientation needs an integer 'k'");
            LineExpr scaled = e;
            scaled.phase = e.phase * orientation_sign(op["k"].get<long long>());
            e = scaled;
        } else if (name == "tensor") {
            e = tensor(e, expr_from_json(op));
        } else {
            fail("schema_violation", "unknown op '" + name + "'");
        }
    }
    return e;
}

std::string line_expr_document(const LineExpr& e) {
    json doc;
    json factors = json::array();
    for (const GradedLine& f : e.factors) {
        json jf;
        jf["label"] = f.label;
        jf["parity"] = f.parity;
        jf["dual"] = f.dual;
        factors.push_back(jf);
    }
    doc["factors"] = factors;
    doc["phase"] = e.phase.angle().str();
    doc["phase_display"] = e.phase.str();
    doc["symbols"] = e.symbols;
    doc["known"] = e.known();
    return doc.dump(2);
}

} // namespace spincs
