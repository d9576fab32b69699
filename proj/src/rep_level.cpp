#include "spincs/rep_level.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace spincs {

std::string group_str(Group g) { return g == Group::SU2 ? "su2" : "so3"; }

Group parse_group(const std::string& s) {
    std::string t;
    for (char c : s)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == "su2" || t == "su(2)")
        return Group::SU2;
    if (t == "so3" || t == "so(3)")
        return Group::SO3;
    fail("parse_error", "unsupported group '" + s + "' (su2 or so3)");
}

namespace {

void validate_term(const RepTerm& t, Group group) {
    std::vector<int> w = t.weights;
    std::sort(w.begin(), w.end());
    std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] != -w[n - 1 - i])
            fail("malformed_rep",
                 "weight multiset must be symmetric under negation");
    if (group == Group::SO3) {
        for (int x : w)
            if (x % 2 != 0)
                fail("malformed_rep",
                     "SO3 weights must be even in SU2 units");
    }
    if (group == Group::SU2 && t.realness == Realness::AlreadyReal) {
        std::map<int, int> mult;
        for (int x : w)
            if (x % 2 != 0)
                ++mult[x];
        for (auto& [x, m] : mult)
            if (m % 2 != 0)
                fail("malformed_rep",
                     "an already-real SU2 term must carry each odd weight "
                     "with even multiplicity");
    }
}

RepTerm sorted_term(Realness realness, std::vector<int> weights) {
    std::sort(weights.begin(), weights.end());
    return {realness, std::move(weights)};
}

// weights of the complexification of the underlying real representation
std::vector<int> complexified(const RepTerm& t) {
    if (t.realness == Realness::AlreadyReal)
        return t.weights;
    std::vector<int> w = t.weights;
    for (int x : t.weights)
        w.push_back(-x);
    std::sort(w.begin(), w.end());
    return w;
}

long long real_dim(const RepTerm& t) {
    long long n = static_cast<long long>(t.weights.size());
    return t.realness == Realness::AlreadyReal ? n : 2 * n;
}

} // namespace

RepTerm real_term(std::vector<int> weights, Group group) {
    RepTerm t = sorted_term(Realness::AlreadyReal, std::move(weights));
    validate_term(t, group);
    return t;
}

RepTerm complex_term(std::vector<int> weights, Group group) {
    RepTerm t = sorted_term(Realness::RealifiedComplex, std::move(weights));
    validate_term(t, group);
    return t;
}

RepTerm su2_standard() { return complex_term({-1, 1}, Group::SU2); }
RepTerm so3_vector() { return real_term({-2, 0, 2}, Group::SO3); }

RepTerm trivial_term(int rank) {
    if (rank <= 0)
        fail("malformed_rep", "trivial term needs positive rank");
    return {Realness::AlreadyReal, std::vector<int>(rank, 0)};
}

VirtualRep make_rep(Group group,
                    std::vector<std::pair<RepTerm, long long>> terms) {
    for (const auto& [t, m] : terms) {
        (void)m;
        validate_term(t, group);
    }
    return {group, std::move(terms)};
}

VirtualRep direct_sum(const VirtualRep& a, const VirtualRep& b) {
    if (a.group != b.group)
        fail("group_mismatch", "cannot sum representations of different "
                               "groups");
    VirtualRep r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

VirtualRep negate(const VirtualRep& a) { return scale(a, -1); }

VirtualRep scale(const VirtualRep& a, long long k) {
    VirtualRep r = a;
    for (auto& [t, m] : r.terms) {
        (void)t;
        m *= k;
    }
    return r;
}

long long rank(const VirtualRep& rho) {
    long long r = 0;
    for (const auto& [t, m] : rho.terms)
        r += m * real_dim(t);
    return r;
}

Rational pairing(const VirtualRep& rho, long long m, long long n) {
    // sum of w^2 over the complexified weights, taken at the lattice
    // generator; the generator of SO3 is half the SU2 one, hence the 8
    long long denom = rho.group == Group::SU2 ? 2 : 8;
    long long total = 0;
    for (const auto& [t, mult] : rho.terms) {
        long long s = 0;
        for (int w : complexified(t))
            s += static_cast<long long>(w) * w;
        total += mult * s;
    }
    return Rational(total, denom) * Rational(m) * Rational(n);
}

bool integrality_check(const VirtualRep& rho) {
    return pairing(rho, 1, 1).is_integer();
}

int w2_of_rep(const VirtualRep& rho) {
    if (rho.group == Group::SU2)
        return 0;
    long long s = 0;
    for (const auto& [t, mult] : rho.terms) {
        long long per = 0;
        for (int w : complexified(t))
            if (w > 0)
                per += w / 2; // SO3-vector-normalized units
        s += mult * per;
    }
    return static_cast<int>(((s % 2) + 2) % 2);
}

LevelClass level_from_coeff(Group group, long long k) {
    if (group == Group::SU2)
        return {group, k, -2 * k, 0};
    return {group, k, k, static_cast<int>(((k % 2) + 2) % 2)};
}

LevelClass lambda(const VirtualRep& rho) {
    Rational p = pairing(rho, 1, 1);
    if (!p.is_integer())
        fail("level_consistency",
             "pairing is not integral; the representation is malformed");
    long long pi = p.num();
    long long k;
    if (rho.group == Group::SU2) {
        if (pi % 2 != 0)
            fail("level_consistency",
                 "SU2 pairing must be even; the representation is "
                 "malformed");
        k = pi / 2;
    } else {
        k = pi;
    }
    LevelClass out = level_from_coeff(rho.group, k);
    // the (p1, w2) pair determines the class; a mismatch would mean the
    // normalization anchors are inconsistent, so report rather than absorb
    if (w2_of_rep(rho) != out.w2)
        fail("level_consistency",
             "w2 of the representation disagrees with the pairing "
             "normalization");
    return out;
}

LevelClass level_from_p1_w2(Group group, long long p1, int w2) {
    if (group == Group::SU2) {
        if (p1 % 2 != 0 || w2 != 0)
            fail("level_consistency",
                 "no SU2 level has this (p1, w2) pair");
        return level_from_coeff(group, -p1 / 2);
    }
    LevelClass out = level_from_coeff(group, p1);
    if (out.w2 != w2)
        fail("level_consistency", "no SO3 level has this (p1, w2) pair");
    return out;
}

LevelClass pullback_beta(const LevelClass& x) {
    if (x.group != Group::SO3)
        fail("group_mismatch", "pullback along the double cover starts from "
                               "an SO3 level");
    return level_from_coeff(Group::SU2, 2 * x.coeff);
}

long long p1_of_integral_image(long long k, Group group) {
    (void)group;
    return 2 * k;
}

// ---------------------------------------------------------------------------
// rep expression grammar

namespace {

struct RepParser {
    Group group;
    std::string s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() &&
               std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool peek_digit() {
        skip_ws();
        return pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos]));
    }

    long long parse_int() {
        skip_ws();
        bool negative = eat('-');
        skip_ws();
        if (!peek_digit())
            fail("parse_error", "expected an integer in rep expression");
        long long v = 0;
        while (pos < s.size() &&
               std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return negative ? -v : v;
    }

    std::string parse_ident() {
        skip_ws();
        std::string id;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos]))))
            id += s[pos++];
        if (id.empty())
            fail("parse_error", "expected a term in rep expression");
        return id;
    }

    std::vector<int> parse_weight_list() {
        if (!eat('['))
            fail("parse_error", "expected '[' after real/cplx");
        std::vector<int> w;
        if (!eat(']')) {
            while (true) {
                w.push_back(static_cast<int>(parse_int()));
                if (eat(']'))
                    break;
                if (!eat(','))
                    fail("parse_error", "expected ',' in weight list");
            }
        }
        return w;
    }

    VirtualRep parse_factor() {
        skip_ws();
        if (eat('(')) {
            VirtualRep r = parse_expr();
            if (!eat(')'))
                fail("parse_error", "missing ')' in rep expression");
            return r;
        }
        if (peek_digit()) {
            long long n = parse_int();
            if (n == 0)
                return {group, {}};
            return make_rep(group,
                            {{trivial_term(static_cast<int>(n)), 1}});
        }
        std::string id = parse_ident();
        if (id == "std") {
            if (group != Group::SU2)
                fail("parse_error", "'std' is an SU2 term");
            return make_rep(group, {{su2_standard(), 1}});
        }
        if (id == "id") {
            if (group != Group::SO3)
                fail("parse_error", "'id' is an SO3 term");
            return make_rep(group, {{so3_vector(), 1}});
        }
        if (id == "real")
            return make_rep(group, {{real_term(parse_weight_list(), group),
                                     1}});
        if (id == "cplx")
            return make_rep(group,
                            {{complex_term(parse_weight_list(), group), 1}});
        fail("parse_error", "unknown rep term '" + id + "'");
    }

    VirtualRep parse_term() {
        skip_ws();
        if (peek_digit()) {
            std::size_t mark = pos;
            long long n = parse_int();
            if (eat('*'))
                return scale(parse_factor(), n);
            pos = mark;
        }
        return parse_factor();
    }

    VirtualRep parse_expr() {
        skip_ws();
        VirtualRep acc =
            eat('-') ? negate(parse_term()) : parse_term();
        while (true) {
            skip_ws();
            if (eat('+')) {
                acc = direct_sum(acc, parse_term());
            } else if (eat('-')) {
                acc = direct_sum(acc, negate(parse_term()));
            } else {
                break;
            }
        }
        return acc;
    }

    VirtualRep run() {
        VirtualRep r = parse_expr();
        skip_ws();
        if (pos != s.size())
            fail("parse_error", "trailing input in rep expression at '" +
                                    s.substr(pos) + "'");
        return r;
    }
};

} // namespace

VirtualRep parse_rep(Group group, const std::string& expr) {
    RepParser p{group, expr};
    return p.run();
}

VirtualRep parse_rep(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        fail("parse_error",
             "rep expression must start with a group prefix, e.g. "
             "\"su2: std - 4\"");
    Group g = parse_group(text.substr(0, colon));
    return parse_rep(g, text.substr(colon + 1));
}

} // namespace spincs
