#include "spincs/flat_moduli.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

namespace spincs {

using nlohmann::json;

// ---------------------------------------------------------------------------
// finitely presented groups

FPGroup free_group(int n) {
    if (n < 0)
        fail("invalid_argument", "free group rank must be nonnegative");
    FPGroup g;
    g.name = "free" + std::to_string(n);
    for (int i = 0; i < n; ++i)
        g.generators.push_back("x" + std::to_string(i + 1));
    return g;
}

FPGroup z_power(int n) {
    FPGroup g = free_group(n);
    g.name = "Z" + std::to_string(n);
    g.relators.clear();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.relators.push_back(
                {i + 1, j + 1, -(i + 1), -(j + 1)}); // [x_i, x_j]
    return g;
}

FPGroup surface_fp(int genus) {
    if (genus < 0)
        fail("invalid_argument", "genus must be nonnegative");
    FPGroup g;
    g.name = "surface" + std::to_string(genus);
    for (int i = 1; i <= genus; ++i) {
        g.generators.push_back("a" + std::to_string(i));
        g.generators.push_back("b" + std::to_string(i));
    }
    std::vector<int> word;
    for (int i = 0; i < genus; ++i) {
        int a = 2 * i + 1, b = 2 * i + 2;
        word.push_back(a);
        word.push_back(b);
        word.push_back(-a);
        word.push_back(-b);
    }
    if (!word.empty())
        g.relators.push_back(word);
    return g;
}

FPGroup named_pi1(const std::string& name) {
    std::string t;
    for (char c : name)
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto suffix_int = [&](std::size_t at) -> int {
        std::string digits = t.substr(at);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            fail("parse_error", "bad catalog pi1 name '" + name + "'");
        return std::stoi(digits);
    };
    if (t.rfind("free", 0) == 0)
        return free_group(suffix_int(4));
    if (t.rfind("surface", 0) == 0)
        return surface_fp(suffix_int(7));
    if (t.rfind("z", 0) == 0)
        return z_power(suffix_int(1));
    fail("parse_error", "unknown catalog pi1 '" + name +
                            "' (Z<n>, free<n>, surface<g>)");
}

// ---------------------------------------------------------------------------
// finite groups

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names,
                                    std::string name) {
    int n = static_cast<int>(table.size());
    if (n == 0)
        fail("group_axiom_failure", "group must be nonempty");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            fail("group_axiom_failure", "multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= n)
                fail("group_axiom_failure", "table entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = table[e][x] == x && table[x][e] == x;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0)
        fail("group_axiom_failure", "table has no identity element");
    std::vector<int> inverse(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table[a][b] == identity && table[b][a] == identity) {
                inverse[a] = b;
                break;
            }
        if (inverse[a] < 0)
            fail("group_axiom_failure", "element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    fail("group_axiom_failure",
                         "multiplication table is not associative");
    if (names.empty())
        for (int i = 0; i < n; ++i)
            names.push_back("g" + std::to_string(i));
    if (static_cast<int>(names.size()) != n)
        fail("group_axiom_failure", "one name per element required");

    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.identity_ = identity;
    g.names_ = std::move(names);
    g.name_ = std::move(name);
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n <= 0)
        fail("invalid_argument", "cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "0" : std::to_string(a));
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    }
    return FiniteGroup::from_table(std::move(t), std::move(names),
                                   "Z/" + std::to_string(n));
}

FiniteGroup symmetric3() {
    // permutations of {1,2,3} in lexicographic one-line order
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const char* names[6] = {"e",     "(23)",  "(12)",
                                   "(123)", "(132)", "(13)"};
    auto index_of = [&](const int* p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] &&
                perms[i][2] == p[2])
                return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int x = 0; x < 3; ++x)
                c[x] = perms[a][perms[b][x]]; // (a o b)(x)
            t[a][b] = index_of(c);
        }
    return FiniteGroup::from_table(
        std::move(t), std::vector<std::string>(names, names + 6), "S3");
}

FiniteGroup quaternion8() {
    // elements s * u with sign s and unit u in {1, i, j, k}; index = u + 4s
    static const char* names[8] = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    // unit multiplication with sign: i*j = k etc.
    static const int unit_mul[4][4] = {{0, 1, 2, 3},
                                       {1, 0, 3, 2},
                                       {2, 3, 0, 1},
                                       {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{+1, +1, +1, +1},
                                        {+1, -1, +1, -1},
                                        {+1, -1, -1, +1},
                                        {+1, +1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a % 4, sa = a / 4, ub = b % 4, sb = b / 4;
            int u = unit_mul[ua][ub];
            int s = (sa + sb + (unit_sign[ua][ub] < 0 ? 1 : 0)) % 2;
            t[a][b] = u + 4 * s;
        }
    return FiniteGroup::from_table(
        std::move(t), std::vector<std::string>(names, names + 8), "Q8");
}

FiniteGroup dihedral4() {
    // r^a s^b with index a + 4b; r^a s^b . r^c s^d = r^{a + (-1)^b c} s^{b+d}
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    std::vector<std::string> names = {"e",  "r",  "r2",  "r3",
                                      "s",  "sr", "sr2", "sr3"};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 2; ++d) {
                    int aa = ((a + (b ? -c : c)) % 4 + 4) % 4;
                    int bb = (b + d) % 2;
                    t[a + 4 * b][c + 4 * d] = aa + 4 * bb;
                }
    return FiniteGroup::from_table(std::move(t), std::move(names), "D4");
}

FiniteGroup named_group(const std::string& name) {
    std::string t;
    for (char c : name)
        if (c != '/')
            t += static_cast<char>(
                std::tolower(static_cast<unsigned char>(c)));
    if (t == "s3")
        return symmetric3();
    if (t == "q8")
        return quaternion8();
    if (t == "d4")
        return dihedral4();
    if (t.size() > 1 && t[0] == 'z' &&
        t.find_first_not_of("0123456789", 1) == std::string::npos)
        return cyclic_group(std::stoi(t.substr(1)));
    fail("parse_error",
         "unknown catalog group '" + name + "' (Z/n, S3, Q8, D4)");
}

FiniteGroup group_from_document(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        fail("schema_violation", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("schema_violation", "group document must be a JSON object");
    static const std::set<std::string> keys = {"order", "table", "names"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!keys.count(it.key()))
            fail("schema_violation", "unknown field '" + it.key() + "'");
    if (!doc.contains("order") || !doc["order"].is_number_integer())
        fail("schema_violation", "group document needs an integer 'order'");
    int n = doc["order"].get<int>();
    if (n <= 0)
        fail("schema_violation", "order must be positive");
    if (!doc.contains("table") || !doc["table"].is_array() ||
        doc["table"].size() != static_cast<std::size_t>(n) * n)
        fail("schema_violation",
             "table must be a row-major array of order^2 indices");
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& x = doc["table"][a * n + b];
            if (!x.is_number_integer())
                fail("schema_violation", "table entries must be integers");
            table[a][b] = x.get<int>();
        }
    std::vector<std::string> names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array())
            fail("schema_violation", "names must be an array");
        for (const auto& s : doc["names"]) {
            if (!s.is_string())
                fail("schema_violation", "names must be strings");
            names.push_back(s.get<std::string>());
        }
    }
    return FiniteGroup::from_table(std::move(table), std::move(names));
}

std::string group_document(const FiniteGroup& g) {
    json doc;
    doc["order"] = g.order();
    json table = json::array();
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            table.push_back(g.mult(a, b));
    doc["table"] = table;
    json names = json::array();
    for (int i = 0; i < g.order(); ++i)
        names.push_back(g.element_name(i));
    doc["names"] = names;
    return doc.dump(2);
}

// ---------------------------------------------------------------------------
// moduli enumeration

namespace {

bool word_is_identity(const std::vector<int>& word,
                      const std::vector<int>& tuple, const FiniteGroup& G) {
    int acc = G.identity();
    for (int letter : word) {
        int gen = letter > 0 ? letter - 1 : -letter - 1;
        int img = tuple[gen];
        if (letter < 0)
            img = G.inverse(img);
        acc = G.mult(acc, img);
    }
    return acc == G.identity();
}

std::vector<int> decode(long long index, int k, int n) {
    std::vector<int> tuple(k);
    for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(index % n);
        index /= n;
    }
    return tuple;
}

long long encode(const std::vector<int>& tuple, int n) {
    long long idx = 0;
    for (int t : tuple)
        idx = idx * n + t;
    return idx;
}

} // namespace

std::vector<GaugeClass> enumerate_moduli(const FPGroup& pi1,
                                         const FiniteGroup& G,
                                         long long budget) {
    int k = static_cast<int>(pi1.generators.size());
    int n = G.order();
    for (const auto& word : pi1.relators)
        for (int letter : word)
            if (letter == 0 || std::abs(letter) > k)
                fail("malformed_presentation",
                     "relator uses an undeclared generator");

    long long total = 1;
    for (int i = 0; i < k; ++i) {
        total *= n;
        if (total > budget)
            fail("budget_exceeded",
                 "|G|^generators = " + std::to_string(n) + "^" +
                     std::to_string(k) + " exceeds the budget " +
                     std::to_string(budget));
    }

    auto satisfies = [&](const std::vector<int>& tuple) {
        for (const auto& word : pi1.relators)
            if (!word_is_identity(word, tuple, G))
                return false;
        return true;
    };

    std::vector<GaugeClass> classes;
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(total), 0);
    for (long long idx = 0; idx < total; ++idx) {
        if (visited[static_cast<std::size_t>(idx)])
            continue;
        std::vector<int> tuple = decode(idx, k, n);
        if (!satisfies(tuple))
            continue;

        GaugeClass cls;
        cls.representative = tuple;
        std::set<long long> orbit;
        for (int g = 0; g < n; ++g) {
            std::vector<int> conj(k);
            for (int i = 0; i < k; ++i)
                conj[i] = G.mult(G.mult(g, tuple[i]), G.inverse(g));
            orbit.insert(encode(conj, n));
            if (conj == tuple)
                cls.stabilizer.push_back(g);
        }
        for (long long o : orbit)
            visited[static_cast<std::size_t>(o)] = 1;
        cls.orbit_size = static_cast<long long>(orbit.size());
        if (cls.orbit_size * static_cast<long long>(cls.stabilizer.size()) !=
            n)
            fail("group_axiom_failure",
                 "orbit-stabilizer violated; table is not a group action");
        classes.push_back(std::move(cls));
    }
    return classes;
}

long long stabilizer_pi0_report(const GaugeClass& cls) {
    return static_cast<long long>(cls.stabilizer.size());
}

long long dim_smooth(long long genus, long long dim_g, long long dim_stab) {
    if (genus < 0)
        fail("invalid_argument", "genus must be nonnegative");
    return -dim_g * (2 - 2 * genus) + 2 * dim_stab;
}

// ---------------------------------------------------------------------------
// constant connections on tori

LieVec lie_bracket(const LieVec& a, const LieVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool lie_is_zero(const LieVec& a) {
    return a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
}

Rational lie_pairing(const VirtualRep& rho, const LieVec& x,
                     const LieVec& y) {
    Rational dot = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    return dot * pairing(rho, 1, 1);
}

LieVec curvature(const ConstantConnection& B) {
    if (B.components.size() != 2)
        fail("dimension_mismatch",
             "curvature on T^2 needs exactly two components");
    return lie_bracket(B.components[0], B.components[1]);
}

Rational moment(const ConstantConnection& B, const LieVec& zeta,
                const VirtualRep& rho) {
    // unit-volume T^2: the integral is the single pairing value
    return lie_pairing(rho, curvature(B), zeta);
}

Rational symplectic(const TangentPair& a1, const TangentPair& a2,
                    const VirtualRep& rho) {
    return lie_pairing(rho, a1.dx, a2.dy) - lie_pairing(rho, a1.dy, a2.dx);
}

bool el_critical_test(const ConstantConnection& B, const VirtualRep& rho) {
    if (pairing(rho, 1, 1).is_zero())
        fail("degenerate_pairing",
             "flatness criterion needs a nondegenerate pairing");
    LieVec omega = curvature(B);
    for (int i = 0; i < 3; ++i) {
        LieVec basis{Rational(0), Rational(0), Rational(0)};
        basis[i] = Rational(1);
        if (!lie_pairing(rho, omega, basis).is_zero())
            return false;
    }
    return true;
}

} // namespace spincs
