#include "spincs/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace spincs {

using nlohmann::json;

// ---------------------------------------------------------------------------
// construction and validation

struct RingBuilder {
    int dim = 0;
    std::vector<int> betti;
    std::vector<std::vector<std::string>> labels;
    std::vector<std::vector<std::vector<std::vector<F2Vec>>>> cup;
    F2Vec fundamental;
    std::string name = "custom";
    std::string base_spin = "base";

    void init_tensors() {
        cup.assign(dim + 1, {});
        for (int di = 0; di <= dim; ++di) {
            cup[di].assign(dim + 1 - di, {});
            for (int dj = 0; di + dj <= dim; ++dj) {
                cup[di][dj].assign(
                    betti[di],
                    std::vector<F2Vec>(betti[dj], F2Vec(betti[di + dj])));
            }
        }
    }

    F2Vec cup_vec(int di, int dj, const F2Vec& a, const F2Vec& b) const {
        F2Vec r(betti[di + dj]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i])
                continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j])
                    r += cup[di][dj][i][j];
        }
        return r;
    }

    void validate() const {
        if (betti.size() != static_cast<std::size_t>(dim + 1))
            fail("schema_violation", "betti length must be dimension + 1");
        if (betti[0] != 1)
            fail("schema_violation",
                 "ring must be connected (b0 = 1 required)");
        if (betti[dim] != 1)
            fail("schema_violation",
                 "ring must be closed connected (b_dim = 1 required)");
        if (labels.size() != betti.size())
            fail("schema_violation", "labels must cover every degree");
        std::set<std::string> seen;
        for (int d = 0; d <= dim; ++d) {
            if (labels[d].size() != static_cast<std::size_t>(betti[d]))
                fail("schema_violation",
                     "label count differs from Betti number in degree " +
                         std::to_string(d));
            for (const auto& l : labels[d]) {
                if (l.empty() || !seen.insert(l).second)
                    fail("schema_violation",
                         "basis labels must be nonempty and unique");
            }
        }
        if (fundamental.size() != static_cast<std::size_t>(betti[dim]))
            fail("schema_violation", "fundamental_coords has wrong length");

        // commutativity (characteristic 2: a.b = b.a on all basis pairs)
        for (int di = 0; di <= dim; ++di)
            for (int dj = 0; di + dj <= dim; ++dj)
                for (int i = 0; i < betti[di]; ++i)
                    for (int j = 0; j < betti[dj]; ++j)
                        if (cup[di][dj][i][j] != cup[dj][di][j][i])
                            fail("commutativity_failure",
                                 "cup tensor is not symmetric on degrees (" +
                                     std::to_string(di) + "," +
                                     std::to_string(dj) + ")");

        // associativity on all basis triples that stay within the dimension
        for (int d1 = 0; d1 <= dim; ++d1)
            for (int d2 = 0; d1 + d2 <= dim; ++d2)
                for (int d3 = 0; d1 + d2 + d3 <= dim; ++d3)
                    for (int i = 0; i < betti[d1]; ++i)
                        for (int j = 0; j < betti[d2]; ++j)
                            for (int k = 0; k < betti[d3]; ++k) {
                                F2Vec left = cup_vec(
                                    d1 + d2, d3, cup[d1][d2][i][j],
                                    basis_vec(d3, k));
                                F2Vec right = cup_vec(
                                    d1, d2 + d3, basis_vec(d1, i),
                                    cup[d2][d3][j][k]);
                                if (left != right)
                                    fail("associativity_failure",
                                         "cup product fails associativity on "
                                         "degrees (" +
                                             std::to_string(d1) + "," +
                                             std::to_string(d2) + "," +
                                             std::to_string(d3) + ")");
                            }

        // Poincare duality: fundamental(a.b) nondegenerate on H^i x H^(n-i)
        for (int i = 0; i <= dim; ++i) {
            int j = dim - i;
            if (betti[i] != betti[j])
                fail("duality_failure",
                     "complementary Betti numbers differ in degree " +
                         std::to_string(i));
            std::vector<F2Vec> rows;
            for (int p = 0; p < betti[i]; ++p) {
                F2Vec row(betti[j]);
                for (int q = 0; q < betti[j]; ++q)
                    row.set(q, fundamental.dot(cup[i][j][p][q]));
                rows.push_back(row);
            }
            if (f2_rank(rows) != betti[i])
                fail("duality_failure",
                     "duality pairing is degenerate in degree " +
                         std::to_string(i));
        }
    }

    F2Vec basis_vec(int d, int i) const {
        F2Vec v(betti[d]);
        v.set(i, 1);
        return v;
    }

    RingPtr build() const {
        validate();
        auto r = std::shared_ptr<CohomologyRing>(new CohomologyRing());
        r->dim_ = dim;
        r->betti_ = betti;
        r->labels_ = labels;
        r->cup_ = cup;
        r->fundamental_ = fundamental;
        r->name_ = name;
        r->base_spin_ = base_spin;
        return r;
    }
};

namespace {

std::string join_label(const std::string& a, const std::string& b) {
    if (a == "1")
        return b;
    if (b == "1")
        return a;
    return a + "^" + b;
}

// circle factor; only used inside Kunneth products, never exposed
RingBuilder circle_factor(const std::string& label) {
    RingBuilder r;
    r.dim = 1;
    r.betti = {1, 1};
    r.labels = {{"1"}, {label}};
    r.init_tensors();
    r.cup[0][0][0][0].set(0, 1);
    r.cup[0][1][0][0].set(0, 1);
    r.cup[1][0][0][0].set(0, 1);
    r.fundamental = F2Vec(1);
    r.fundamental.set(0, 1);
    return r;
}

RingBuilder sphere_factor(const std::string& label) {
    RingBuilder r;
    r.dim = 2;
    r.betti = {1, 0, 1};
    r.labels = {{"1"}, {}, {label}};
    r.init_tensors();
    r.cup[0][0][0][0].set(0, 1);
    r.cup[0][2][0][0].set(0, 1);
    r.cup[2][0][0][0].set(0, 1);
    r.fundamental = F2Vec(1);
    r.fundamental.set(0, 1);
    return r;
}

// Kunneth product. Product basis in degree k is ordered by the first
// factor's degree, descending; no Koszul signs in characteristic 2.
RingBuilder kunneth(const RingBuilder& A, const RingBuilder& B) {
    RingBuilder r;
    r.dim = A.dim + B.dim;
    r.betti.assign(r.dim + 1, 0);
    r.labels.assign(r.dim + 1, {});

    // basis index maps: parts[k] = (a_deg, a_idx, b_deg, b_idx)
    std::vector<std::vector<std::tuple<int, int, int, int>>> parts(r.dim + 1);
    std::map<std::tuple<int, int, int, int>, int> pos;
    for (int k = 0; k <= r.dim; ++k) {
        for (int ad = std::min(k, A.dim); ad >= 0 && k - ad <= B.dim; --ad) {
            int bd = k - ad;
            if (bd < 0)
                continue;
            for (int ai = 0; ai < A.betti[ad]; ++ai)
                for (int bi = 0; bi < B.betti[bd]; ++bi) {
                    pos[{ad, ai, bd, bi}] =
                        static_cast<int>(parts[k].size());
                    parts[k].push_back({ad, ai, bd, bi});
                    r.labels[k].push_back(join_label(A.labels[ad][ai],
                                                     B.labels[bd][bi]));
                }
        }
        r.betti[k] = static_cast<int>(parts[k].size());
    }
    r.init_tensors();

    for (int di = 0; di <= r.dim; ++di)
        for (int dj = 0; di + dj <= r.dim; ++dj)
            for (int i = 0; i < r.betti[di]; ++i)
                for (int j = 0; j < r.betti[dj]; ++j) {
                    auto [ad1, ai1, bd1, bi1] = parts[di][i];
                    auto [ad2, ai2, bd2, bi2] = parts[dj][j];
                    if (ad1 + ad2 > A.dim || bd1 + bd2 > B.dim)
                        continue; // product vanishes above top degree
                    const F2Vec& va = A.cup[ad1][ad2][ai1][ai2];
                    const F2Vec& vb = B.cup[bd1][bd2][bi1][bi2];
                    F2Vec out(r.betti[di + dj]);
                    for (std::size_t sa = 0; sa < va.size(); ++sa) {
                        if (!va[sa])
                            continue;
                        for (std::size_t sb = 0; sb < vb.size(); ++sb)
                            if (vb[sb])
                                out.flip(pos.at({ad1 + ad2,
                                                 static_cast<int>(sa),
                                                 bd1 + bd2,
                                                 static_cast<int>(sb)}));
                    }
                    r.cup[di][dj][i][j] = out;
                }

    // both factors are closed connected, so the product top degree is the
    // single class top(A) x top(B)
    r.fundamental = F2Vec(r.betti[r.dim]);
    r.fundamental.set(0, 1);
    return r;
}

RingBuilder surface_builder(int genus) {
    if (genus < 0)
        fail("invalid_argument", "genus must be nonnegative");
    RingBuilder r;
    r.dim = 2;
    r.betti = {1, 2 * genus, 1};
    r.labels.assign(3, {});
    r.labels[0] = {"1"};
    for (int i = 1; i <= genus; ++i) {
        r.labels[1].push_back("a" + std::to_string(i));
        r.labels[1].push_back("b" + std::to_string(i));
    }
    r.labels[2] = {"vol"};
    r.init_tensors();
    r.cup[0][0][0][0].set(0, 1);
    r.cup[0][2][0][0].set(0, 1);
    r.cup[2][0][0][0].set(0, 1);
    for (int i = 0; i < 2 * genus; ++i) {
        r.cup[0][1][0][i].set(i, 1);
        r.cup[1][0][i][0].set(i, 1);
    }
    // standard symplectic intersection form: a_i . b_i = vol
    for (int i = 0; i < genus; ++i) {
        r.cup[1][1][2 * i][2 * i + 1].set(0, 1);
        r.cup[1][1][2 * i + 1][2 * i].set(0, 1);
    }
    r.fundamental = F2Vec(1);
    r.fundamental.set(0, 1);
    return r;
}

} // namespace

CohClass CohomologyRing::zero_class(int degree) const {
    if (degree < 0 || degree > dim_)
        fail("degree_mismatch", "degree outside 0..dimension");
    return {degree, F2Vec(betti_[degree])};
}

CohClass CohomologyRing::basis_class(int degree, std::size_t index) const {
    CohClass c = zero_class(degree);
    if (index >= c.coords.size())
        fail("degree_mismatch", "basis index out of range");
    c.coords.set(index, 1);
    return c;
}

CohClass CohomologyRing::make_class(int degree, F2Vec coords) const {
    if (degree < 0 || degree > dim_)
        fail("degree_mismatch", "degree outside 0..dimension");
    if (coords.size() != static_cast<std::size_t>(betti_[degree]))
        fail("degree_mismatch",
             "coordinate length differs from the Betti number of degree " +
                 std::to_string(degree));
    return {degree, std::move(coords)};
}

const F2Vec& CohomologyRing::cup_entry(int di, int dj, std::size_t i,
                                       std::size_t j) const {
    return cup_[di][dj][i][j];
}

bool CohomologyRing::operator==(const CohomologyRing& o) const {
    return dim_ == o.dim_ && betti_ == o.betti_ && labels_ == o.labels_ &&
           cup_ == o.cup_ && fundamental_ == o.fundamental_;
}

CohClass cup(const CohomologyRing& ring, const CohClass& a,
             const CohClass& b) {
    if (a.degree < 0 || b.degree < 0 ||
        a.degree + b.degree > ring.dimension())
        fail("degree_overflow",
             "cup product degree " + std::to_string(a.degree + b.degree) +
                 " exceeds manifold dimension " +
                 std::to_string(ring.dimension()));
    if (a.coords.size() !=
            static_cast<std::size_t>(ring.betti()[a.degree]) ||
        b.coords.size() != static_cast<std::size_t>(ring.betti()[b.degree]))
        fail("degree_mismatch", "class coordinates do not fit this ring");
    CohClass r = ring.zero_class(a.degree + b.degree);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (!a.coords[i])
            continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j)
            if (b.coords[j])
                r.coords += ring.cup_entry(a.degree, b.degree, i, j);
    }
    return r;
}

int evaluate(const CohomologyRing& ring, const CohClass& top) {
    if (top.degree != ring.dimension())
        fail("degree_mismatch",
             "fundamental class only pairs with top-degree classes");
    if (top.coords.size() !=
        static_cast<std::size_t>(ring.betti()[ring.dimension()]))
        fail("degree_mismatch", "class coordinates do not fit this ring");
    return ring.fundamental_coords().dot(top.coords);
}

RingPtr torus3() {
    RingBuilder t2 = kunneth(circle_factor("l1"), circle_factor("l2"));
    RingBuilder b = kunneth(t2, circle_factor("l3"));
    b.name = "t3";
    b.base_spin = "all-bounding";
    return b.build();
}

RingPtr s1_x_s2() {
    RingBuilder b = kunneth(circle_factor("l"), sphere_factor("s"));
    b.name = "s1xs2";
    b.base_spin = "all-bounding";
    return b.build();
}

RingPtr torus2() {
    RingBuilder b = kunneth(circle_factor("l1"), circle_factor("l2"));
    b.name = "t2";
    b.base_spin = "all-bounding";
    return b.build();
}

RingPtr surface(int genus) {
    RingBuilder b = surface_builder(genus);
    b.name = "surface" + std::to_string(genus);
    return b.build();
}

// ---------------------------------------------------------------------------
// document I/O

namespace {

int as_bit(const json& j, const char* where) {
    if (!j.is_number_integer() || (j.get<int>() != 0 && j.get<int>() != 1))
        fail("schema_violation", std::string(where) + " must be 0 or 1");
    return j.get<int>();
}

F2Vec coords_from_json(const json& j, std::size_t n, const char* where) {
    if (!j.is_array() || j.size() != n)
        fail("schema_violation",
             std::string(where) + " must be an array of length " +
                 std::to_string(n));
    F2Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v.set(i, as_bit(j[i], where));
    return v;
}

} // namespace

RingPtr load_ring(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        fail("schema_violation", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("schema_violation", "ring document must be a JSON object");
    static const std::set<std::string> allowed = {
        "dimension", "betti", "labels", "cup", "fundamental_coords"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!allowed.count(it.key()))
            fail("schema_violation", "unknown field '" + it.key() + "'");
    for (const auto& k : allowed)
        if (!doc.contains(k))
            fail("schema_violation", "missing field '" + k + "'");

    RingBuilder b;
    if (!doc["dimension"].is_number_integer())
        fail("schema_violation", "dimension must be an integer");
    b.dim = doc["dimension"].get<int>();
    if (b.dim != 2 && b.dim != 3)
        fail("schema_violation", "dimension must be 2 or 3");

    if (!doc["betti"].is_array() ||
        doc["betti"].size() != static_cast<std::size_t>(b.dim + 1))
        fail("schema_violation", "betti must list b0..b_dim");
    for (const auto& x : doc["betti"]) {
        if (!x.is_number_integer() || x.get<int>() < 0)
            fail("schema_violation", "betti entries must be >= 0");
        b.betti.push_back(x.get<int>());
    }

    if (!doc["labels"].is_array() ||
        doc["labels"].size() != static_cast<std::size_t>(b.dim + 1))
        fail("schema_violation", "labels must have one array per degree");
    for (const auto& per_degree : doc["labels"]) {
        if (!per_degree.is_array())
            fail("schema_violation", "labels entries must be arrays");
        std::vector<std::string> ls;
        for (const auto& l : per_degree) {
            if (!l.is_string())
                fail("schema_violation", "labels must be strings");
            ls.push_back(l.get<std::string>());
        }
        b.labels.push_back(std::move(ls));
    }
    for (int d = 0; d <= b.dim; ++d)
        if (b.labels[d].size() != static_cast<std::size_t>(b.betti[d]))
            fail("schema_violation",
                 "label count differs from Betti number in degree " +
                     std::to_string(d));

    b.init_tensors();
    if (!doc["cup"].is_array())
        fail("schema_violation", "cup must be an array of entries");
    std::set<std::tuple<int, int, int, int>> seen;
    for (const auto& e : doc["cup"]) {
        if (!e.is_object())
            fail("schema_violation", "cup entries must be objects");
        static const std::set<std::string> ekeys = {"deg_i", "deg_j", "i",
                                                    "j", "result_coords"};
        for (auto it = e.begin(); it != e.end(); ++it)
            if (!ekeys.count(it.key()))
                fail("schema_violation",
                     "unknown cup entry field '" + it.key() + "'");
        for (const auto& k : ekeys)
            if (!e.contains(k))
                fail("schema_violation",
                     "cup entry missing field '" + k + "'");
        for (const char* k : {"deg_i", "deg_j", "i", "j"})
            if (!e[k].is_number_integer())
                fail("schema_violation",
                     std::string("cup entry field '") + k +
                         "' must be an integer");
        int di = e["deg_i"].get<int>();
        int dj = e["deg_j"].get<int>();
        int i = e["i"].get<int>();
        int j = e["j"].get<int>();
        if (di < 0 || dj < 0 || di + dj > b.dim)
            fail("schema_violation", "cup entry degrees out of range");
        if (i < 0 || i >= b.betti[di] || j < 0 || j >= b.betti[dj])
            fail("schema_violation", "cup entry basis index out of range");
        if (!seen.insert({di, dj, i, j}).second)
            fail("schema_violation", "duplicate cup entry");
        b.cup[di][dj][i][j] = coords_from_json(
            e["result_coords"], b.betti[di + dj], "result_coords");
    }

    b.fundamental = coords_from_json(doc["fundamental_coords"],
                                     b.betti[b.dim], "fundamental_coords");
    return b.build();
}

std::string ring_document(const CohomologyRing& ring) {
    json doc;
    doc["dimension"] = ring.dimension();
    doc["betti"] = ring.betti();
    doc["labels"] = ring.labels();
    json entries = json::array();
    int dim = ring.dimension();
    for (int di = 0; di <= dim; ++di)
        for (int dj = 0; di + dj <= dim; ++dj)
            for (int i = 0; i < ring.betti()[di]; ++i)
                for (int j = 0; j < ring.betti()[dj]; ++j) {
                    const F2Vec& v = ring.cup_entry(di, dj, i, j);
                    if (v.is_zero())
                        continue;
                    json e;
                    e["deg_i"] = di;
                    e["deg_j"] = dj;
                    e["i"] = i;
                    e["j"] = j;
                    json coords = json::array();
                    for (std::size_t k = 0; k < v.size(); ++k)
                        coords.push_back(v[k]);
                    e["result_coords"] = coords;
                    entries.push_back(e);
                }
    doc["cup"] = entries;
    json fund = json::array();
    const F2Vec& f = ring.fundamental_coords();
    for (std::size_t k = 0; k < f.size(); ++k)
        fund.push_back(f[k]);
    doc["fundamental_coords"] = fund;
    return doc.dump(2);
}

std::vector<CohClass> all_classes(const CohomologyRing& ring, int degree) {
    if (degree < 0 || degree > ring.dimension())
        fail("degree_mismatch", "degree outside 0..dimension");
    std::size_t n = static_cast<std::size_t>(ring.betti()[degree]);
    if (n >= 63)
        fail("budget_exceeded", "degree has too many basis elements to "
                                "enumerate all classes");
    std::vector<CohClass> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        out.push_back({degree, F2Vec::from_mask(m, n)});
    return out;
}

// ---------------------------------------------------------------------------
// class grammar

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

CohClass parse_class(const CohomologyRing& ring, const std::string& text,
                     int degree) {
    std::string t = trim(text);
    if (t.empty())
        fail("parse_error", "empty class expression");
    if (t == "0")
        return ring.zero_class(degree);

    // label -> (degree, index)
    std::map<std::string, std::pair<int, std::size_t>> index;
    for (int d = 0; d <= ring.dimension(); ++d)
        for (std::size_t i = 0; i < ring.labels()[d].size(); ++i)
            index[ring.labels()[d][i]] = {d, i};

    CohClass sum = ring.zero_class(degree);
    for (const std::string& raw : split(t, '+')) {
        std::string summand = trim(raw);
        if (summand.empty())
            fail("parse_error", "empty summand in class expression");
        CohClass prod;
        bool first = true;
        for (const std::string& rawf : split(summand, '^')) {
            std::string lab = trim(rawf);
            auto it = index.find(lab);
            if (it == index.end())
                fail("parse_error",
                     "unknown basis label '" + lab + "' for ring " +
                         ring.name());
            CohClass f = ring.basis_class(it->second.first,
                                          it->second.second);
            prod = first ? f : cup(ring, prod, f);
            first = false;
        }
        if (prod.degree != degree)
            fail("degree_mismatch",
                 "class expression has degree " +
                     std::to_string(prod.degree) + ", expected " +
                     std::to_string(degree));
        sum.coords += prod.coords;
    }
    return sum;
}

std::string class_str(const CohomologyRing& ring, const CohClass& c) {
    if (c.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        if (!c.coords[i])
            continue;
        if (!out.empty())
            out += "+";
        out += ring.labels()[c.degree][i];
    }
    return out;
}

} // namespace spincs
