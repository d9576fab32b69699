#include "cli_run.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spincs/action_eval.hpp"
#include "spincs/cohomology.hpp"
#include "spincs/flat_moduli.hpp"
#include "spincs/graded_lines.hpp"
#include "spincs/ko.hpp"
#include "spincs/rep_level.hpp"
#include "spincs/spin_quadratic.hpp"

namespace spincs {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("io_error", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

long long budget_from_env() {
    const char* raw = std::getenv("SPINCS_BUDGET");
    if (!raw)
        return 10000000;
    try {
        std::size_t used = 0;
        long long v = std::stoll(raw, &used);
        if (used != std::string(raw).size() || v <= 0)
            throw std::invalid_argument("range");
        return v;
    } catch (const std::exception&) {
        fail("invalid_argument",
             "SPINCS_BUDGET must be a positive integer");
    }
}

RingPtr resolve_ring(const std::string& name, const std::string& file) {
    if (!file.empty() && !name.empty())
        fail("invalid_argument", "give either a ring name or a ring file");
    if (!file.empty())
        return load_ring(read_file(file));
    if (name == "t3")
        return torus3();
    if (name == "s1xs2")
        return s1_x_s2();
    if (name == "t2")
        return torus2();
    if (name.rfind("surface:", 0) == 0) {
        std::string digits = name.substr(8);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            fail("parse_error", "bad genus in '" + name + "'");
        return surface(std::stoi(digits));
    }
    fail("parse_error", "unknown ring '" + name +
                            "' (t3, s1xs2, t2, surface:<g>)");
}

// "w1expr;w2expr" -> KO class
KOClass parse_ko(const RingPtr& ring, const std::string& text) {
    std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        fail("parse_error", "class must be given as \"w1;w2\"");
    CohClass w1 = parse_class(*ring, text.substr(0, semi), 1);
    CohClass w2 = parse_class(*ring, text.substr(semi + 1), 2);
    return ko_class(ring, w1, w2);
}

std::string ko_str(const KOClass& x) {
    return "(" + class_str(*x.ring, x.w1) + "; " + class_str(*x.ring, x.w2) +
           ")";
}

Rational parse_rational(const std::string& s) {
    try {
        std::size_t slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)),
                        std::stoll(s.substr(slash + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("parse_error", "expected a rational 'p' or 'p/q', got '" + s +
                                "'");
    }
}

LieVec parse_lie(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        fail("parse_error",
             "Lie algebra vectors have three rational coordinates");
    return {parse_rational(parts[0]), parse_rational(parts[1]),
            parse_rational(parts[2])};
}

TangentPair parse_tangent(const std::string& s) {
    std::size_t semi = s.find(';');
    if (semi == std::string::npos)
        fail("parse_error", "tangents are given as \"dx;dy\"");
    return {parse_lie(s.substr(0, semi)), parse_lie(s.substr(semi + 1))};
}

ConstantConnection parse_connection(const std::string& s) {
    std::size_t semi = s.find(';');
    if (semi == std::string::npos)
        fail("parse_error", "T^2 connections are given as \"B1;B2\"");
    return {{parse_lie(s.substr(0, semi)), parse_lie(s.substr(semi + 1))}};
}

json lie_json(const LieVec& v) {
    return json::array({v[0].str(), v[1].str(), v[2].str()});
}

json phase_json(const Phase& p) {
    json j;
    j["angle"] = p.angle().str();
    j["display"] = p.str();
    return j;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json doc_head(const std::string& kind) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = kind;
    return doc;
}

struct Options {
    bool structured = false;
    std::ostream* out = nullptr;
};

// ---------------------------------------------------------------------- ring

void cmd_ring(const Options& opt, const std::string& name,
              const std::string& file, bool full) {
    RingPtr ring = resolve_ring(name, file);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("ring");
        doc["name"] = ring->name();
        doc["ring"] = json::parse(ring_document(*ring));
        emit(out, doc);
        return;
    }
    out << "ring " << ring->name() << ": dimension " << ring->dimension()
        << "\n";
    out << "betti:";
    for (int b : ring->betti())
        out << " " << b;
    out << "\n";
    for (int d = 0; d <= ring->dimension(); ++d) {
        out << "H^" << d << ":";
        if (ring->labels()[d].empty())
            out << " (none)";
        for (const auto& l : ring->labels()[d])
            out << " " << l;
        out << "\n";
    }
    out << "base spin structure: " << ring->base_spin_name() << "\n";
    if (full) {
        for (int di = 0; di <= ring->dimension(); ++di)
            for (int dj = 0; di + dj <= ring->dimension(); ++dj)
                for (int i = 0; i < ring->betti()[di]; ++i)
                    for (int j = 0; j < ring->betti()[dj]; ++j) {
                        const F2Vec& v = ring->cup_entry(di, dj, i, j);
                        if (v.is_zero())
                            continue;
                        out << ring->labels()[di][i] << " ^ "
                            << ring->labels()[dj][j] << " = "
                            << class_str(*ring,
                                         {di + dj, v})
                            << "\n";
                    }
    }
}

// ------------------------------------------------------------------------ ko

void cmd_ko(const Options& opt, const std::string& name,
            const std::string& file, const std::string& x_text,
            const std::string& y_text, const std::string& l0_text, bool do_add,
            bool do_neg, bool do_table) {
    RingPtr ring = resolve_ring(name, file);
    std::ostream& out = *opt.out;
    int ops = (do_add ? 1 : 0) + (do_neg ? 1 : 0) +
              (l0_text.empty() ? 0 : 1) + (do_table ? 1 : 0);
    if (ops != 1)
        fail("invalid_argument",
             "choose exactly one of --add, --neg, --tensor-line, --table");

    if (do_table) {
        std::vector<KOClass> all = all_ko_classes(ring);
        if (opt.structured) {
            json doc = doc_head("ko_table");
            doc["ring"] = ring->name();
            json rows = json::array();
            for (const KOClass& a : all)
                for (const KOClass& b : all) {
                    KOClass c = add(a, b);
                    json r;
                    r["x"] = ko_str(a);
                    r["y"] = ko_str(b);
                    r["sum"] = ko_str(c);
                    rows.push_back(r);
                }
            doc["rows"] = rows;
            emit(out, doc);
        } else {
            out << "KO group table of " << ring->name() << " ("
                << all.size() << " elements)\n";
            for (const KOClass& a : all)
                for (const KOClass& b : all)
                    out << ko_str(a) << " + " << ko_str(b) << " = "
                        << ko_str(add(a, b)) << "\n";
        }
        return;
    }

    if (x_text.empty())
        fail("invalid_argument", "--x is required");
    KOClass x = parse_ko(ring, x_text);
    KOClass result = x;
    std::string op;
    if (do_add) {
        if (y_text.empty())
            fail("invalid_argument", "--add needs --y");
        result = add(x, parse_ko(ring, y_text));
        op = "add";
    } else if (do_neg) {
        result = neg(x);
        op = "neg";
    } else {
        result = tensor_line(x, parse_class(*ring, l0_text, 1));
        op = "tensor_line";
    }
    if (opt.structured) {
        json doc = doc_head("ko");
        doc["ring"] = ring->name();
        doc["op"] = op;
        doc["w1"] = class_str(*ring, result.w1);
        doc["w2"] = class_str(*ring, result.w2);
        json c1 = json::array(), c2 = json::array();
        for (std::size_t i = 0; i < result.w1.coords.size(); ++i)
            c1.push_back(result.w1.coords[i]);
        for (std::size_t i = 0; i < result.w2.coords.size(); ++i)
            c2.push_back(result.w2.coords[i]);
        doc["w1_coords"] = c1;
        doc["w2_coords"] = c2;
        emit(out, doc);
    } else {
        out << op << ": " << ko_str(result) << "\n";
    }
}

// -------------------------------------------------------------------- q-table

void cmd_q_table(const Options& opt, const std::string& name,
                 const std::string& file, const std::string& e_text,
                 const std::string& sigma_text) {
    RingPtr ring = resolve_ring(name, file);
    std::ostream& out = *opt.out;
    KOClass E = parse_ko(ring, e_text);
    SpinStructure sigma = base_spin(ring);
    if (!sigma_text.empty())
        sigma = spin_shift(sigma, parse_class(*ring, sigma_text, 1));

    std::vector<CohClass> h1 = all_classes(*ring, 1);
    if (opt.structured) {
        json doc = doc_head("q_table");
        doc["ring"] = ring->name();
        doc["e_w1"] = class_str(*ring, E.w1);
        doc["e_w2"] = class_str(*ring, E.w2);
        doc["sigma"] = spin_str(sigma);
        json rows = json::array();
        for (const CohClass& l : h1) {
            json r;
            r["l"] = class_str(*ring, l);
            r["q"] = phase_json(q(E, l, sigma));
            rows.push_back(r);
        }
        doc["rows"] = rows;
        emit(out, doc);
    } else {
        out << "q over " << ring->name() << ", E = " << ko_str(E)
            << ", sigma = " << spin_str(sigma) << "\n";
        for (const CohClass& l : h1)
            out << class_str(*ring, l) << " -> " << q(E, l, sigma).str()
                << "\n";
    }
}

// --------------------------------------------------------------------- level

void cmd_level(const Options& opt, const std::vector<std::string>& words) {
    if (words.empty())
        fail("invalid_argument",
             "level needs a rep expression, e.g. level su2 \"std - 4\"");
    std::string text;
    for (const auto& w : words) {
        if (!text.empty())
            text += " ";
        text += w;
    }
    if (text.find(':') == std::string::npos) {
        // two-positional form: group then expression
        std::size_t sp = text.find(' ');
        if (sp == std::string::npos)
            fail("parse_error",
                 "rep expression must carry a group, e.g. \"su2: std-4\"");
        text = text.substr(0, sp) + ":" + text.substr(sp + 1);
    }
    VirtualRep rho = parse_rep(text);
    LevelClass lv = lambda(rho);
    long long rk = rank(rho);
    Rational p11 = pairing(rho, 1, 1);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("level");
        doc["group"] = group_str(lv.group);
        doc["coeff"] = lv.coeff;
        doc["p1"] = lv.p1;
        doc["w2"] = lv.w2;
        doc["rank"] = rk;
        doc["pairing_11"] = p11.str();
        doc["rank_zero"] = (rk == 0);
        emit(out, doc);
    } else {
        out << "group: " << group_str(lv.group) << "\n";
        out << "coeff: " << lv.coeff << "\n";
        out << "p1: " << lv.p1 << "\n";
        out << "w2: " << lv.w2 << "\n";
        out << "rank: " << rk << "\n";
        out << "pairing(1,1): " << p11.str() << "\n";
        if (rk != 0)
            out << "warning: rank is nonzero, the action is metric-"
                   "dependent at this level\n";
    }
}

// ---------------------------------------------------------------------- glue

void cmd_glue(const Options& opt, const std::string& file,
              const std::string& inline_doc) {
    if (file.empty() == inline_doc.empty())
        fail("invalid_argument",
             "give the expression with exactly one of --file or --expr");
    std::string text = file.empty() ? inline_doc : read_file(file);
    LineExpr e = run_line_document(text);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("glue");
        doc["result"] = json::parse(line_expr_document(e));
        emit(out, doc);
    } else {
        out << "factors:";
        if (e.factors.empty())
            out << " (none)";
        for (const GradedLine& f : e.factors)
            out << " " << f.label << (f.dual ? "*" : "") << "[|"
                << f.parity << "|]";
        out << "\n";
        out << "phase: " << e.phase.str();
        for (const std::string& s : e.symbols)
            out << " * " << s;
        out << "\n";
    }
}

// -------------------------------------------------------------------- moduli

void cmd_moduli(const Options& opt, const std::string& g_name,
                const std::string& g_file, const std::string& pi1_name) {
    if (g_file.empty() == g_name.empty())
        fail("invalid_argument", "give the group with exactly one of --g "
                                 "or --g-file");
    FiniteGroup G = g_file.empty() ? named_group(g_name)
                                   : group_from_document(read_file(g_file));
    FPGroup pi1 = named_pi1(pi1_name);
    std::vector<GaugeClass> classes =
        enumerate_moduli(pi1, G, budget_from_env());

    long long total = 0;
    for (const auto& c : classes)
        total += c.orbit_size;

    auto rep_names = [&](const GaugeClass& c) {
        std::string s;
        for (std::size_t i = 0; i < c.representative.size(); ++i) {
            if (i)
                s += ",";
            s += G.element_name(c.representative[i]);
        }
        return s.empty() ? std::string("()") : s;
    };

    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("moduli");
        doc["group"] = G.name();
        doc["pi1"] = pi1.name;
        doc["class_count"] = classes.size();
        doc["total_tuples"] = total;
        json rows = json::array();
        for (const auto& c : classes) {
            json r;
            r["representative"] = rep_names(c);
            r["orbit_size"] = c.orbit_size;
            r["stabilizer_order"] = stabilizer_pi0_report(c);
            json stab = json::array();
            for (int s : c.stabilizer)
                stab.push_back(G.element_name(s));
            r["stabilizer"] = stab;
            rows.push_back(r);
        }
        doc["classes"] = rows;
        emit(out, doc);
    } else {
        out << "moduli of pi1 = " << pi1.name << " into " << G.name()
            << "\n";
        if (classes.empty()) {
            out << "0 classes\n";
            return;
        }
        out << "representative | orbit | stabilizer\n";
        for (const auto& c : classes)
            out << rep_names(c) << " | " << c.orbit_size << " | "
                << stabilizer_pi0_report(c) << "\n";
        out << classes.size() << " classes, " << total
            << " homomorphisms in total\n";
    }
}

// ---------------------------------------------------------- symplectic/moment

void cmd_symplectic(const Options& opt, const std::string& a1,
                    const std::string& a2, const std::string& rep_text) {
    VirtualRep rho = parse_rep(rep_text);
    Rational v = symplectic(parse_tangent(a1), parse_tangent(a2), rho);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("symplectic");
        doc["value"] = v.str();
        doc["normalization"] = "unit-volume T^2";
        emit(out, doc);
    } else {
        out << "omega(A1, A2) = " << v.str() << "   (unit-volume T^2)\n";
    }
}

void cmd_moment(const Options& opt, const std::string& b,
                const std::string& zeta, const std::string& rep_text) {
    VirtualRep rho = parse_rep(rep_text);
    ConstantConnection B = parse_connection(b);
    LieVec z = parse_lie(zeta);
    LieVec omega = curvature(B);
    Rational v = moment(B, z, rho);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("moment");
        doc["curvature"] = lie_json(omega);
        doc["value"] = v.str();
        doc["flat"] = lie_is_zero(omega);
        doc["normalization"] = "unit-volume T^2";
        emit(out, doc);
    } else {
        out << "curvature [B1, B2] = (" << omega[0].str() << ", "
            << omega[1].str() << ", " << omega[2].str() << ")\n";
        out << "mu_zeta(B) = " << v.str() << "   (unit-volume T^2)\n";
    }
}

// -------------------------------------------------------------------- action

void cmd_action_spin_ratio(const Options& opt, const std::string& name,
                           const std::string& file, const std::string& e_text,
                           const std::string& l_text,
                           const std::string& sigma_text) {
    RingPtr ring = resolve_ring(name, file);
    KOClass E = parse_ko(ring, e_text);
    CohClass l = parse_class(*ring, l_text, 1);
    SpinStructure sigma = base_spin(ring);
    if (!sigma_text.empty())
        sigma = spin_shift(sigma, parse_class(*ring, sigma_text, 1));
    Phase p = spin_ratio(E, l, sigma);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("spin_ratio");
        doc["ring"] = ring->name();
        doc["value"] = phase_json(p);
        emit(out, doc);
    } else {
        out << "tau(D_{l (x) rho A}) / tau(D_{rho A}) = " << p.str() << "\n";
    }
}

void cmd_action_product_tau(const Options& opt, int w2,
                            const std::string& spin) {
    Phase p = product_tau(w2, parse_circle_spin(spin));
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("product_tau");
        doc["value"] = phase_json(p);
        emit(out, doc);
    } else {
        out << "tau(T^2 x S^1) = " << p.str() << "\n";
    }
}

void cmd_action_detector(const Options& opt, const std::string& name,
                         const std::string& file, const std::string& e_text,
                         const std::string& l_text) {
    RingPtr ring = resolve_ring(name, file);
    KOClass E = parse_ko(ring, e_text);
    CohClass l = parse_class(*ring, l_text, 1);
    int v = cobordism_detector(E, l);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("detector");
        doc["ring"] = ring->name();
        doc["value"] = v;
        doc["bounds"] = (v == 0);
        emit(out, doc);
    } else {
        out << "detector = " << v << " ("
            << (v ? "does not bound" : "no obstruction") << ")\n";
    }
}

void cmd_action_spin_indep(const Options& opt, const std::string& group,
                           long long coeff) {
    LevelClass lv = level_from_coeff(parse_group(group), coeff);
    bool indep = spin_independence_check(lv);
    std::ostream& out = *opt.out;
    if (opt.structured) {
        json doc = doc_head("spin_independence");
        doc["group"] = group_str(lv.group);
        doc["coeff"] = lv.coeff;
        doc["w2"] = lv.w2;
        doc["independent"] = indep;
        emit(out, doc);
    } else {
        out << "level " << coeff << " of " << group_str(lv.group)
            << (indep ? " is" : " is not")
            << " independent of the spin structure\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact calculator for spin Chern-Simons topology"};
    app.require_subcommand(1);

    Options opt;
    opt.out = &out;

    auto add_structured = [&](CLI::App* sub) {
        sub->add_flag("--structured", opt.structured,
                      "emit a single JSON document");
    };

    // ring
    std::string r_name, r_file;
    bool r_full = false;
    CLI::App* ring = app.add_subcommand("ring", "inspect a cohomology ring");
    ring->add_option("--name", r_name, "catalog ring (t3, s1xs2, t2, "
                                       "surface:<g>)");
    ring->add_option("--file", r_file, "ring document file");
    ring->add_flag("--full", r_full, "print all nonzero cup products");
    add_structured(ring);

    // ko
    std::string k_name, k_file, k_x, k_y, k_l0;
    bool k_add = false, k_neg = false, k_table = false;
    CLI::App* ko = app.add_subcommand("ko", "KO-class arithmetic");
    ko->add_option("--ring", k_name, "catalog ring name");
    ko->add_option("--ring-file", k_file, "ring document file");
    ko->add_option("--x", k_x, "class \"w1;w2\"");
    ko->add_option("--y", k_y, "second class for --add");
    ko->add_flag("--add", k_add, "x + y under the twisted law");
    ko->add_flag("--neg", k_neg, "group inverse of x");
    ko->add_option("--tensor-line", k_l0, "tensor x by the line with this "
                                          "w1");
    ko->add_flag("--table", k_table, "emit the full group table");
    add_structured(ko);

    // q-table
    std::string q_name, q_file, q_e, q_sigma;
    CLI::App* qt = app.add_subcommand("q-table",
                                      "table of q(E, l) over all of H^1");
    qt->add_option("--ring", q_name, "catalog ring name");
    qt->add_option("--ring-file", q_file, "ring document file");
    qt->add_option("--e", q_e, "class \"w1;w2\"")->required();
    qt->add_option("--sigma", q_sigma, "spin offset in H^1");
    add_structured(qt);

    // level
    std::vector<std::string> lv_words;
    CLI::App* level = app.add_subcommand("level",
                                         "level data of a virtual rep");
    level->add_option("expr", lv_words,
                      "rep expression, e.g. su2 \"std - 4\"");
    add_structured(level);

    // glue
    std::string g_file, g_expr;
    CLI::App* glue = app.add_subcommand("glue",
                                        "reduce a graded-line expression");
    glue->add_option("--file", g_file, "expression document file");
    glue->add_option("--expr", g_expr, "inline expression document");
    add_structured(glue);

    // moduli
    std::string m_g, m_gfile, m_pi1;
    CLI::App* moduli = app.add_subcommand("moduli",
                                          "flat-connection moduli classes");
    moduli->add_option("--g", m_g, "catalog group (Z/n, S3, Q8, D4)");
    moduli->add_option("--g-file", m_gfile, "group table document file");
    moduli->add_option("--pi1", m_pi1,
                       "catalog pi1 (Z<n>, free<n>, surface<g>)")
        ->required();
    add_structured(moduli);

    // symplectic
    std::string s_a1, s_a2, s_rep = "su2: std - 4";
    CLI::App* symp = app.add_subcommand("symplectic",
                                        "symplectic form on tangents");
    symp->add_option("--a1", s_a1, "tangent \"dx;dy\"")->required();
    symp->add_option("--a2", s_a2, "tangent \"dx;dy\"")->required();
    symp->add_option("--rep", s_rep, "rep expression with group prefix");
    add_structured(symp);

    // moment
    std::string mo_b, mo_zeta, mo_rep = "su2: std - 4";
    CLI::App* mom = app.add_subcommand("moment", "gauge moment map value");
    mom->add_option("--b", mo_b, "connection \"B1;B2\"")->required();
    mom->add_option("--zeta", mo_zeta, "infinitesimal gauge direction")
        ->required();
    mom->add_option("--rep", mo_rep, "rep expression with group prefix");
    add_structured(mom);

    // action
    CLI::App* action = app.add_subcommand("action", "action-phase queries");
    action->require_subcommand(1);
    std::string a_name, a_file, a_e, a_l, a_sigma;
    CLI::App* sr = action->add_subcommand("spin-ratio",
                                          "spin-structure ratio of actions");
    sr->add_option("--ring", a_name, "catalog ring name");
    sr->add_option("--ring-file", a_file, "ring document file");
    sr->add_option("--e", a_e, "class \"w1;w2\"")->required();
    sr->add_option("--l", a_l, "degree-1 class")->required();
    sr->add_option("--sigma", a_sigma, "spin offset in H^1");
    add_structured(sr);

    int pt_w2 = 0;
    std::string pt_spin;
    CLI::App* pt = action->add_subcommand("product-tau",
                                          "action of T^2 x S^1");
    pt->add_option("--w2", pt_w2, "w2 evaluation on the surface (0 or 1)")
        ->required();
    pt->add_option("--spin", pt_spin, "circle spin structure "
                                      "(bounding|nonbounding)")
        ->required();
    add_structured(pt);

    std::string d_name, d_file, d_e, d_l;
    CLI::App* det = action->add_subcommand("detector",
                                           "spin-cobordism detector");
    det->add_option("--ring", d_name, "catalog ring name");
    det->add_option("--ring-file", d_file, "ring document file");
    det->add_option("--e", d_e, "class \"w1;w2\"")->required();
    det->add_option("--l", d_l, "degree-1 class")->required();
    add_structured(det);

    std::string si_group;
    long long si_coeff = 0;
    CLI::App* si = action->add_subcommand("spin-indep",
                                          "spin independence of a level");
    si->add_option("--group", si_group, "su2 or so3")->required();
    si->add_option("--coeff", si_coeff, "level coefficient")->required();
    add_structured(si);

    std::vector<const char*> argv;
    argv.push_back("spincs");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ring->parsed())
            cmd_ring(opt, r_name, r_file, r_full);
        else if (ko->parsed())
            cmd_ko(opt, k_name, k_file, k_x, k_y, k_l0, k_add, k_neg,
                   k_table);
        else if (qt->parsed())
            cmd_q_table(opt, q_name, q_file, q_e, q_sigma);
        else if (level->parsed())
            cmd_level(opt, lv_words);
        else if (glue->parsed())
            cmd_glue(opt, g_file, g_expr);
        else if (moduli->parsed())
            cmd_moduli(opt, m_g, m_gfile, m_pi1);
        else if (symp->parsed())
            cmd_symplectic(opt, s_a1, s_a2, s_rep);
        else if (mom->parsed())
            cmd_moment(opt, mo_b, mo_zeta, mo_rep);
        else if (action->parsed()) {
            if (sr->parsed())
                cmd_action_spin_ratio(opt, a_name, a_file, a_e, a_l,
                                      a_sigma);
            else if (pt->parsed())
                cmd_action_product_tau(opt, pt_w2, pt_spin);
            else if (det->parsed())
                cmd_action_detector(opt, d_name, d_file, d_e, d_l);
            else if (si->parsed())
                cmd_action_spin_indep(opt, si_group, si_coeff);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace spincs
