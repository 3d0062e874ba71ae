#include <CLI11.hpp>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <knot/catalog.hpp>
#include <knot/condense.hpp>
#include <knot/enumerate.hpp>
#include <knot/flype.hpp>
#include <knot/interlace.hpp>
#include <knot/invariants.hpp>

using namespace knot;

namespace {

std::string catalog_path;

std::string default_catalog() {
    if (!catalog_path.empty()) return catalog_path;
    if (const char* env = std::getenv("KNOT_CATALOG")) return env;
    return "data/catalog.txt";
}

bool looks_like_name(const std::string& s) {
    return s.find('_') != std::string::npos && s.find(' ') == std::string::npos;
}

GaussCode resolve(const std::string& arg) {
    if (looks_like_name(arg)) {
        auto cat = load_catalog(default_catalog());
        const CatalogEntry* e = find_entry(cat, arg);
        if (!e) throw CLI::ValidationError("unknown catalog name: " + arg);
        return e->code;
    }
    return GaussCode::parse(arg);
}

const char* roman(int c) { return c == 1 ? "i" : c == 2 ? "ii" : "iii"; }

std::string frac(int num, int den) {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void print_graph(const Graph& g) {
    for (int v = 0; v < g.size(); v++) {
        printf("%s [w=%d]:", g.label[v].c_str(), g.size() ? g.weight[v] : 0);
        for (int u : g.neighbors(v)) {
            printf(" %s", g.label[u].c_str());
            if (!g.esign.empty()) printf("%c", g.esign[v][u] > 0 ? '+' : '-');
            if (!g.dir.empty() && g.dir[v][u]) printf(">");
        }
        printf("\n");
    }
}

void print_graph_dot(const Graph& g) {
    bool directed = !g.dir.empty();
    printf("%s lg {\n", directed ? "digraph" : "graph");
    for (int v = 0; v < g.size(); v++)
        printf("  n%d [label=\"%s[w=%d]\"];\n", v, g.label[v].c_str(), g.weight[v]);
    for (int v = 0; v < g.size(); v++)
        for (int u = v + 1; u < g.size(); u++) {
            if (!g.adj[v][u]) continue;
            std::string suffix;
            if (!g.esign.empty()) suffix = g.esign[v][u] > 0 ? "+" : "-";
            if (!directed) {
                printf("  n%d -- n%d%s;\n", v, u,
                       suffix.empty() ? "" : (" [label=\"" + suffix + "\"]").c_str());
            } else {
                if (g.dir[v][u])
                    printf("  n%d -> n%d [label=\"%s\"];\n", v, u, suffix.c_str());
                if (g.dir[u][v])
                    printf("  n%d -> n%d [label=\"%s\"];\n", u, v, suffix.c_str());
                if (!g.dir[v][u] && !g.dir[u][v])
                    printf("  n%d -> n%d [dir=none, label=\"%s\"];\n", v, u, suffix.c_str());
            }
        }
    printf("}\n");
}

int cmd_validate(const std::string& arg) {
    GaussCode code = resolve(arg);
    if (code.has_ou() && code.has_sign()) {
        validate_signed_code(code);
        printf("valid: signed code has a matching spherical embedding\n");
        return 0;
    }
    auto v = check_realizability(code);
    if (!v.realizable()) {
        if (v.failed_condition == 1) {
            // witness reads "vertex N has ..."; echo the location
            auto has = v.witness.find(" has ");
            printf("not realizable: condition (i) fails at %s\n", v.witness.substr(0, has).c_str());
        } else {
            printf("not realizable: condition (%s) fails: %s\n", roman(v.failed_condition),
                   v.witness.c_str());
        }
        return 1;
    }
    printf("realizable: %lld spherical realization(s)\n", count_realizations(code));
    return 0;
}

int cmd_embed(const std::string& arg) {
    GaussCode code = resolve(arg);
    SignedDiagram sd = make_signed(code);
    auto signs = compute_signs(sd.d);
    printf("crossings: %d\nfaces: %d\n", sd.d.crossings(), sd.d.face_count());
    printf("code: %s\n", sd.code().to_string().c_str());
    printf("epsilon:");
    for (int e : sd.eps) printf(" %+d", e);
    printf("\nwrithe: %d\n", signs.writhe);
    return 0;
}

int cmd_lg(const std::string& arg, bool condense, bool eps, bool alpha, bool dot) {
    GaussCode code = resolve(arg);
    if (condense) {
        auto ng = neighborhood_graph(build_interlacement(GaussCode(code.letters(), std::nullopt, std::nullopt)));
        dot ? print_graph_dot(ng.g) : print_graph(ng.g);
        return 0;
    }
    if (eps || alpha) {
        Graph g = build_enhanced_lg(make_signed(code), true, alpha);
        // render vertex signs as esign-style +/- on the vertex labels
        for (int v = 0; v < g.size(); v++) g.label[v] += g.weight[v] > 0 ? "+" : "-";
        if (!eps)
            for (int v = 0; v < g.size(); v++) g.weight[v] = 0;
        dot ? print_graph_dot(g) : print_graph(g);
        return 0;
    }
    Graph g = build_interlacement(GaussCode(code.letters(), std::nullopt, std::nullopt));
    dot ? print_graph_dot(g) : print_graph(g);
    return 0;
}

int cmd_cwcd(const std::string& arg, bool dot) {
    SignedDiagram sd = make_signed(resolve(arg));
    WeightedChordDiagram w = build_cwcd(sd);
    if (dot) {
        printf("graph cwcd {\n  layout=circo;\n");
        for (int s = 0; s < w.slots; s++) printf("  s%d [shape=point];\n", s);
        for (int s = 0; s < w.slots; s++) printf("  s%d -- s%d [penwidth=2];\n", s, (s + 1) % w.slots);
        for (int s = 0; s < w.slots; s++)
            if (w.skel_partner[s] > s)
                printf("  s%d -- s%d [label=\"%s\", style=dashed];\n", s, w.skel_partner[s],
                       frac(w.skel_num[s], w.skel_den[s]).c_str());
        for (size_t i = 0; i < w.gap_chords.size(); i++) {
            auto& c = w.gap_chords[i];
            printf("  g%zu_a [shape=point]; g%zu_b [shape=point];\n", i, i);
            printf("  g%zu_a -- g%zu_b [label=\"%s\", style=dotted];\n", i, i,
                   frac(c.num, c.den).c_str());
        }
        printf("}\n");
        return 0;
    }
    printf("skeleton slots: %d\n", w.slots);
    for (int s = 0; s < w.slots; s++)
        if (w.skel_partner[s] > s)
            printf("chord %d-%d weight %s\n", s, w.skel_partner[s],
                   frac(w.skel_num[s], w.skel_den[s]).c_str());
    for (auto& c : w.gap_chords)
        printf("gap chord %d-%d weight %s\n", c.g1, c.g2, frac(c.num, c.den).c_str());
    printf("canonical: %s\n", cwcd_canonical(w).c_str());
    return 0;
}

int cmd_orbit(const std::string& arg) {
    SignedDiagram sd = make_signed(resolve(arg));
    FlypeOrbit orbit = enumerate_orbit(sd);
    printf("orbit size: %zu\n", orbit.members.size());
    for (size_t i = 0; i < orbit.members.size(); i++)
        printf("member %zu: %s\n", i, orbit.members[i].code().to_string().c_str());
    for (auto& mv : orbit.moves)
        printf("move: %d -> %d (crossing %d)\n", mv.from, mv.to, mv.crossing + 1);
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
    SignedDiagram sa = make_signed(resolve(a));
    SignedDiagram sb = make_signed(resolve(b));
    if (same_knot(sa, sb)) {
        printf("same knot\n");
    } else if (same_knot(sa, mirror_diagram(sb))) {
        printf("mirror images\n");
    } else {
        printf("different knots\n");
    }
    return 0;
}

int cmd_chirality(const std::string& arg) {
    SignedDiagram sd = make_signed(resolve(arg));
    auto prof = chirality_profile(sd);
    if (prof.achiral_plus && prof.achiral_minus)
        printf("achiral\n");
    else
        printf("%s\n", prof.verdict().c_str());
    printf("invertible: %s\n", prof.invertible ? "yes" : "no");
    auto sym = symmetry_group(sd);
    printf("symmetry order: %d\n", sym.order);
    return 0;
}

int cmd_mutants(const std::string& arg, const std::string& tangle, const std::string& sym_name) {
    SignedDiagram sd = make_signed(resolve(arg));
    std::vector<char> inside(sd.d.crossings(), 0);
    std::string tok;
    for (size_t i = 0; i <= tangle.size(); i++) {
        if (i < tangle.size() && tangle[i] != ',') {
            tok += tangle[i];
            continue;
        }
        int label = std::stoi(tok) - 1;
        if (label < 0 || label >= sd.d.crossings())
            throw CLI::ValidationError("crossing out of range: " + tok);
        inside[label] = 1;
        tok.clear();
    }
    TangleSym sym;
    if (sym_name == "Id") sym = TangleSym::Id;
    else if (sym_name == "H") sym = TangleSym::H;
    else if (sym_name == "V") sym = TangleSym::V;
    else if (sym_name == "pi") sym = TangleSym::Pi;
    else throw CLI::ValidationError("unknown symmetry: " + sym_name);
    SignedDiagram out = mutate(sd, inside, sym);
    printf("mutant (%s): %s\n", sym_name.c_str(), out.code().to_string().c_str());
    printf("same knot as source: %s\n", same_knot(sd, out) ? "yes" : "no");
    return 0;
}

int cmd_catalog(bool check) {
    auto cat = load_catalog(default_catalog());
    for (auto& e : cat) {
        if (!check) {
            printf("%s\t%s\n", e.name.c_str(), e.code.to_string().c_str());
            continue;
        }
        validate_signed_code(e.code);
        if (!e.code.reduced()) throw Error(ErrorKind::NotReduced, e.name + " is not reduced");
        for (int i = 0; i < e.code.length(); i++)
            if (e.code.ou()[i] == e.code.ou()[(i + 1) % e.code.length()])
                throw Error(ErrorKind::NotAlternating, e.name + " is not alternating");
        printf("%s\tok (%d crossings)\n", e.name.c_str(), e.code.crossings());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating knot diagram toolbox"};
    app.require_subcommand(1);
    app.add_option("--catalog", catalog_path, "catalog file path");

    std::string arg1, arg2, tangle, sym = "Id";
    bool condense = false, eps = false, alpha = false, dot = false, check = false;

    auto* validate = app.add_subcommand("validate", "realizability / signed-code check");
    validate->add_option("code", arg1)->required();

    auto* embed = app.add_subcommand("embed", "spherical embedding and signs");
    embed->add_option("code", arg1)->required();

    auto* lg = app.add_subcommand("lg", "interlacement graph");
    lg->add_option("code", arg1)->required();
    lg->add_flag("--condense", condense);
    lg->add_flag("--eps", eps);
    lg->add_flag("--alpha", alpha);
    lg->add_flag("--dot", dot);

    auto* cwcd = app.add_subcommand("cwcd", "chord-weighted chord diagram");
    cwcd->add_option("code", arg1)->required();
    cwcd->add_flag("--dot", dot);

    auto* orbit = app.add_subcommand("orbit", "flype orbit");
    orbit->add_option("code", arg1)->required();

    auto* compare = app.add_subcommand("compare", "same knot / mirror / different");
    compare->add_option("a", arg1)->required();
    compare->add_option("b", arg2)->required();

    auto* chir = app.add_subcommand("chirality", "chirality and invertibility");
    chir->add_option("code", arg1)->required();

    auto* mut = app.add_subcommand("mutants", "tangle mutation");
    mut->add_option("code", arg1)->required();
    mut->add_option("--tangle", tangle, "comma-separated crossing labels")->required();
    mut->add_option("--sym", sym, "Id|H|V|pi");

    auto* cat = app.add_subcommand("catalog", "list or check the catalog");
    cat->add_flag("--check", check);

    try {
        app.parse(argc, argv);
        if (validate->parsed()) return cmd_validate(arg1);
        if (embed->parsed()) return cmd_embed(arg1);
        if (lg->parsed()) return cmd_lg(arg1, condense, eps, alpha, dot);
        if (cwcd->parsed()) return cmd_cwcd(arg1, dot);
        if (orbit->parsed()) return cmd_orbit(arg1);
        if (compare->parsed()) return cmd_compare(arg1, arg2);
        if (chir->parsed()) return cmd_chirality(arg1);
        if (mut->parsed()) return cmd_mutants(arg1, tangle, sym);
        if (cat->parsed()) return cmd_catalog(check);
    } catch (const CLI::ValidationError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
