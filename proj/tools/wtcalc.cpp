#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "wtcalc/braids.hpp"
#include "wtcalc/homs.hpp"
#include "wtcalc/milnor.hpp"
#include "wtcalc/tower.hpp"

using namespace wtcalc;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json int_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

ordered_json structure_json(const GroupStructure& s) {
    ordered_json out;
    out["rank"] = static_cast<long long>(s.rank);
    out["torsion"] = ordered_json::array();
    for (const Int& d : s.torsion) out["torsion"].push_back(int_json(d));
    return out;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

// ---- resource budgeting -------------------------------------------------

long memory_limit_mb() {
    const char* env = std::getenv("WTCALC_LIMIT_MB");
    if (!env || !*env) return 2048;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw validation_error("WTCALC_LIMIT_MB must be a positive number");
    return v;
}

Int catalan(int n) {
    Int c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

Int int_pow(int base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void check_budget(const Int& rows, const Int& cols, long limit_rows, const std::string& what) {
    if (limit_rows > 0 && rows > limit_rows)
        throw resource_error("estimated " + what + " needs about " + rows.str() +
                             " relator rows, above --limit-rows " + std::to_string(limit_rows));
    Int bytes = rows * cols * 16;
    long mb = memory_limit_mb();
    if (bytes > Int(mb) * 1024 * 1024)
        throw resource_error("estimated " + what + " needs about " + Int(bytes >> 20).str() +
                             " MB, above the WTCALC_LIMIT_MB cap of " + std::to_string(mb));
}

// rough upper bounds on the presentation sizes, used only as guards
void guard_tower(int order, int m, long limit_rows) {
    Int rooted = catalan(order) * int_pow(m, order + 1);
    Int cols = rooted / (2 * order + 1) + 1;
    Int rows = 3 * (order + 1) * cols + 1;
    check_budget(rows, cols, limit_rows, "tree group presentation");
}

void guard_bracket(int n, int m, long limit_rows) {
    Int rows = Int(m) * witt_rank(m, n + 1) + Int(m) * witt_rank(m, (n + 1) / 2) + 1;
    Int cols = witt_rank(m, n + 2) + witt_rank(m, (n + 2) / 2) + 1;
    check_budget(rows, cols, limit_rows, "bracket kernel");
}

void guard_expansion(int order, int m) {
    Int cols = int_pow(m, order + 1);
    Int rows = witt_rank(m, order + 1) + m;
    check_budget(rows, cols, 0, "expansion table");
}

// ---- shared option plumbing ---------------------------------------------

struct Common {
    int order = 0;
    int labels = 0;
    std::string flavor = "plain";
    bool json = false;
    long limit_rows = 0;
};

TowerFlavor flavor_of(const std::string& name) {
    if (name == "plain") return TowerFlavor::plain;
    if (name == "reduced") return TowerFlavor::reduced;
    if (name == "twisted") return TowerFlavor::twisted;
    throw validation_error("flavor must be plain, reduced or twisted");
}

struct LinkInput {
    std::string braid;
    std::string longitudes;
    int strands = 0;
};

StringLinkData resolve_link(const LinkInput& in) {
    if (in.strands < 1) throw validation_error("--strands must be at least 1");
    if (!in.braid.empty() && !in.longitudes.empty())
        throw validation_error("give either --braid or --longitudes, not both");
    if (!in.braid.empty()) return braid_longitudes(parse_braid(in.braid, in.strands));
    if (!in.longitudes.empty()) {
        StringLinkData link;
        link.strands = in.strands;
        size_t pos = 0;
        while (true) {
            size_t next = in.longitudes.find(';', pos);
            link.longitudes.push_back(
                parse_word(in.longitudes.substr(pos, next - pos), in.strands));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (link.longitudes.size() != static_cast<size_t>(in.strands))
            throw validation_error("expected one longitude per strand, ';'-separated");
        return link;
    }
    throw validation_error("give a link via --braid or --longitudes");
}

void emit(const ordered_json& out, bool json, const std::string& text) {
    if (json)
        std::cout << out.dump() << "\n";
    else
        std::cout << text;
}

// ---- commands -------------------------------------------------------------

void cmd_groups(const Common& c) {
    TowerFlavor f = flavor_of(c.flavor);
    guard_tower(c.order, c.labels, c.limit_rows);
    const TowerGroup& g = tower_group(c.order, c.labels, f);
    if (c.json) {
        std::cout << structure_json(g.group.structure()).dump() << "\n";
        return;
    }
    std::cout << "group: " << g.group.structure().to_string() << "\n";
    std::cout << "tree generators: " << g.trees.size() << "\n";
    if (f == TowerFlavor::twisted) std::cout << "twist generators: " << g.twists.size() << "\n";
    std::cout << "relators: " << g.relators.rows() << "\n";
}

void cmd_eta(const Common& c) {
    bool twisted;
    if (c.flavor == "twisted")
        twisted = true;
    else if (c.flavor == "plain")
        twisted = false;
    else
        throw validation_error("the leaf-sum map exists for --flavor plain or twisted");
    guard_tower(c.order, c.labels, c.limit_rows);
    guard_bracket(c.order, c.labels, c.limit_rows);
    EtaMap e = eta_map(c.order, c.labels, twisted);
    const HomReport& r = e.report;
    ordered_json out;
    out["order"] = c.order;
    out["labels"] = c.labels;
    out["flavor"] = c.flavor;
    out["well_defined"] = r.well_defined;
    out["kernel"] = structure_json(r.kernel);
    out["cokernel"] = structure_json(r.cokernel);
    out["injective"] = r.injective;
    out["surjective"] = r.surjective;
    out["isomorphism"] = r.isomorphism;
    std::string text;
    text += std::string("map: ") + (twisted ? "twisted trees to the bracket kernel"
                                            : "framed trees to the quasi bracket kernel") + "\n";
    text += std::string("well-defined: ") + bool_word(r.well_defined) + "\n";
    text += "kernel: " + r.kernel.to_string() + "\n";
    text += "cokernel: " + r.cokernel.to_string() + "\n";
    text += std::string("injective: ") + bool_word(r.injective) + "\n";
    text += std::string("surjective: ") + bool_word(r.surjective) + "\n";
    text += std::string("isomorphism: ") + bool_word(r.isomorphism) + "\n";
    emit(out, c.json, text);
}

void cmd_verify_levine(const Common& c) {
    guard_tower(c.order, c.labels, c.limit_rows);
    guard_bracket(c.order, c.labels, c.limit_rows);
    HomReport r = verify_levine(c.order, c.labels);
    ordered_json out;
    out["order"] = c.order;
    out["labels"] = c.labels;
    out["is_isomorphism"] = r.isomorphism;
    out["kernel"] = structure_json(r.kernel);
    out["cokernel"] = structure_json(r.cokernel);
    std::string text;
    text += std::string("is_isomorphism: ") + bool_word(r.isomorphism) + "\n";
    text += "kernel: " + r.kernel.to_string() + "\n";
    text += "cokernel: " + r.cokernel.to_string() + "\n";
    emit(out, c.json, text);
}

void cmd_framed_vs_twisted(const Common& c) {
    guard_tower(c.order, c.labels, c.limit_rows);
    FramedTwistedReport r = framed_vs_twisted(c.order, c.labels);
    ordered_json out;
    out["order"] = c.order;
    out["labels"] = c.labels;
    out["cokernel_even"] = structure_json(r.cokernel_even);
    out["kernel_odd"] = r.has_odd ? structure_json(r.kernel_odd) : ordered_json(nullptr);
    out["expected"] = structure_json(r.expected);
    out["matches"] = r.matches;
    std::string text;
    text += "cokernel at order " + std::to_string(c.order) + ": " + r.cokernel_even.to_string() +
            "\n";
    if (r.has_odd)
        text += "kernel at order " + std::to_string(c.order - 1) + ": " +
                r.kernel_odd.to_string() + "\n";
    text += "expected: " + r.expected.to_string() + "\n";
    text += std::string("matches: ") + bool_word(r.matches) + "\n";
    emit(out, c.json, text);
}

void cmd_classify(const Common& c) {
    guard_tower(c.order, c.labels, c.limit_rows);
    guard_bracket(c.order, c.labels, c.limit_rows);
    Classification r = classify(c.order, c.labels);
    ordered_json out;
    out["order"] = r.n;
    out["labels"] = r.m;
    out["groups"]["T"] = structure_json(r.t);
    out["groups"]["T_tilde"] = structure_json(r.t_reduced);
    out["groups"]["T_inf"] = structure_json(r.t_twisted);
    out["groups"]["D"] = structure_json(r.d);
    out["groups"]["D_prime"] = structure_json(r.d_quasi);
    out["eta"]["kernel"] = structure_json(r.eta_kernel);
    out["eta"]["cokernel"] = structure_json(r.eta_cokernel);
    out["eta"]["iso"] = r.eta_iso;
    out["predicted"]["W"] = structure_json(r.w);
    out["predicted"]["W_inf"] = structure_json(r.w_inf);
    out["predicted"]["status"] = r.status;
    if (!r.note.empty()) out["predicted"]["note"] = r.note;
    std::string text;
    text += "order: " + std::to_string(r.n) + ", labels: " + std::to_string(r.m) + "\n";
    text += "T = " + r.t.to_string() + "\n";
    text += "T~ = " + r.t_reduced.to_string() + "\n";
    text += "T^inf = " + r.t_twisted.to_string() + "\n";
    text += "D = " + r.d.to_string() + "\n";
    text += "D' = " + r.d_quasi.to_string() + "\n";
    text += "eta kernel: " + r.eta_kernel.to_string() + "\n";
    text += "eta cokernel: " + r.eta_cokernel.to_string() + "\n";
    text += std::string("eta isomorphism: ") + bool_word(r.eta_iso) + "\n";
    text += "W = " + r.w.to_string() + "\n";
    text += "W^inf = " + r.w_inf.to_string() + "\n";
    text += "status: " + r.status + "\n";
    if (!r.note.empty()) text += "note: " + r.note + "\n";
    emit(out, c.json, text);
}

std::string tensor_line(const TensorTerm& t) {
    return "X" + std::to_string(t.x) + " (x) " + format(t.t) + " = " + t.coeff.str();
}

void cmd_milnor(const LinkInput& in, int order, int max_degree, bool json) {
    StringLinkData link = resolve_link(in);
    int found = -1;
    TotalMilnor tm;
    if (order >= 0) {
        guard_expansion(order, link.strands);
        tm = total_milnor(link, order);
        found = order;
    } else {
        // scan for the first nonvanishing order
        if (max_degree < 1) throw validation_error("--max-degree must be at least 1");
        for (int n = 0; n < max_degree; ++n) {
            guard_expansion(n, link.strands);
            tm = total_milnor(link, n);
            if (!tm.zero()) {
                found = n;
                break;
            }
        }
    }
    ordered_json out;
    std::string text;
    out["strands"] = link.strands;
    text += "strands: " + std::to_string(link.strands) + "\n";
    if (found < 0) {
        out["order"] = nullptr;
        out["vanishes_through"] = max_degree - 1;
        out["value"] = ordered_json::array();
        text += "vanishes through order " + std::to_string(max_degree - 1) + "\n";
        emit(out, json, text);
        return;
    }
    out["order"] = found;
    out["value"] = ordered_json::array();
    for (const TensorTerm& t : tm.value) {
        ordered_json term;
        term["x"] = t.x;
        term["tree"] = format(t.t);
        term["coeff"] = int_json(t.coeff);
        out["value"].push_back(term);
    }
    out["cycle"] = true;  // enforced during the computation
    text += "order: " + std::to_string(found) + "\n";
    text += "terms: " + std::to_string(tm.value.size()) + "\n";
    for (const TensorTerm& t : tm.value) text += tensor_line(t) + "\n";
    text += "cycle condition: satisfied\n";
    emit(out, json, text);
}

void cmd_sl(const LinkInput& in, int order, bool json) {
    StringLinkData link = resolve_link(in);
    if (order >= 0) guard_expansion(order + 1, link.strands);
    std::vector<RootedPtr> residue = sato_levine(link, order);
    ordered_json out;
    out["order"] = order;
    out["strands"] = link.strands;
    out["residue"] = ordered_json::array();
    for (const RootedPtr& h : residue) out["residue"].push_back(format(h));
    std::string text = "order: " + std::to_string(order) + "\n";
    if (residue.empty()) {
        text += "residue: 0\n";
    } else {
        text += "residue:";
        for (const RootedPtr& h : residue) text += " " + format(h);
        text += "\n";
    }
    emit(out, json, text);
}

void cmd_artin(const std::string& braid, int strands, bool json) {
    if (strands < 1) throw validation_error("--strands must be at least 1");
    Braid b = parse_braid(braid, strands);
    ArtinAction act = artin_rep(b);
    std::vector<int> perm = braid_permutation(b);
    ordered_json out;
    out["strands"] = strands;
    out["pure"] = is_pure(b);
    out["permutation"] = perm;
    out["images"] = ordered_json::array();
    std::string text;
    for (int i = 1; i <= strands; ++i) {
        out["images"].push_back(format_word(act.images[i - 1]));
        text += "x" + std::to_string(i) + " -> " + format_word(act.images[i - 1]) + "\n";
    }
    text += std::string("pure: ") + bool_word(is_pure(b)) + "\n";
    emit(out, json, text);
}

void cmd_realize(const std::string& tree_text, int strands, bool json) {
    ParsedTree parsed = parse_tree(tree_text);
    const UnrootedTree* t = std::get_if<UnrootedTree>(&parsed);
    if (!t) throw validation_error("realize needs a glued tree like <(1,2),3>");
    Braid b = realize_tree(*t, strands);
    ordered_json out;
    out["tree"] = format(*t);
    out["strands"] = b.strands;
    out["letters"] = static_cast<long long>(b.letters.size());
    out["braid"] = format_braid(b);
    out["verified"] = true;  // realize_tree recomputes the obstruction
    std::string text;
    text += "tree: " + format(*t) + "\n";
    text += "strands: " + std::to_string(b.strands) + "\n";
    text += "letters: " + std::to_string(b.letters.size()) + "\n";
    text += "braid: " + format_braid(b) + "\n";
    text += "verified: obstruction matches the leaf-sum expansion\n";
    emit(out, json, text);
}

const char* kind_name(Error::Kind k) {
    switch (k) {
        case Error::Kind::validation: return "validation";
        case Error::Kind::resource: return "resource";
        default: return "internal";
    }
}

int exit_code(Error::Kind k) { return k == Error::Kind::resource ? 2 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for tree groups, bracket kernels and braid obstructions"};
    app.require_subcommand(1);

    Common c;
    LinkInput link;
    std::string braid_text, tree_text;
    int order = -1, max_degree = 4, strands = 0;
    bool json = false;

    auto add_common = [&](CLI::App* sub, bool with_flavor) {
        sub->add_option("--order", c.order, "grading order n")->required();
        sub->add_option("--labels", c.labels, "number of leaf labels m")->required();
        if (with_flavor) sub->add_option("--flavor", c.flavor, "plain, reduced or twisted");
        sub->add_flag("--json", c.json, "emit JSON instead of text");
        sub->add_option("--limit-rows", c.limit_rows, "abort if the estimated row count is larger");
    };

    CLI::App* groups = app.add_subcommand("groups", "structure of one graded tree group");
    add_common(groups, true);
    CLI::App* eta = app.add_subcommand("eta", "analyze the leaf-sum map in one order");
    add_common(eta, true);
    CLI::App* levine =
        app.add_subcommand("verify-levine", "check that the framed leaf-sum map is an isomorphism");
    add_common(levine, false);
    CLI::App* fvt = app.add_subcommand("framed-vs-twisted",
                                       "compare framed and twisted towers around an even order");
    add_common(fvt, false);
    CLI::App* cls = app.add_subcommand("classify", "all five groups and predictions in one order");
    add_common(cls, false);

    auto add_link = [&](CLI::App* sub) {
        sub->add_option("--braid", link.braid, "pure braid word, e.g. '[A(1,3),A(2,3)]'");
        sub->add_option("--longitudes", link.longitudes, "';'-separated longitude words");
        sub->add_option("--strands", link.strands, "strand count")->required();
        sub->add_flag("--json", json, "emit JSON instead of text");
    };

    CLI::App* milnor = app.add_subcommand("milnor", "leading longitude obstruction of a link");
    add_link(milnor);
    milnor->add_option("--order", order, "obstruction order (omit to scan)");
    milnor->add_option("--max-degree", max_degree, "scan bound when no order is given");
    CLI::App* sl = app.add_subcommand("sl", "mod 2 residue of an odd-order obstruction");
    add_link(sl);
    int sl_order = -1;
    sl->add_option("--order", sl_order, "odd obstruction order")->required();

    CLI::App* artin = app.add_subcommand("artin", "braid action on the meridian generators");
    artin->add_option("--braid", braid_text, "braid word")->required();
    artin->add_option("--strands", strands, "strand count")->required();
    artin->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* realize = app.add_subcommand("realize", "pure braid realizing a distinct-label tree");
    realize->add_option("--tree", tree_text, "glued tree, e.g. '<(1,2),3>'")->required();
    realize->add_option("--strands", strands, "strand count (0 = largest label)");
    realize->add_flag("--json", json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    bool json_mode = c.json || json;
    try {
        if (groups->parsed()) cmd_groups(c);
        if (eta->parsed()) cmd_eta(c);
        if (levine->parsed()) cmd_verify_levine(c);
        if (fvt->parsed()) cmd_framed_vs_twisted(c);
        if (cls->parsed()) cmd_classify(c);
        if (milnor->parsed()) cmd_milnor(link, milnor->count("--order") ? order : -1, max_degree, json);
        if (sl->parsed()) cmd_sl(link, sl_order, json);
        if (artin->parsed()) cmd_artin(braid_text, strands, json);
        if (realize->parsed()) cmd_realize(tree_text, strands, json);
    } catch (const Error& e) {
        if (json_mode) {
            ordered_json out;
            out["error"]["kind"] = kind_name(e.kind);
            out["error"]["message"] = e.what();
            std::cout << out.dump() << "\n";
        } else {
            std::cerr << "error (" << kind_name(e.kind) << "): " << e.what() << "\n";
        }
        return exit_code(e.kind);
    } catch (const std::exception& e) {
        if (json_mode) {
            ordered_json out;
            out["error"]["kind"] = "internal";
            out["error"]["message"] = e.what();
            std::cout << out.dump() << "\n";
        } else {
            std::cerr << "error (internal): " << e.what() << "\n";
        }
        return 1;
    }
    return 0;
}
