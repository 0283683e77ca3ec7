// Command-line front end: validate structure files, compute twisted
// Blanchfield pairings, run the builders and the classical cross-checks.
//
// Exit codes: 0 = success / all checks pass, 1 = a check failed,
// 2 = input or usage error.

#include "CLI11.hpp"
#include "blanchfield/io.hpp"

#include <fstream>
#include <iostream>
#include <optional>

using namespace blanchfield;

namespace {

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const json& j, const std::string& text) const {
        std::ostream* os = &std::cout;
        std::ofstream f;
        if (!path.empty()) {
            f.open(path);
            os = &f;
        }
        if (format == "json")
            *os << j.dump(2) << "\n";
        else
            *os << text;
    }
};

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

Representation load_rep_or_default(const std::string& path, const GroupSpec& spec) {
    if (!path.empty()) return representation_from_json(load_json(path));
    // defaults: tautological for the infinite cyclic group, trivial otherwise
    if (spec.ngens() == 1 && spec.orders[0] == 0) return Representation::tautological();
    return Representation::trivial(spec);
}

SeifertData load_seifert(const std::string& path) {
    json j = load_json(path);
    SeifertData V;
    const json& m = j.is_object() && j.contains("seifert") ? j.at("seifert") : j;
    for (const auto& row : m) V.V.push_back(row.get<std::vector<long long>>());
    V.validate();
    return V;
}

json checks_to_json(const PairingContext& ctx, const std::string& which, bool* all_ok) {
    json out = json::object();
    auto want = [&](const std::string& name) {
        return which == "all" || which.find(name) != std::string::npos;
    };
    if (which == "none") return out;
    if (want("sesquilinear")) {
        CheckReport r = check_sesquilinear(ctx, 25);
        out["sesquilinear"] = r.ok;
        if (!r.ok) *all_ok = false;
    }
    if (want("hermitian")) {
        CheckReport r = check_hermitian(ctx);
        out["hermitian"] = r.ok;
        if (!r.ok) *all_ok = false;
    }
    if (want("nonsingular")) {
        CheckReport r = check_nonsingular(ctx);
        out["nonsingular"] = r.ok;
        if (!r.ok) *all_ok = false;
    }
    return out;
}

std::string pairing_text(const PairingMatrix& m, const json& checks) {
    std::string s = m.to_string();
    s += "annihilators (rows):";
    for (const auto& a : m.row_annihilators) s += " " + a.to_string() + ";";
    s += "\nannihilators (cols):";
    for (const auto& a : m.col_annihilators) s += " " + a.to_string() + ";";
    s += "\n";
    for (auto& [k, v] : checks.items())
        s += k + ": " + (v.get<bool>() ? "pass" : "FAIL") + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chain-level twisted Blanchfield pairings"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("-o,--output", out.path, "write output to a file");

    // validate
    auto* validate = app.add_subcommand("validate", "check a triad file's structure equations");
    std::string validate_file;
    validate->add_option("file", validate_file)->required();

    // pairing
    auto* pairing = app.add_subcommand("pairing", "compute the pairing of a triad file");
    std::string pairing_file, rep_path, side = "cohomology", checks = "all";
    pairing->add_option("file", pairing_file)->required();
    pairing->add_option("--rep", rep_path, "representation JSON file");
    pairing->add_option("--side", side)->check(CLI::IsMember({"cohomology", "homology"}));
    pairing->add_option("--checks", checks, "all | none | comma list");

    // knot
    auto* knot = app.add_subcommand("knot", "build a knot-exterior triad from a Seifert matrix");
    std::string seifert_path;
    bool with_oracle = false, emit_triad = false;
    knot->add_option("--seifert", seifert_path)->required();
    knot->add_flag("--oracle", with_oracle, "also compare with the Seifert-matrix formula");
    knot->add_flag("--emit-triad", emit_triad, "print the triad JSON instead of the pairing");

    // lens
    auto* lens = app.add_subcommand("lens", "linking form of the lens space L(p, q)");
    int lp = 0, lq = 0;
    lens->add_option("p", lp)->required();
    lens->add_option("q", lq)->required();

    // branched
    auto* branched = app.add_subcommand("branched", "linking form of the k-fold branched cover");
    std::string branched_seifert;
    int bk = 2;
    branched->add_option("--seifert", branched_seifert)->required();
    branched->add_option("-k", bk, "covering degree");

    // union
    auto* union_cmd = app.add_subcommand("union", "glue a cobordism file to its reverse");
    std::string union_file;
    union_cmd->add_option("file", union_file)->required();

    // emit-schema
    app.add_subcommand("emit-schema", "print the JSON schemas");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            GroupSpec spec;
            SymTriad<GroupRingElement> T = triad_from_json(load_json(validate_file), &spec);
            ResidualReport r = check_triad(T);
            json j{{"ok", r.ok()}, {"detail", r.summary()}};
            out.emit(j, (r.ok() ? "pass: " : "FAIL: ") + r.summary() + "\n");
            return r.ok() ? 0 : 1;
        }
        if (pairing->parsed()) {
            GroupSpec spec;
            SymTriad<GroupRingElement> T = triad_from_json(load_json(pairing_file), &spec);
            ResidualReport r = check_triad(T);
            if (!r.ok()) {
                out.emit(json{{"ok", false}, {"detail", r.summary()}},
                         "FAIL: " + r.summary() + "\n");
                return 1;
            }
            Representation rep = load_rep_or_default(rep_path, spec);
            PairingContext ctx(T, rep);
            PairingSide ps =
                side == "homology" ? PairingSide::Homology : PairingSide::Cohomology;
            if (ps == PairingSide::Homology) {
                PoincareReport pr = is_poincare(T, rep);
                if (!pr.ok) {
                    out.emit(json{{"error", "Poincare required for the homology side"}},
                             "error: Poincare required for the homology side\n");
                    return 2;
                }
            }
            PairingMatrix m = pairing_matrix(ctx, ps);
            bool ok = true;
            json cj = checks_to_json(ctx, checks, &ok);
            json j = pairing_matrix_to_json(m);
            j["checks"] = cj;
            out.emit(j, pairing_text(m, cj));
            return ok ? 0 : 1;
        }
        if (knot->parsed()) {
            SeifertData V = load_seifert(seifert_path);
            KnotTriad K = knot_triad(V);
            annulus_sigma(K);
            if (emit_triad) {
                json j = triad_to_json(K.triad, K.spec);
                out.emit(j, j.dump(2) + "\n");
                return 0;
            }
            Representation rep = Representation::tautological();
            PairingContext ctx(K.triad, rep);
            PairingMatrix m = pairing_matrix(ctx, PairingSide::Cohomology);
            bool ok = true;
            json cj = checks_to_json(ctx, "all", &ok);
            json j = pairing_matrix_to_json(m);
            j["checks"] = cj;
            std::string text = pairing_text(m, cj);
            if (with_oracle) {
                std::string detail;
                bool agree = oracle_agreement(ctx, V, &detail);
                j["oracle_agreement"] = agree ? "exact" : detail;
                text += "oracle agreement: " + (agree ? std::string("exact") : detail) + "\n";
                if (!agree) ok = false;
            }
            out.emit(j, text);
            return ok ? 0 : 1;
        }
        if (lens->parsed()) {
            LensBuild L = lens_complex({lp, lq});
            PairingMatrix m = lens_linking_form(L);
            Representation rep = Representation::trivial(L.spec);
            PairingContext ctx(L.triad, rep);
            bool ok = true;
            json cj = checks_to_json(ctx, "all", &ok);
            json j = pairing_matrix_to_json(m);
            j["checks"] = cj;
            j["orientation"] = L.orientation;
            out.emit(j, pairing_text(m, cj));
            return ok ? 0 : 1;
        }
        if (branched->parsed()) {
            SeifertData V = load_seifert(branched_seifert);
            BranchedCoverResult r = branched_cover_form(V, bk);
            json j = pairing_matrix_to_json(r.form);
            j["all_torsion"] = r.all_torsion;
            std::string text = r.form.to_string();
            // cross-check against the lens space when the module is cyclic Z/p
            if (r.form.row_annihilators.size() == 1 &&
                r.form.row_annihilators[0].ring() == Ring::Integers) {
                long long p = (long long)boost::multiprecision::numerator(
                    r.form.row_annihilators[0].scalar());
                if (p > 1) {
                    LensBuild L = lens_complex({(int)p, 1});
                    PairingMatrix lm = lens_linking_form(L);
                    // compare up to a unit square and global sign
                    bool match = false;
                    if (lm.values.size() == 1) {
                        for (long long u = 1; u < p && !match; ++u)
                            for (int sgn : {1, -1}) {
                                Fraction scaled =
                                    Fraction(RingElement::integer(sgn * u * u),
                                             RingElement::integer(1)) *
                                    r.form.values[0][0].rep();
                                if (mod_ring(scaled) == lm.values[0][0]) match = true;
                            }
                    }
                    j["lens_cross_check"] = match ? "isomorphic" : "mismatch";
                    text += "cross-check vs lens(" + std::to_string(p) +
                            ",1): " + (match ? "isomorphic" : "mismatch") + "\n";
                }
            }
            out.emit(j, text);
            return r.all_torsion ? 0 : 1;
        }
        if (union_cmd->parsed()) {
            // glue the cylinder-style cobordism encoded in a triad file to its
            // structure-negated reverse and report the closed verdict
            GroupSpec spec;
            json j = load_json(union_file);
            SymTriad<GroupRingElement> T = triad_from_json(j, &spec);
            Cobordism c;
            c.n = T.n;
            c.left = T.D;
            c.right = T.D;
            c.body = T.A;
            c.fL = T.jA.incl;
            c.fR = T.jA.incl;
            c.dphi = T.phiA;
            c.phi_left = T.chi;
            c.phi_right = T.chi;
            Cobordism rev = c;
            rev.dphi = c.dphi.negated();
            Cobordism glued = union_cobordisms(c, rev);
            ResidualReport r = glued.check();
            json jj{{"ok", r.ok()}, {"detail", r.summary()}};
            out.emit(jj, (r.ok() ? "pass: " : "FAIL: ") + r.summary() + "\n");
            return r.ok() ? 0 : 1;
        }
        // emit-schema
        json j = schemas();
        out.emit(j, j.dump(2) + "\n");
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
