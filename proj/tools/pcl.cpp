#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pcl/curves.hpp"
#include "pcl/kummer.hpp"
#include "pcl/orbgroups.hpp"
#include "pcl/pencils.hpp"
#include "pcl/splitting.hpp"

using json = nlohmann::ordered_json;
using namespace pcl;

namespace {

enum ExitCode { kOk = 0, kFail = 1, kNotCheckable = 2, kInputError = 3 };

struct Options {
    std::uint64_t seed = 0;
    std::string out;
};

void emit(const Options& opt, json report, int status) {
    report["status"] = status;
    std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        f << text;
    }
    std::exit(status);
}

json base_report(const std::string& command) {
    json r;
    r["command"] = command;
    r["inputs"] = json::object();
    r["result"] = json::object();
    r["warnings"] = json::array();
    return r;
}

Parametrization auto_parametrize(const QPoly& C2) {
    if (C2.degree() == 1) return parametrize_line(C2);
    if (C2.degree() == 2) return parametrize_conic(C2);
    throw error("automatic parametrization needs a line or a conic");
}

json param_json(const PencilParameter& p) {
    if (p.rational) return to_string(p);
    json r;
    r["minpoly"] = to_string(from_dense(p.minpoly, Vars::XYZ, 0));
    return r;
}

json fiber_json(const FiberData& f) {
    json r;
    r["param"] = param_json(f.parameter);
    r["components"] = json::array();
    for (auto& c : f.components) {
        json e;
        e["form"] = c.text;
        e["multiplicity"] = c.multiplicity;
        if (c.over_extension) e["over_extension"] = true;
        r["components"].push_back(e);
    }
    r["n_p"] = f.n_p;
    r["in_A"] = f.in_A;
    if (f.residual) r["residual"] = true;
    return r;
}

json signature_json(const OrbifoldSignature& sig) {
    json r;
    r["n"] = sig.n;
    r["weights"] = sig.weights;
    r["fibers"] = json::array();
    for (auto& f : sig.fibers) r["fibers"].push_back(fiber_json(f));
    return r;
}

json group_json(const NamedGroup& g) { return g.text(); }

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        try {
            out.push_back(std::stoi(text.substr(pos, next - pos)));
        } catch (...) {
            throw error(std::string("bad integer in ") + what);
        }
        pos = next + 1;
    }
    return out;
}

// --- the paper-example regression corpus ------------------------------------

struct CorpusCase {
    std::string name;
    bool (*run)();
};

bool corpus_check_conics() {
    PlaneCurve c1(parse_poly("x^2+y^2-z^2"));
    PlaneCurve c2(parse_poly("2*z^2-x^2-y^2"));
    auto rep = check_hypotheses(c1, c2, parametrize_conic(c2.form()));
    return rep.all_pass();
}

bool corpus_identity_conics() {
    QPoly f1 = parse_poly("x^2+y^2-z^2"), f2 = parse_poly("2*z^2-x^2-y^2");
    auto [h, k] = verify_identity(f1, f2, parse_poly("z"), parse_poly("1"));
    return h.is_constant() && k == 0 &&
           no_cancellation_check(parse_poly("z"), parse_poly("1"), f1);
}

bool corpus_split_circle() {
    QPoly f1 = parse_poly("x^2+y^2-z^2");
    auto phi = parametrize_conic(parse_poly("2*z^2-x^2-y^2"));
    return split_test(f1, phi).splits;
}

bool corpus_special_fibers() {
    Pencil p(parse_poly("z^2"), parse_poly("x^2+y^2-z^2"));
    auto sf = special_fibers(p, 1);
    return sf.parameters.size() == 2 && sf.parameters[0] == PencilParameter::at(1, 0) &&
           sf.parameters[1] == PencilParameter::at(1, 1);
}

bool corpus_bitangent_orbifold() {
    Pencil p(parse_poly("z^2"), parse_poly("x^2+y^2-z^2"));
    QPoly C = parse_poly("x^2+y^2-z^2") * parse_poly("2*z^2-x^2-y^2");
    auto sig = orbifold_of_pencil(p, C, 3, 1);
    return sig.n == 2 && sig.weights == std::vector<int>{2};
}

bool corpus_contains() {
    Pencil p(parse_poly("x^2"), parse_poly("y^2"));
    return contains_curve(p, parse_poly("x-y"), 3).contains &&
           !contains_curve(p, parse_poly("z"), 3).contains;
}

bool corpus_group_table() {
    for (int m = 3; m <= 10; ++m) {
        NamedGroup g = identify(0, {2, 2, m});
        if (g.tag != NamedGroup::Tag::DihedralFinite || g.data != std::vector<int>{2 * m})
            return false;
    }
    NamedGroup inf = identify(1, {2, 2});
    return inf.tag == NamedGroup::Tag::InfiniteDihedral;
}

bool corpus_epi_counts() { return count_epimorphisms(1, {2, 2}, 6) == 6; }

bool corpus_kummer_n2() {
    auto ks = kummer_orbifold(parse_poly("x^2+y^2-z^2"), parse_poly("x-z"),
                              parse_poly("x+z"), parse_poly("y-z"), 2, 4, true, 1);
    return ks.reduced_found && ks.reduced_weights == std::vector<int>{2, 2} &&
           ks.group.tag == NamedGroup::Tag::InfiniteDihedral;
}

bool corpus_ade_spot() {
    // cuspidal cubic: A2 at (0:0:1)
    PlaneCurve c(parse_poly("y^2*z-x^3"));
    auto pts = singular_points(c, 1);
    if (pts.points.size() != 1) return false;
    auto rep = classify_singularity(c, pts.points[0]);
    return rep.type == AdeType::A && rep.subscript == 2;
}

const CorpusCase kCorpus[] = {
    {"check/bitangent-conics", corpus_check_conics},
    {"identity/bitangent-conics", corpus_identity_conics},
    {"split/circle-on-double-cover", corpus_split_circle},
    {"pencil/special-fibers-conic", corpus_special_fibers},
    {"pencil/bitangent-orbifold", corpus_bitangent_orbifold},
    {"pencil/containment", corpus_contains},
    {"group/dihedral-table", corpus_group_table},
    {"group/epimorphism-count", corpus_epi_counts},
    {"kummer/circle-n2", corpus_kummer_n2},
    {"curves/cusp-classification", corpus_ade_spot},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plane-curve pencil and cover-splitting toolkit"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("PCL_SEED")) opt.seed = std::strtoull(env, nullptr, 10);
    app.add_option("--seed", opt.seed, "seed for randomized coordinate frames");
    app.add_option("--out", opt.out, "also write the report to this file");

    std::string c1_text, c2_text, p_text, q_text, curve_text;
    std::string conic_text, l1_text, l2_text, l3_text;
    std::string weights_text, divisors_text;
    int max_deg = -1, dmax = 4, kumm_n = 2, punctures = 0, dihedral = 0;
    bool unchecked = false;

    auto* check = app.add_subcommand("check", "verify the cover-admissibility conditions");
    check->add_option("--c1", c1_text)->required();
    check->add_option("--c2", c2_text)->required();

    auto* split = app.add_subcommand("split", "test splitting of C2 on the double cover z^2 = C1");
    split->add_option("--c1", c1_text)->required();
    split->add_option("--c2", c2_text)->required();

    auto* identity = app.add_subcommand("identity", "search for a witness identity");
    identity->add_option("--c1", c1_text)->required();
    identity->add_option("--c2", c2_text)->required();
    identity->add_option("--max-deg", max_deg);

    std::string g1_text, g2_text;
    auto* verify = app.add_subcommand("verify", "verify a witness identity");
    verify->add_option("--c1", c1_text)->required();
    verify->add_option("--c2", c2_text)->required();
    verify->add_option("--g1", g1_text)->required();
    verify->add_option("--g2", g2_text)->required();

    auto* pencil = app.add_subcommand("pencil", "pencil analysis");
    pencil->require_subcommand(1);
    auto* analyze = pencil->add_subcommand("analyze", "special fibers and their structure");
    auto* orbifold = pencil->add_subcommand("orbifold", "orbifold signature against a curve");
    auto* contains = pencil->add_subcommand("contains", "does the pencil contain the curve");
    for (auto* sub : {analyze, orbifold, contains}) {
        sub->add_option("--p", p_text)->required();
        sub->add_option("--q", q_text)->required();
        sub->add_option("--dmax", dmax);
    }
    orbifold->add_option("--curve", curve_text)->required();
    contains->add_option("--curve", curve_text)->required();

    auto* group = app.add_subcommand("group", "orbifold group computations");
    group->require_subcommand(1);
    auto* present = group->add_subcommand("present", "print the presentation");
    auto* reduce_cmd = group->add_subcommand("reduce", "divisor-quotient reduction");
    auto* identify_cmd = group->add_subcommand("identify", "name the group");
    auto* count = group->add_subcommand("count", "count epimorphisms onto a dihedral group");
    for (auto* sub : {present, reduce_cmd, identify_cmd, count}) {
        sub->add_option("--punctures", punctures)->required();
        sub->add_option("--weights", weights_text);
    }
    reduce_cmd->add_option("--divisors", divisors_text)->required();
    count->add_option("--dihedral", dihedral, "order 2m of the target")->required();

    auto* kummer = app.add_subcommand("kummer", "Kummer-cover pullback construction");
    kummer->add_option("--conic", conic_text)->required();
    kummer->add_option("--l1", l1_text)->required();
    kummer->add_option("--l2", l2_text)->required();
    kummer->add_option("--l3", l3_text)->required();
    kummer->add_option("--n", kumm_n)->required();
    kummer->add_option("--dmax", dmax);
    kummer->add_flag("--unchecked", unchecked, "skip the tangency preconditions");

    auto* corpus = app.add_subcommand("corpus", "run the built-in regression corpus");

    CLI11_PARSE(app, argc, argv);
    std::uint64_t seed = opt.seed == 0 ? 1 : opt.seed; // frames need a nonzero stream

    try {
        if (*check) {
            json r = base_report("check");
            r["inputs"]["c1"] = to_string(normalize(parse_poly(c1_text)));
            r["inputs"]["c2"] = to_string(normalize(parse_poly(c2_text)));
            PlaneCurve c1(parse_poly(c1_text)), c2(parse_poly(c2_text));
            std::optional<Parametrization> phi;
            try {
                phi = auto_parametrize(c2.form());
            } catch (const error& e) {
                r["warnings"].push_back(std::string("no parametrization: ") + e.what());
            }
            auto rep = check_hypotheses(c1, c2, phi, seed);
            const char* names[4] = {"even_degree", "simple_singularities",
                                    "avoids_singular_points", "even_local_multiplicities"};
            for (int i = 0; i < 4; ++i) {
                json c;
                c["verdict"] = to_string(rep.conditions[i].verdict);
                c["evidence"] = rep.conditions[i].evidence;
                r["result"][names[i]] = c;
            }
            int status = kOk;
            for (auto& c : rep.conditions) {
                if (c.verdict == Verdict::FAIL) status = kFail;
                if (c.verdict == Verdict::NOT_CHECKABLE && status == kOk) status = kNotCheckable;
            }
            emit(opt, r, status);
        }

        if (*split) {
            json r = base_report("split");
            QPoly f1 = parse_poly(c1_text), f2 = parse_poly(c2_text);
            r["inputs"]["c1"] = to_string(normalize(f1));
            r["inputs"]["c2"] = to_string(normalize(f2));
            auto res = split_test(f1, auto_parametrize(f2));
            r["result"]["splits"] = res.splits;
            if (res.splits) {
                r["result"]["square_root"] = to_string(res.square_root);
                r["result"]["constant"] = to_string(res.constant);
            } else {
                r["result"]["odd_orders"] = json::array();
                for (auto& [f, m] : res.odd_orders) {
                    json e;
                    e["form"] = to_string(f);
                    e["multiplicity"] = m;
                    r["result"]["odd_orders"].push_back(e);
                }
            }
            emit(opt, r, res.splits ? kOk : kFail);
        }

        if (*identity) {
            json r = base_report("identity");
            QPoly f1 = parse_poly(c1_text), f2 = parse_poly(c2_text);
            r["inputs"]["c1"] = to_string(normalize(f1));
            r["inputs"]["c2"] = to_string(normalize(f2));
            try {
                auto w = find_identity(f1, f2, auto_parametrize(f2), max_deg);
                r["result"]["G1"] = to_string(w.G1);
                r["result"]["G2"] = to_string(w.G2);
                r["result"]["H"] = to_string(w.H);
                r["result"]["k"] = w.k;
                r["result"]["checks"]["verified"] = w.verified;
                r["result"]["checks"]["no_cancellation"] = w.no_cancellation;
                emit(opt, r, kOk);
            } catch (const no_witness_error& e) {
                r["result"]["error"] = "NoWitnessUpToBound";
                r["warnings"].push_back(e.what());
                emit(opt, r, kFail);
            } catch (const non_rational_square_error& e) {
                r["result"]["error"] = "NonRationalSquare";
                r["warnings"].push_back(e.what());
                emit(opt, r, kFail);
            }
        }

        if (*verify) {
            json r = base_report("verify");
            QPoly f1 = parse_poly(c1_text), f2 = parse_poly(c2_text);
            QPoly g1 = parse_poly(g1_text), g2 = parse_poly(g2_text);
            r["inputs"]["c1"] = to_string(normalize(f1));
            r["inputs"]["c2"] = to_string(normalize(f2));
            r["inputs"]["g1"] = to_string(g1);
            r["inputs"]["g2"] = to_string(g2);
            try {
                auto [h, k] = verify_identity(f1, f2, g1, g2);
                r["result"]["H"] = to_string(h);
                r["result"]["k"] = k;
                r["result"]["residue"] = "0";
                r["result"]["no_cancellation"] = no_cancellation_check(g1, g2, f1);
                emit(opt, r, kOk);
            } catch (const not_divisible_error& e) {
                r["result"]["residue"] = to_string(e.remainder);
                r["warnings"].push_back(e.what());
                emit(opt, r, kFail);
            }
        }

        if (*analyze) {
            json r = base_report("pencil analyze");
            Pencil p(parse_poly(p_text), parse_poly(q_text));
            r["inputs"]["p"] = to_string(p.p());
            r["inputs"]["q"] = to_string(p.q());
            auto sf = special_fibers(p, seed);
            r["result"]["special_fibers"] = json::array();
            for (auto& par : sf.parameters)
                r["result"]["special_fibers"].push_back(
                    fiber_json(fiber_structure(p, par, std::nullopt, dmax)));
            for (auto& u : sf.unverified)
                r["warnings"].push_back("unverified candidate parameter of degree " +
                                        std::to_string(uni_degree(u)));
            emit(opt, r, sf.unverified.empty() ? kOk : kNotCheckable);
        }

        if (*orbifold) {
            json r = base_report("pencil orbifold");
            Pencil p(parse_poly(p_text), parse_poly(q_text));
            QPoly C = parse_poly(curve_text);
            r["inputs"]["p"] = to_string(p.p());
            r["inputs"]["q"] = to_string(p.q());
            r["inputs"]["curve"] = to_string(normalize(C));
            auto sig = orbifold_of_pencil(p, C, dmax, seed);
            r["result"] = signature_json(sig);
            for (auto& w : sig.warnings) r["warnings"].push_back(w);
            emit(opt, r, kOk);
        }

        if (*contains) {
            json r = base_report("pencil contains");
            Pencil p(parse_poly(p_text), parse_poly(q_text));
            QPoly C = parse_poly(curve_text);
            r["inputs"]["p"] = to_string(p.p());
            r["inputs"]["q"] = to_string(p.q());
            r["inputs"]["curve"] = to_string(normalize(C));
            auto rep = contains_curve(p, C, dmax);
            r["result"]["contains"] = rep.contains;
            r["result"]["assignment"] = json::array();
            for (auto& [g, par] : rep.assignment) {
                json e;
                e["component"] = to_string(g);
                e["param"] = param_json(par);
                r["result"]["assignment"].push_back(e);
            }
            if (!rep.checkable) {
                r["warnings"].push_back("unfactored residual " + to_string(rep.residual));
                emit(opt, r, kNotCheckable);
            }
            emit(opt, r, rep.contains ? kOk : kFail);
        }

        if (*present || *reduce_cmd || *identify_cmd || *count) {
            std::vector<int> ws =
                weights_text.empty() ? std::vector<int>{} : parse_int_list(weights_text, "--weights");
            json r = base_report("group");
            r["inputs"]["punctures"] = punctures;
            r["inputs"]["weights"] = ws;
            if (*present) {
                r["command"] = "group present";
                r["result"]["presentation"] = presentation(punctures, ws).text();
            } else if (*reduce_cmd) {
                r["command"] = "group reduce";
                auto div = parse_int_list(divisors_text, "--divisors");
                r["inputs"]["divisors"] = div;
                r["result"]["weights"] = reduce(ws, div);
                r["result"]["group"] = group_json(identify(punctures, reduce(ws, div)));
            } else if (*identify_cmd) {
                r["command"] = "group identify";
                r["result"]["group"] = group_json(identify(punctures, ws));
            } else {
                r["command"] = "group count";
                r["inputs"]["dihedral_order"] = dihedral;
                r["result"]["count"] = count_epimorphisms(punctures, ws, dihedral);
            }
            emit(opt, r, kOk);
        }

        if (*kummer) {
            json r = base_report("kummer");
            QPoly C = parse_poly(conic_text);
            QPoly L1 = parse_poly(l1_text), L2 = parse_poly(l2_text), L3 = parse_poly(l3_text);
            r["inputs"]["conic"] = to_string(normalize(C));
            r["inputs"]["l1"] = to_string(normalize(L1));
            r["inputs"]["l2"] = to_string(normalize(L2));
            r["inputs"]["l3"] = to_string(normalize(L3));
            r["inputs"]["n"] = kumm_n;
            auto ks = kummer_orbifold(C, L1, L2, L3, kumm_n, dmax, !unchecked, seed);
            r["result"]["signature"] = signature_json(ks.signature);
            r["result"]["reduced_found"] = ks.reduced_found;
            if (ks.reduced_found) {
                r["result"]["reduced_weights"] = ks.reduced_weights;
                r["result"]["group"] = group_json(ks.group);
            }
            for (auto& w : ks.signature.warnings) r["warnings"].push_back(w);
            emit(opt, r, kOk);
        }

        if (*corpus) {
            json r = base_report("corpus");
            r["result"]["cases"] = json::array();
            bool all = true;
            for (auto& c : kCorpus) {
                bool ok = false;
                std::string err;
                try {
                    ok = c.run();
                } catch (const std::exception& e) {
                    err = e.what();
                }
                json e;
                e["name"] = c.name;
                e["pass"] = ok;
                if (!err.empty()) e["error"] = err;
                r["result"]["cases"].push_back(e);
                all = all && ok;
            }
            emit(opt, r, all ? kOk : kFail);
        }
    } catch (const not_checkable_error& e) {
        json r = base_report("error");
        r["warnings"].push_back(e.what());
        emit(opt, r, kNotCheckable);
    } catch (const parse_error& e) {
        json r = base_report("error");
        r["warnings"].push_back(std::string("parse error: ") + e.what());
        emit(opt, r, kInputError);
    } catch (const std::exception& e) {
        json r = base_report("error");
        r["warnings"].push_back(e.what());
        emit(opt, r, kInputError);
    }
    return kInputError;
}
