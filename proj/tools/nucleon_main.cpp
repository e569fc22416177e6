#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nucleon/chains.hpp"
#include "nucleon/eval.hpp"
#include "nucleon/finite_algebra.hpp"
#include "nucleon/json_io.hpp"
#include "nucleon/nuclei.hpp"
#include "nucleon/standard_algebras.hpp"
#include "nucleon/terms.hpp"
#include "nucleon/variety.hpp"

namespace {

using nucleon::Json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // counterexample found, axiom failed, ...
constexpr int kExitUsage = 2;

int g_max_size_override = 0;

int nucleus_cap() { return g_max_size_override > 0 ? g_max_size_override : 20; }

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

void render_table(const Json& j, std::ostream& os, int depth = 0) {
    const std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() &&
                                  (v.front().is_array() || v.front().is_object()))) {
                os << pad << k << ":\n";
                render_table(v, os, depth + 1);
            } else {
                os << pad << k << ": " << v.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                render_table(v, os, depth);
                os << "\n";
            } else {
                os << pad << v.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const Json& j, bool table) {
    if (table) {
        render_table(j, std::cout);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

// ---------------------------------------------------------------------------
// Input helpers
// ---------------------------------------------------------------------------

struct CarrierSpec {
    std::string algebra_file;
    std::string chain_text;
};

void add_carrier_options(CLI::App* cmd, CarrierSpec& spec, bool finite_only) {
    auto* a = cmd->add_option("--algebra", spec.algebra_file,
                              "algebra file (JSON tables)");
    auto* c = cmd->add_option("--chain", spec.chain_text,
                              finite_only
                                  ? "chain descriptor, e.g. \"S1 + S3\" (finite only)"
                                  : "chain descriptor, e.g. \"S1 + S1 + Sw\"");
    a->excludes(c);
    c->excludes(a);
}

nucleon::FiniteAlgebra load_finite(const CarrierSpec& spec) {
    if (!spec.algebra_file.empty()) {
        return nucleon::load_algebra_file(spec.algebra_file);
    }
    if (!spec.chain_text.empty()) {
        return nucleon::materialize_finite(nucleon::parse_descriptor(spec.chain_text))
            .algebra;
    }
    throw nucleon::StructuralError("need --algebra or --chain");
}

// Split on commas that are not nested in parentheses.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const std::string& part : split_top_level(s)) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw nucleon::StructuralError("expected an integer list, got '" + s + "'");
        }
    }
    return out;
}

template <class Ops>
nucleon::EnvOf<Ops> parse_env(const std::string& text,
                              const std::function<typename Ops::Elem(const std::string&)>& parse_elem) {
    nucleon::EnvOf<Ops> env;
    if (text.empty()) return env;
    for (const std::string& binding : split_top_level(text)) {
        const std::size_t eq = binding.find('=');
        if (eq == std::string::npos) {
            throw nucleon::StructuralError("environment bindings look like x=<element>");
        }
        std::string name = binding.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), ::isspace), name.end());
        env.insert_or_assign(std::move(name), parse_elem(binding.substr(eq + 1)));
    }
    return env;
}

struct NucleusSpec {
    std::string term_text;
    std::string map_text;
    std::string subset_text;
};

void add_nucleus_options(CLI::App* cmd, NucleusSpec& spec) {
    auto* t = cmd->add_option("--term", spec.term_text, "one-variable term");
    auto* m = cmd->add_option("--map", spec.map_text,
                              "explicit value vector, e.g. \"0,1,2\"");
    auto* s = cmd->add_option("--subset", spec.subset_text,
                              "elements B; the nucleus is x |-> meet{(x->b)->b}");
    t->excludes(m)->excludes(s);
    m->excludes(t)->excludes(s);
    s->excludes(t)->excludes(m);
}

// Returns a verified nucleus, or prints the violation and exits negatively.
std::optional<nucleon::NucleusMap> resolve_nucleus(const nucleon::FiniteAlgebra& a,
                                                   const NucleusSpec& spec,
                                                   bool table) {
    std::vector<int> values;
    if (!spec.term_text.empty()) {
        values = nucleon::term_values(a, *nucleon::parse_term(spec.term_text));
    } else if (!spec.map_text.empty()) {
        values = parse_int_list(spec.map_text);
    } else if (!spec.subset_text.empty()) {
        return nucleon::nucleus_from_subset(a, parse_int_list(spec.subset_text));
    } else {
        throw nucleon::StructuralError("need --term, --map or --subset");
    }
    if (auto v = nucleon::nucleus_violation(a, values)) {
        Json j;
        j["status"] = "not-a-nucleus";
        j["law"] = v->law;
        j["witness"] = v->witness;
        emit(j, table);
        return std::nullopt;
    }
    return nucleon::NucleusMap{values, true};
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_validate(const CarrierSpec& carrier, bool table) {
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    const nucleon::ValidationReport r = nucleon::validate_axioms(a);
    emit(nucleon::validation_to_json(r), table);
    return r.ok() ? kExitOk : kExitNegative;
}

int run_classify_algebra(const CarrierSpec& carrier, bool table) {
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    const nucleon::ValidationReport r = nucleon::validate_axioms(a);
    if (!r.ok()) {
        emit(nucleon::validation_to_json(r), table);
        return kExitNegative;
    }
    emit(nucleon::class_flags_to_json(nucleon::classify_algebra(a)), table);
    return kExitOk;
}

int run_enum_nuclei(const CarrierSpec& carrier, bool table) {
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    const nucleon::ValidationReport r = nucleon::validate_axioms(a);
    if (!r.ok()) {
        emit(nucleon::validation_to_json(r), table);
        return kExitNegative;
    }
    Json out = Json::array();
    for (const nucleon::NucleusMap& g : nucleon::enumerate_nuclei(a, nucleus_cap())) {
        out.push_back(nucleon::nucleus_to_json(a, g));
    }
    emit(out, table);
    return kExitOk;
}

int run_eval(const CarrierSpec& carrier, const std::string& term_text,
             const std::string& env_text, bool table) {
    const nucleon::TermPtr t = nucleon::parse_term(term_text);
    Json j;
    if (!carrier.chain_text.empty()) {
        const nucleon::ChainOps ops(nucleon::parse_descriptor(carrier.chain_text));
        auto env = parse_env<nucleon::ChainOps>(env_text, [&](const std::string& s) {
            auto e = nucleon::parse_element(s);
            ops.check_member(e);
            return e;
        });
        j["value"] = nucleon::to_string(nucleon::eval_term(*t, ops, env));
    } else {
        const nucleon::FiniteAlgebra a = load_finite(carrier);
        auto env = parse_env<nucleon::FiniteAlgebra>(env_text, [&](const std::string& s) {
            const int v = std::stoi(s);
            if (v < 0 || v >= a.size()) {
                throw nucleon::StructuralError("element index out of range: " + s);
            }
            return v;
        });
        j["value"] = nucleon::eval_term(*t, a, env);
    }
    emit(j, table);
    return kExitOk;
}

template <class Ops>
int check_identity_on(const Ops& ops, const std::vector<typename Ops::Elem>& dom,
                      const nucleon::TermExpr& lhs, const nucleon::TermExpr& rhs,
                      const std::function<Json(const typename Ops::Elem&)>& show,
                      std::optional<int> window, bool table) {
    Json j;
    if (window) j["window"] = *window;
    auto cex = nucleon::find_identity_counterexample(lhs, rhs, ops, dom);
    if (!cex) {
        j["status"] = "ok";
        j["scope"] = window ? "window" : "exhaustive";
        emit(j, table);
        return kExitOk;
    }
    j["status"] = "counterexample";
    Json env;
    for (const auto& [name, value] : cex->env) env[name] = show(value);
    j["env"] = std::move(env);
    j["lhs"] = show(cex->lhs);
    j["rhs"] = show(cex->rhs);
    emit(j, table);
    return kExitNegative;
}

int run_check_identity(const CarrierSpec& carrier, const std::string& lhs_text,
                       const std::string& rhs_text, int window, bool table) {
    const nucleon::TermPtr lhs = nucleon::parse_term(lhs_text);
    const nucleon::TermPtr rhs = nucleon::parse_term(rhs_text);
    if (!carrier.chain_text.empty()) {
        const nucleon::ChainDescriptor d = nucleon::parse_descriptor(carrier.chain_text);
        const nucleon::ChainOps ops(d);
        return check_identity_on<nucleon::ChainOps>(
            ops, nucleon::enumerate_window(d, window), *lhs, *rhs,
            [](const nucleon::ChainElement& e) { return Json(nucleon::to_string(e)); },
            window, table);
    }
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    std::vector<int> dom(a.size());
    for (int i = 0; i < a.size(); ++i) dom[i] = i;
    return check_identity_on<nucleon::FiniteAlgebra>(
        a, dom, *lhs, *rhs, [](const int& e) { return Json(e); }, std::nullopt,
        table);
}

template <class Ops>
int check_nucleus_on(const Ops& ops, const std::vector<typename Ops::Elem>& dom,
                     const nucleon::TermExpr& t,
                     const std::function<Json(const typename Ops::Elem&)>& show,
                     std::optional<int> window, bool table) {
    Json j;
    if (window) j["window"] = *window;
    auto cex = nucleon::find_term_nucleus_counterexample(t, ops, dom);
    if (!cex) {
        j["status"] = "ok";
        j["scope"] = window ? "window" : "exhaustive";
        if (window) j["note"] = "verified on window only, not a proof";
        emit(j, table);
        return kExitOk;
    }
    j["status"] = "counterexample";
    j["a"] = show(cex->a);
    j["b"] = show(cex->b);
    j["t(a)->t(b)"] = show(cex->lhs);
    j["a->t(b)"] = show(cex->rhs);
    emit(j, table);
    return kExitNegative;
}

int run_check_nucleus(const CarrierSpec& carrier, const std::string& term_text,
                      int window, bool table) {
    const nucleon::TermPtr t = nucleon::parse_term(term_text);
    if (!carrier.chain_text.empty()) {
        const nucleon::ChainDescriptor d = nucleon::parse_descriptor(carrier.chain_text);
        const nucleon::ChainOps ops(d);
        return check_nucleus_on<nucleon::ChainOps>(
            ops, nucleon::enumerate_window(d, window), *t,
            [](const nucleon::ChainElement& e) { return Json(nucleon::to_string(e)); },
            window, table);
    }
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    std::vector<int> dom(a.size());
    for (int i = 0; i < a.size(); ++i) dom[i] = i;
    return check_nucleus_on<nucleon::FiniteAlgebra>(
        a, dom, *t, [](const int& e) { return Json(e); }, std::nullopt, table);
}

int run_image(const CarrierSpec& carrier, const NucleusSpec& nspec, bool table) {
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    auto gamma = resolve_nucleus(a, nspec, table);
    if (!gamma) return kExitNegative;
    const nucleon::NuclearImage img = nucleon::nuclear_image(a, *gamma);
    Json j;
    j["gamma"] = gamma->values;
    j["gamma_bot"] = img.gamma_bot;
    j["inclusion"] = img.inclusion;
    j["algebra"] = nucleon::algebra_to_json(img.algebra);
    j["dense"] = nucleon::dense_filter(a, *gamma).members;
    emit(j, table);
    return kExitOk;
}

int run_glivenko(const CarrierSpec& carrier, const NucleusSpec& nspec, bool table) {
    const nucleon::FiniteAlgebra a = load_finite(carrier);
    auto gamma = resolve_nucleus(a, nspec, table);
    if (!gamma) return kExitNegative;
    const nucleon::GlivenkoResult r = nucleon::glivenko_check(a, *gamma);
    Json j;
    j["holds"] = r.holds;
    if (r.witness) j["witness"] = *r.witness;
    if (r.holds) {
        j["homomorphism"] = r.homomorphism;
        if (r.quotient_iso) {
            j["quotient_iso"] = *r.quotient_iso;
        } else {
            j["quotient_iso"] = nullptr;
        }
    }
    emit(j, table);
    return r.holds ? kExitOk : kExitNegative;
}

nucleon::VarietyDescriptor resolve_variety(const std::vector<std::string>& gens,
                                           const std::string& file) {
    if (!file.empty()) return nucleon::load_variety_file(file);
    if (gens.empty()) {
        throw nucleon::StructuralError("need --gen descriptors or --variety file");
    }
    nucleon::VarietyDescriptor v;
    for (const std::string& g : gens) {
        v.generators.push_back(nucleon::parse_descriptor(g));
    }
    return v;
}

int run_classify_variety(const std::vector<std::string>& gens,
                         const std::string& file, bool table) {
    const nucleon::VarietyDescriptor v = resolve_variety(gens, file);
    Json j;
    j["flags"] = nucleon::flags_to_json(nucleon::compute_flags(v));
    j["catalog"] = nucleon::catalog_to_json(nucleon::classify(v));
    emit(j, table);
    return kExitOk;
}

int run_verify_variety(const std::vector<std::string>& gens,
                       const std::string& file, int window, bool table) {
    const nucleon::VarietyDescriptor v = resolve_variety(gens, file);
    const nucleon::VerificationReport r = nucleon::verify_classification(v, window);
    emit(nucleon::report_to_json(r), table);
    return r.all_ok() ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nucleon: residuated-lattice toolbox (finite tables, "
                 "symbolic BL-chains, nuclei, term nuclei, varieties)"};
    app.require_subcommand(1);
    bool table = false;
    app.add_flag("--table", table, "human-readable output instead of JSON");

    if (const char* cap = std::getenv("NUCLEON_MAX_SIZE")) {
        g_max_size_override = std::atoi(cap);
    }

    CarrierSpec val_c;
    auto* validate = app.add_subcommand("validate", "check the defining laws");
    add_carrier_options(validate, val_c, true);

    CarrierSpec cls_c;
    auto* classify =
        app.add_subcommand("classify-algebra", "BL/MV/Heyting/... flags");
    add_carrier_options(classify, cls_c, true);

    CarrierSpec enum_c;
    auto* enum_n = app.add_subcommand("enum-nuclei", "all nuclei on a finite algebra");
    add_carrier_options(enum_n, enum_c, true);

    CarrierSpec eval_c;
    std::string eval_term_text, eval_env_text;
    auto* eval = app.add_subcommand("eval", "evaluate a term");
    add_carrier_options(eval, eval_c, false);
    eval->add_option("--term", eval_term_text, "term to evaluate")->required();
    eval->add_option("--env", eval_env_text,
                     "bindings: finite \"x=2,y=0\"; chain \"x=(1,2),y=top\"");

    CarrierSpec ci_c;
    std::string ci_lhs, ci_rhs;
    int ci_window = 16;
    auto* ci = app.add_subcommand("check-identity", "lhs = rhs everywhere?");
    add_carrier_options(ci, ci_c, false);
    ci->add_option("--lhs", ci_lhs)->required();
    ci->add_option("--rhs", ci_rhs)->required();
    ci->add_option("--window", ci_window, "window size on infinite chains");

    CarrierSpec cn_c;
    std::string cn_term;
    int cn_window = 16;
    auto* cn = app.add_subcommand("check-nucleus",
                                  "does a one-variable term define a nucleus?");
    add_carrier_options(cn, cn_c, false);
    cn->add_option("--term", cn_term)->required();
    cn->add_option("--window", cn_window, "window size on infinite chains");

    CarrierSpec img_c;
    NucleusSpec img_n;
    auto* image = app.add_subcommand("image", "nuclear image of a finite algebra");
    add_carrier_options(image, img_c, true);
    add_nucleus_options(image, img_n);

    CarrierSpec gl_c;
    NucleusSpec gl_n;
    auto* glivenko =
        app.add_subcommand("glivenko", "relative Glivenko property of a nucleus");
    add_carrier_options(glivenko, gl_c, true);
    add_nucleus_options(glivenko, gl_n);

    std::vector<std::string> cv_gens;
    std::string cv_file;
    auto* cv = app.add_subcommand("classify-variety",
                                  "nucleus terms on the variety generated by chains");
    cv->add_option("--gen", cv_gens, "generator descriptor (repeatable)");
    cv->add_option("--variety", cv_file, "JSON file with a generators array");

    std::vector<std::string> vv_gens;
    std::string vv_file;
    int vv_window = 16;
    auto* vv = app.add_subcommand("verify-variety",
                                  "cross-validate the catalog on each generator");
    vv->add_option("--gen", vv_gens, "generator descriptor (repeatable)");
    vv->add_option("--variety", vv_file, "JSON file with a generators array");
    vv->add_option("--window", vv_window, "window size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(val_c, table);
        if (app.got_subcommand(classify)) return run_classify_algebra(cls_c, table);
        if (app.got_subcommand(enum_n)) return run_enum_nuclei(enum_c, table);
        if (app.got_subcommand(eval)) {
            return run_eval(eval_c, eval_term_text, eval_env_text, table);
        }
        if (app.got_subcommand(ci)) {
            return run_check_identity(ci_c, ci_lhs, ci_rhs, ci_window, table);
        }
        if (app.got_subcommand(cn)) {
            return run_check_nucleus(cn_c, cn_term, cn_window, table);
        }
        if (app.got_subcommand(image)) return run_image(img_c, img_n, table);
        if (app.got_subcommand(glivenko)) return run_glivenko(gl_c, gl_n, table);
        if (app.got_subcommand(cv)) {
            return run_classify_variety(cv_gens, cv_file, table);
        }
        if (app.got_subcommand(vv)) {
            return run_verify_variety(vv_gens, vv_file, vv_window, table);
        }
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const nucleon::NotResiduatedError& e) {
        Json j;
        j["error"] = "not-residuated";
        j["b"] = e.b;
        j["c"] = e.c;
        j["message"] = e.what();
        emit(j, table);
        return kExitNegative;
    } catch (const nucleon::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nucleon::StructuralError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nucleon::SizeCapError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nucleon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
