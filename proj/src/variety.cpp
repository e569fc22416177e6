#include "nucleon/variety.hpp"

#include <sstream>

#include "nucleon/eval.hpp"

namespace nucleon {

namespace {

bool is_omega(const ComponentKind& c) {
    return std::holds_alternative<OmegaHoop>(c);
}
bool is_chang(const ComponentKind& c) {
    return std::holds_alternative<ChangHoop>(c);
}

} // namespace

VarietyFlags compute_flags(const VarietyDescriptor& v) {
    if (v.generators.empty()) {
        throw StructuralError("variety needs at least one generator");
    }
    VarietyFlags f;
    for (const ChainDescriptor& g : v.generators) {
        ChainOps validate(g); // rejects malformed descriptors
        const auto& comps = g.components;
        for (std::size_t i = 1; i < comps.size(); ++i) {
            if (is_bounded_component(comps[i])) f.has_s11 = true;
            if (is_omega(comps[i])) f.has_s1w = true;
            if (is_chang(comps[i])) {
                // (1,-1) generates a copy of the free cancellative hoop.
                f.has_s1_chang = true;
                f.has_s1w = true;
            }
            if (const auto* mv = std::get_if<FiniteMV>(&comps[i])) {
                for (int j = 1; j <= mv->k; ++j) {
                    f.p.insert((mv->k + j - 1) / j); // ceil(k/j)
                }
            }
            for (std::size_t j = i + 1; j < comps.size(); ++j) {
                if (is_bounded_component(comps[i]) && is_omega(comps[j])) {
                    f.has_s11w = true;
                }
                if (is_omega(comps[i]) && is_bounded_component(comps[j])) {
                    f.has_s1w1 = true;
                }
            }
        }
    }
    if (!f.p.empty()) f.m = *f.p.rbegin();
    return f;
}

std::string to_string(CatalogCase c) {
    switch (c) {
    case CatalogCase::I: return "i";
    case CatalogCase::II: return "ii";
    case CatalogCase::III: return "iii";
    case CatalogCase::IV: return "iv";
    }
    return {};
}

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Ok: return "ok";
    case CheckStatus::Failed: return "failed";
    case CheckStatus::InconclusiveWindow: return "inconclusive-window";
    }
    return {};
}

NucleusCatalog catalog_from_flags(const VarietyFlags& f, bool pure_mv) {
    NucleusCatalog cat;
    cat.m = f.m;
    cat.entries.push_back({"x", terms::identity(), false});
    cat.entries.push_back({"~~x", terms::double_negation(), false});
    cat.entries.push_back({"1", terms::top(), false});
    cat.double_neg_equals_identity = pure_mv;

    const bool chang = f.has_s1_chang;
    if (f.has_s11w && !chang && !f.has_s1w1) {
        cat.case_id = CatalogCase::II;
        cat.entries.push_back({"s_m", terms::s_m(*f.m), true});
    } else if (f.has_s1w1 && !chang && !f.has_s11w) {
        cat.case_id = CatalogCase::III;
        cat.entries.push_back({"t_m", terms::t_m(*f.m), true});
    } else if (f.has_s11 && f.has_s1w && !chang && !f.has_s11w && !f.has_s1w1) {
        cat.case_id = CatalogCase::IV;
        cat.entries.push_back({"s_m", terms::s_m(*f.m), true});
        cat.entries.push_back({"t_m", terms::t_m(*f.m), true});
    } else {
        // Covers: neither or exactly one of s11/s1w; a Chang tail; and the
        // mixed-order situation where both s11w and s1w1 hold.
        cat.case_id = CatalogCase::I;
    }
    return cat;
}

NucleusCatalog classify(const VarietyDescriptor& v) {
    bool pure_mv = true;
    for (const ChainDescriptor& g : v.generators) {
        if (g.components.size() > 1) pure_mv = false;
    }
    return catalog_from_flags(compute_flags(v), pure_mv);
}

bool s_m_expected_nucleus(const VarietyFlags& f) {
    return !f.has_s1_chang && !f.has_s1w1;
}

bool t_m_expected_nucleus(const VarietyFlags& f) {
    return !f.has_s1_chang && !f.has_s11w;
}

bool VerificationReport::all_ok() const {
    for (const VerificationCheck& c : checks) {
        if (c.status != CheckStatus::Ok) return false;
    }
    return true;
}

namespace {

bool descriptor_is_finite(const ChainDescriptor& d) {
    for (const ComponentKind& c : d.components) {
        if (!std::holds_alternative<FiniteMV>(c)) return false;
    }
    return true;
}

ChainElement eval_at(const TermExpr& t, const ChainOps& ops, const ChainElement& e) {
    const std::set<std::string> vars = free_vars(t);
    const std::string x = vars.empty() ? std::string("x") : *vars.begin();
    EnvOf<ChainOps> env{{x, e}};
    return eval_term(t, ops, env);
}

} // namespace

VerificationReport verify_classification(const VarietyDescriptor& v, int window) {
    VerificationReport report;
    report.window = window;
    report.catalog = classify(v);

    std::vector<ChainOps> ops;
    std::vector<std::vector<ChainElement>> windows;
    std::vector<std::string> names;
    for (const ChainDescriptor& g : v.generators) {
        ops.emplace_back(g);
        windows.push_back(enumerate_window(g, window));
        names.push_back(to_string(g));
    }

    // 1. Every catalog term is a nucleus on every generator.
    for (const CatalogEntry& e : report.catalog.entries) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            const bool finite = descriptor_is_finite(v.generators[i]);
            VerificationCheck c;
            c.generator = names[i];
            c.term = e.name;
            c.expectation = finite ? "nucleus (exhaustive)" : "nucleus (window)";
            auto cex = find_term_nucleus_counterexample(*e.term, ops[i], windows[i]);
            if (cex) {
                c.status = CheckStatus::Failed;
                std::ostringstream os;
                os << "a=" << to_string(cex->a) << ", b=" << to_string(cex->b)
                   << ", t(a)->t(b)=" << to_string(cex->lhs)
                   << ", a->t(b)=" << to_string(cex->rhs);
                c.witness = os.str();
            }
            report.checks.push_back(std::move(c));
        }
    }

    // 2. Candidates among {s_m, t_m} outside the catalog. When the
    //    structural criterion predicts failure a counterexample must exist in
    //    the window; otherwise the candidate is a nucleus that collapses to a
    //    trivial one, which is equally checkable.
    const VarietyFlags flags = compute_flags(v);
    const int m = report.catalog.m.value_or(1);
    for (const auto& [name, term, expected_nucleus] :
         {std::tuple<std::string, TermPtr, bool>{"s_m", terms::s_m(m),
                                                 s_m_expected_nucleus(flags)},
          std::tuple<std::string, TermPtr, bool>{"t_m", terms::t_m(m),
                                                 t_m_expected_nucleus(flags)}}) {
        bool in_catalog = false;
        for (const CatalogEntry& e : report.catalog.entries) {
            if (e.name == name) in_catalog = true;
        }
        if (in_catalog) continue;
        if (!expected_nucleus) {
            VerificationCheck c;
            c.term = name;
            c.expectation = "refuted on some generator";
            c.status = CheckStatus::InconclusiveWindow;
            for (std::size_t i = 0; i < ops.size(); ++i) {
                auto cex = find_term_nucleus_counterexample(*term, ops[i], windows[i]);
                if (cex) {
                    c.generator = names[i];
                    c.status = CheckStatus::Ok;
                    std::ostringstream os;
                    os << "a=" << to_string(cex->a) << ", b=" << to_string(cex->b)
                       << ", t(a)->t(b)=" << to_string(cex->lhs)
                       << ", a->t(b)=" << to_string(cex->rhs);
                    c.witness = os.str();
                    break;
                }
            }
            report.checks.push_back(std::move(c));
            continue;
        }
        // Trivial collapse: the candidate is a nucleus equal to x or ~~x.
        std::string matches;
        for (const auto& [triv_name, triv] :
             {std::pair<std::string, TermPtr>{"x", terms::identity()},
              std::pair<std::string, TermPtr>{"~~x", terms::double_negation()}}) {
            bool everywhere = true;
            for (std::size_t i = 0; i < ops.size() && everywhere; ++i) {
                if (find_identity_counterexample(*term, *triv, ops[i], windows[i])) {
                    everywhere = false;
                }
            }
            if (everywhere) {
                matches = triv_name;
                break;
            }
        }
        VerificationCheck c;
        c.term = name;
        c.expectation = "collapses to a trivial nucleus";
        if (matches.empty()) {
            c.status = CheckStatus::InconclusiveWindow;
        } else {
            c.witness = "equals " + matches + " on every generator window";
        }
        report.checks.push_back(std::move(c));
    }

    // 3. Nontrivial entries: fix bottom, and separate from x and from ~~x by
    //    explicit window witnesses.
    for (const CatalogEntry& e : report.catalog.entries) {
        if (!e.nontrivial) continue;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            VerificationCheck c;
            c.generator = names[i];
            c.term = e.name;
            c.expectation = "t(0) = 0";
            const ChainElement at_bot = eval_at(*e.term, ops[i], ops[i].bot());
            if (!(at_bot == ops[i].bot())) {
                c.status = CheckStatus::Failed;
                c.witness = "t(0)=" + to_string(at_bot);
            }
            report.checks.push_back(std::move(c));
        }
        VerificationCheck above;
        above.term = e.name;
        above.expectation = "strict witness a < t(a)";
        above.status = CheckStatus::InconclusiveWindow;
        VerificationCheck below;
        below.term = e.name;
        below.expectation = "strict witness t(b) < ~~b";
        below.status = CheckStatus::InconclusiveWindow;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (const ChainElement& a : windows[i]) {
                const ChainElement ta = eval_at(*e.term, ops[i], a);
                if (above.status != CheckStatus::Ok && !(ta == a) &&
                    ops[i].leq(a, ta)) {
                    above.status = CheckStatus::Ok;
                    above.generator = names[i];
                    above.witness =
                        "a=" + to_string(a) + ", t(a)=" + to_string(ta);
                }
                const ChainElement nna = ops[i].neg(ops[i].neg(a));
                if (below.status != CheckStatus::Ok && !(ta == nna) &&
                    ops[i].leq(ta, nna)) {
                    below.status = CheckStatus::Ok;
                    below.generator = names[i];
                    below.witness = "b=" + to_string(a) + ", t(b)=" +
                                    to_string(ta) + ", ~~b=" + to_string(nna);
                }
            }
        }
        report.checks.push_back(std::move(above));
        report.checks.push_back(std::move(below));
    }
    return report;
}

} // namespace nucleon
