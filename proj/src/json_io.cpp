#include "nucleon/json_io.hpp"

#include <fstream>

namespace nucleon {

namespace {

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw StructuralError(std::string("missing or non-integer field \"") +
                              key + "\"");
    }
    return j[key].get<int>();
}

ElemTable get_table(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw StructuralError(std::string("missing table \"") + key + "\"");
    }
    ElemTable t;
    for (const Json& row : j[key]) {
        if (!row.is_array()) {
            throw StructuralError(std::string("table \"") + key +
                                  "\" must be an array of rows");
        }
        std::vector<int> r;
        for (const Json& cell : row) {
            if (!cell.is_number_integer()) {
                throw StructuralError(std::string("non-integer entry in \"") +
                                      key + "\"");
            }
            r.push_back(cell.get<int>());
        }
        t.push_back(std::move(r));
    }
    return t;
}

} // namespace

FiniteAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) throw StructuralError("algebra document must be an object");
    const int n = get_int(j, "size");
    const ElemTable leq_raw = get_table(j, "leq");
    BoolTable leq;
    for (const auto& row : leq_raw) {
        std::vector<bool> r;
        for (int v : row) {
            if (v != 0 && v != 1) {
                throw StructuralError("leq entries must be 0 or 1");
            }
            r.push_back(v == 1);
        }
        leq.push_back(std::move(r));
    }
    ElemTable mul = get_table(j, "mul");
    std::optional<ElemTable> imp;
    if (j.contains("imp") && !j["imp"].is_null()) imp = get_table(j, "imp");
    return FiniteAlgebra(n, std::move(leq), std::move(mul), std::move(imp),
                         get_int(j, "bot"), get_int(j, "top"));
}

Json algebra_to_json(const FiniteAlgebra& a) {
    Json j;
    j["size"] = a.size();
    Json leq = Json::array();
    for (const auto& row : a.leq_table()) {
        Json r = Json::array();
        for (bool v : row) r.push_back(v ? 1 : 0);
        leq.push_back(std::move(r));
    }
    j["leq"] = std::move(leq);
    j["mul"] = a.mul_table();
    j["imp"] = a.imp_table();
    j["bot"] = a.bot();
    j["top"] = a.top();
    return j;
}

FiniteAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("invalid JSON in " + path + ": " + e.what());
    }
    return algebra_from_json(j);
}

Json nucleus_to_json(const FiniteAlgebra& a, const NucleusMap& gamma) {
    Json j;
    j["values"] = gamma.values;
    Json image = Json::array();
    for (int x = 0; x < a.size(); ++x) {
        if (gamma.values[x] == x) image.push_back(x);
    }
    j["image"] = std::move(image);
    j["dense"] = dense_filter(a, gamma).members;
    j["glivenko"] = glivenko_check(a, gamma).holds;
    j["kind"] = nucleus_kind(a, gamma.values);
    return j;
}

VarietyDescriptor variety_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
        throw StructuralError("variety document needs a \"generators\" array");
    }
    VarietyDescriptor v;
    for (const Json& g : j["generators"]) {
        if (!g.is_string()) {
            throw StructuralError("generators must be descriptor strings");
        }
        v.generators.push_back(parse_descriptor(g.get<std::string>()));
    }
    return v;
}

VarietyDescriptor load_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError("invalid JSON in " + path + ": " + e.what());
    }
    return variety_from_json(j);
}

Json flags_to_json(const VarietyFlags& f) {
    Json j;
    j["has_s11"] = f.has_s11;
    j["has_s1w"] = f.has_s1w;
    j["has_s1_chang"] = f.has_s1_chang;
    j["has_s11w"] = f.has_s11w;
    j["has_s1w1"] = f.has_s1w1;
    j["p"] = f.p;
    if (f.m) {
        j["m"] = *f.m;
    } else {
        j["m"] = nullptr;
    }
    return j;
}

Json catalog_to_json(const NucleusCatalog& c) {
    Json j;
    j["case"] = to_string(c.case_id);
    if (c.m) {
        j["m"] = *c.m;
    } else {
        j["m"] = nullptr;
    }
    Json terms = Json::array();
    for (const CatalogEntry& e : c.entries) {
        Json t;
        t["name"] = e.name;
        t["term"] = print_term(*e.term);
        t["nontrivial"] = e.nontrivial;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["double_neg_equals_identity"] = c.double_neg_equals_identity;
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["window"] = r.window;
    j["case"] = to_string(r.catalog.case_id);
    Json checks = Json::array();
    for (const VerificationCheck& c : r.checks) {
        Json e;
        e["generator"] = c.generator;
        e["term"] = c.term;
        e["expectation"] = c.expectation;
        e["status"] = to_string(c.status);
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["all_ok"] = r.all_ok();
    return j;
}

Json validation_to_json(const ValidationReport& r) {
    Json j;
    j["valid"] = r.ok();
    Json failures = Json::array();
    for (const AxiomFailure& f : r.failures) {
        Json e;
        e["axiom"] = f.axiom;
        e["witness"] = f.witness;
        if (!f.detail.empty()) e["detail"] = f.detail;
        failures.push_back(std::move(e));
    }
    j["failures"] = std::move(failures);
    return j;
}

Json class_flags_to_json(const AlgebraClassFlags& f) {
    Json j;
    j["is_bl"] = f.is_bl;
    j["is_mv"] = f.is_mv;
    j["is_idempotent"] = f.is_idempotent;
    j["is_prelinear"] = f.is_prelinear;
    j["is_divisible"] = f.is_divisible;
    j["is_involutive"] = f.is_involutive;
    j["is_chain"] = f.is_chain;
    return j;
}

} // namespace nucleon
