#include "bivek/funcspec.hpp"

#include "bivek/errors.hpp"

#include "json.hpp"

#include <string>

namespace bivek {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_or_throw(const std::string& text, const char* who) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw SchemaError(std::string(who) + ": malformed JSON: " + e.what());
    }
}

Bicomplex coeff_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 4)
        throw SchemaError("function spec: coeff must be a 4-element array [a,b,c,d]");
    for (const auto& v : j)
        if (!v.is_number())
            throw SchemaError("function spec: coeff entries must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

BiPoly bipoly_from_json(const ordered_json& doc) {
    BiPoly f;
    if (!doc.contains("terms")) return f;
    const auto& terms = doc.at("terms");
    if (!terms.is_array()) throw SchemaError("function spec: terms must be an array");
    for (const auto& term : terms) {
        if (!term.is_object() || !term.contains("mz") || !term.contains("mzs") ||
            !term.contains("coeff"))
            throw SchemaError("function spec: each term needs mz, mzs and coeff");
        if (!term.at("mz").is_number_integer() || !term.at("mzs").is_number_integer())
            throw SchemaError("function spec: term degrees must be integers");
        const int mz = term.at("mz").get<int>();
        const int mzs = term.at("mzs").get<int>();
        if (mz < 0 || mzs < 0)
            throw SchemaError("function spec: term degrees must be >= 0");
        if (mz > kDefaultDegreeCap || mzs > kDefaultDegreeCap)
            throw DegreeOverflow("function spec: term degree exceeds the cap " +
                                 std::to_string(kDefaultDegreeCap));
        // Duplicate (mz, mzs) entries accumulate.
        f = f + BiPoly::zhat_monomial(mz, mzs, coeff_from_json(term.at("coeff")));
    }
    return f;
}

BiPoly bipoly_field(const ordered_json& params, const char* name) {
    if (!params.contains(name))
        throw SchemaError(std::string("function spec: closure params need \"") + name + "\"");
    const auto& doc = params.at(name);
    if (!doc.is_object() || doc.value("kind", "") != "bipoly")
        throw SchemaError(std::string("function spec: params.") + name +
                          " must be a bipoly document");
    return bipoly_from_json(doc);
}

ordered_json bipoly_to_json(const BiPoly& f) {
    ordered_json doc;
    doc["kind"] = "bipoly";
    doc["terms"] = ordered_json::array();
    // One ẑ-basis term per exponent pair appearing in either part: the
    // bicomplex coefficient of ẑ^m(ẑ*)^n is join of the plus coefficient at
    // (n, m) and the minus coefficient at (m, n).
    std::map<Exponents, Bicomplex> coeffs;
    for (const auto& [e, c] : f.plus.terms()) {
        const Exponents key{e.second, e.first};
        auto [it, inserted] = coeffs.emplace(key, Bicomplex{});
        it->second += join(c, Complex{});
    }
    for (const auto& [e, c] : f.minus.terms()) {
        auto [it, inserted] = coeffs.emplace(e, Bicomplex{});
        it->second += join(Complex{}, c);
    }
    for (const auto& [e, c] : coeffs) {
        ordered_json term;
        term["mz"] = e.first;
        term["mzs"] = e.second;
        term["coeff"] = {c.a, c.b, c.c, c.d};
        doc["terms"].push_back(term);
    }
    return doc;
}

} // namespace

Func parse_function_spec(const std::string& json_text) {
    const ordered_json doc = parse_or_throw(json_text, "parse_function_spec");
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
        throw SchemaError("function spec: document must be an object with a \"kind\" string");
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "bipoly") return bipoly_from_json(doc);
    if (kind != "closure")
        throw SchemaError("function spec: unknown kind \"" + kind + "\"");

    const std::string name = doc.value("name", "");
    const ordered_json params = doc.value("params", ordered_json::object());
    if (name == "pow_one_minus_z") {
        if (!params.contains("beta") || !params.at("beta").is_number())
            throw SchemaError("function spec: pow_one_minus_z needs numeric params.beta");
        return make_pow_one_minus_z(params.at("beta").get<double>());
    }
    if (name == "exp_of_bipoly") return make_exp_of_bipoly(bipoly_field(params, "poly"));
    if (name == "product_exp")
        return make_product_exp(bipoly_field(params, "phi"), bipoly_field(params, "exponent"));
    throw SchemaError("function spec: unknown closure name \"" + name + "\"");
}

std::string bipoly_spec_json(const BiPoly& f, int indent) {
    return bipoly_to_json(f).dump(indent);
}

std::string function_spec_json(const Func& f, int indent) {
    if (const auto* p = std::get_if<BiPoly>(&f)) return bipoly_spec_json(*p, indent);
    const ClosureFn& fn = std::get<ClosureFn>(f);
    if (fn.spec_json.empty())
        throw SchemaError("function_spec_json: closure \"" + fn.descriptor +
                          "\" has no document form");
    return parse_or_throw(fn.spec_json, "function_spec_json").dump(indent);
}

std::string conj_name(ConjKind kind) {
    switch (kind) {
        case ConjKind::bar_j: return "bar_j";
        case ConjKind::bar_i: return "bar_i";
        case ConjKind::bar_ij: return "bar_ij";
    }
    throw SchemaError("conj_name: unknown conjugation kind");
}

ConjKind conj_from_name(const std::string& name) {
    if (name == "bar_j") return ConjKind::bar_j;
    if (name == "bar_i") return ConjKind::bar_i;
    if (name == "bar_ij") return ConjKind::bar_ij;
    throw SchemaError("conjugation must be bar_ij, bar_j or bar_i; got \"" + name + "\"");
}

VekuaProblem parse_problem(const std::string& json_text) {
    const ordered_json doc = parse_or_throw(json_text, "parse_problem");
    if (!doc.is_object()) throw SchemaError("problem spec: document must be an object");
    VekuaProblem problem;
    for (const char* field : {"A", "B"}) {
        if (!doc.contains(field)) continue;
        Func f = parse_function_spec(doc.at(field).dump());
        const BiPoly* poly = std::get_if<BiPoly>(&f);
        if (!poly)
            throw SchemaError(std::string("problem spec: ") + field +
                              " must be a bipoly document (closures are not valid "
                              "Vekua coefficients)");
        (field[0] == 'A' ? problem.A : problem.B) = *poly;
    }
    if (doc.contains("conj")) {
        if (!doc.at("conj").is_string())
            throw SchemaError("problem spec: conj must be a string");
        const ConjKind kind = conj_from_name(doc.at("conj").get<std::string>());
        if (kind == ConjKind::bar_i)
            throw SchemaError("problem spec: conj must be bar_ij or bar_j");
        problem.conj_kind = kind;
    }
    if (doc.contains("degree_cap")) {
        if (!doc.at("degree_cap").is_number_integer() || doc.at("degree_cap").get<int>() < 1)
            throw SchemaError("problem spec: degree_cap must be a positive integer");
        problem.degree_cap = doc.at("degree_cap").get<int>();
    }
    problem.validate();
    return problem;
}

std::string problem_json(const VekuaProblem& problem, int indent) {
    ordered_json doc;
    doc["A"] = bipoly_to_json(problem.A);
    doc["B"] = bipoly_to_json(problem.B);
    doc["conj"] = conj_name(problem.conj_kind);
    doc["degree_cap"] = problem.degree_cap;
    return doc.dump(indent);
}

} // namespace bivek
