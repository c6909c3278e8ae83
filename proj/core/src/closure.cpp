#include "bivek/closure.hpp"

#include "bivek/calculus.hpp"
#include "bivek/funcspec.hpp"

#include "json.hpp"

#include <cmath>
#include <sstream>

namespace bivek {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string closure_spec(const std::string& name, ordered_json params) {
    ordered_json doc;
    doc["kind"] = "closure";
    doc["name"] = name;
    doc["params"] = std::move(params);
    return doc.dump();
}

} // namespace

Bicomplex evaluate(const Func& f, Complex z) {
    if (const auto* p = std::get_if<BiPoly>(&f)) return p->eval(z);
    return std::get<ClosureFn>(f).eval(z);
}

std::string descriptor(const Func& f) {
    if (std::holds_alternative<BiPoly>(f)) return "bipoly";
    return std::get<ClosureFn>(f).descriptor;
}

ClosureFn make_pow_one_minus_z(double beta) {
    std::ostringstream name;
    name << "pow_one_minus_z(beta=" << beta << ")";
    ClosureFn fn;
    fn.descriptor = name.str();
    fn.spec_json = closure_spec("pow_one_minus_z", {{"beta", beta}});
    fn.eval = [beta](Complex z) {
        const Complex v = std::exp(-beta * std::log(1.0 - z));
        return Bicomplex::from_planes(v);
    };
    return fn;
}

ClosureFn make_exp_of_bipoly(const BiPoly& g) {
    ClosureFn fn;
    fn.descriptor = "exp_of_bipoly";
    fn.spec_json =
        closure_spec("exp_of_bipoly", {{"poly", ordered_json::parse(bipoly_spec_json(g))}});
    fn.eval = [g](Complex z) { return bexp(g.eval(z)); };
    // Componentwise chain rule: (e^g)± = e^{g±}, so ∂̄e^g = (∂̄g)·e^g and
    // likewise for ∂.
    const BiPoly dbar_g = dbar(g);
    const BiPoly d_g = d(g);
    fn.dbar_analytic = [g, dbar_g](Complex z) {
        return mul(dbar_g.eval(z), bexp(g.eval(z)));
    };
    fn.d_analytic = [g, d_g](Complex z) {
        return mul(d_g.eval(z), bexp(g.eval(z)));
    };
    return fn;
}

ClosureFn make_product_exp(const BiPoly& phi, const BiPoly& g) {
    ClosureFn fn;
    fn.descriptor = "product_exp";
    fn.spec_json =
        closure_spec("product_exp", {{"phi", ordered_json::parse(bipoly_spec_json(phi))},
                                     {"exponent", ordered_json::parse(bipoly_spec_json(g))}});
    fn.eval = [phi, g](Complex z) { return mul(phi.eval(z), bexp(g.eval(z))); };
    return fn;
}

} // namespace bivek
