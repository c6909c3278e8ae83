#include "bivek/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bivek {

// ============== ComplexPoly ==============

ComplexPoly ComplexPoly::term(int m, int n, Complex c) {
    ComplexPoly p;
    p.add_term(m, n, c);
    return p;
}

void ComplexPoly::add_term(int m, int n, Complex c) {
    if (c == Complex{}) return;
    auto key = Exponents{m, n};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
}

Complex ComplexPoly::coeff(int m, int n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? Complex{} : it->second;
}

int ComplexPoly::degree_z() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.first);
    return deg;
}

int ComplexPoly::degree_zstar() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e.second);
    return deg;
}

Complex ComplexPoly::eval(Complex z) const {
    // Sparse tables stay small here; direct powers with memoized products
    // would not beat this at the degrees the library caps at.
    const Complex zs = std::conj(z);
    Complex acc{};
    for (const auto& [e, c] : terms_) {
        Complex t = c;
        for (int k = 0; k < e.first; ++k) t *= z;
        for (int k = 0; k < e.second; ++k) t *= zs;
        acc += t;
    }
    return acc;
}

ComplexPoly ComplexPoly::operator-() const {
    ComplexPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

ComplexPoly operator+(const ComplexPoly& f, const ComplexPoly& g) {
    ComplexPoly out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e.first, e.second, c);
    return out;
}

ComplexPoly operator-(const ComplexPoly& f, const ComplexPoly& g) {
    ComplexPoly out = f;
    for (const auto& [e, c] : g.terms_) out.add_term(e.first, e.second, -c);
    return out;
}

ComplexPoly operator*(Complex s, const ComplexPoly& f) {
    ComplexPoly out;
    for (const auto& [e, c] : f.terms())
        out.add_term(e.first, e.second, s * c);
    return out;
}

ComplexPoly ComplexPoly::mul(const ComplexPoly& f, const ComplexPoly& g, int degree_cap) {
    ComplexPoly out;
    for (const auto& [ef, cf] : f.terms_) {
        for (const auto& [eg, cg] : g.terms_) {
            const int m = ef.first + eg.first;
            const int n = ef.second + eg.second;
            if (m > degree_cap || n > degree_cap) {
                throw DegreeOverflow("poly mul: result degree (" + std::to_string(m) + ", " +
                                     std::to_string(n) + ") exceeds cap " +
                                     std::to_string(degree_cap));
            }
            out.add_term(m, n, cf * cg);
        }
    }
    return out;
}

ComplexPoly ComplexPoly::dz() const {
    ComplexPoly out;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) out.add_term(e.first - 1, e.second, double(e.first) * c);
    return out;
}

ComplexPoly ComplexPoly::dzstar() const {
    ComplexPoly out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) out.add_term(e.first, e.second - 1, double(e.second) * c);
    return out;
}

ComplexPoly ComplexPoly::conj_fn() const {
    ComplexPoly out;
    for (const auto& [e, c] : terms_)
        out.add_term(e.second, e.first, std::conj(c));
    return out;
}

double ComplexPoly::max_coeff() const {
    double worst = 0.0;
    for (const auto& [e, c] : terms_) worst = std::max(worst, std::abs(c));
    return worst;
}

double coeff_distance(const ComplexPoly& f, const ComplexPoly& g) {
    return (f - g).max_coeff();
}

// ============== BiPoly ==============

BiPoly BiPoly::constant(const Bicomplex& c) {
    return {ComplexPoly::constant(c.plus()), ComplexPoly::constant(c.minus())};
}

BiPoly BiPoly::zhat_monomial(int mz, int mzs, const Bicomplex& c) {
    // ẑ has parts (z*, z) and ẑ* has parts (z, z*), so ẑ^mz·(ẑ*)^mzs has
    // plus part z^mzs·(z*)^mz and minus part z^mz·(z*)^mzs.
    BiPoly out;
    out.plus = ComplexPoly::term(mzs, mz, c.plus());
    out.minus = ComplexPoly::term(mz, mzs, c.minus());
    return out;
}

double BiPoly::max_coeff() const {
    return std::max(plus.max_coeff(), minus.max_coeff());
}

BiPoly operator+(const BiPoly& f, const BiPoly& g) { return {f.plus + g.plus, f.minus + g.minus}; }
BiPoly operator-(const BiPoly& f, const BiPoly& g) { return {f.plus - g.plus, f.minus - g.minus}; }
BiPoly operator-(const BiPoly& f) { return {-f.plus, -f.minus}; }

BiPoly mul(const BiPoly& f, const BiPoly& g, int degree_cap) {
    return {ComplexPoly::mul(f.plus, g.plus, degree_cap),
            ComplexPoly::mul(f.minus, g.minus, degree_cap)};
}

BiPoly scale(const Bicomplex& lambda, const BiPoly& f) {
    return {lambda.plus() * f.plus, lambda.minus() * f.minus};
}

BiPoly conj(const BiPoly& f, ConjKind kind) {
    switch (kind) {
    case ConjKind::bar_ij: return {f.plus.conj_fn(), f.minus.conj_fn()};
    case ConjKind::bar_j:  return {f.minus, f.plus};
    case ConjKind::bar_i:  return {f.minus.conj_fn(), f.plus.conj_fn()};
    }
    throw ConventionError("conj(BiPoly): unknown conjugation kind");
}

bool holomorphy_check(const BiPoly& f) {
    for (const auto& [e, c] : f.plus.terms())
        if (e.first != 0) return false;
    for (const auto& [e, c] : f.minus.terms())
        if (e.second != 0) return false;
    return true;
}

namespace {
double truncate_part(ComplexPoly& p, int cap) {
    double dropped = 0.0;
    ComplexPoly kept;
    for (const auto& [e, c] : p.terms()) {
        if (e.first > cap || e.second > cap)
            dropped += std::abs(c);
        else
            kept.add_term(e.first, e.second, c);
    }
    p = kept;
    return dropped;
}
} // namespace

double truncate(BiPoly& f, int cap) {
    return truncate_part(f.plus, cap) + truncate_part(f.minus, cap);
}

double coeff_distance(const BiPoly& f, const BiPoly& g) {
    return std::max(coeff_distance(f.plus, g.plus), coeff_distance(f.minus, g.minus));
}

} // namespace bivek
