#pragma once

#include <cstddef>
#include <string>

#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace tracedual {

enum class Variant { cyclic, skew };
enum class Form { te, th };  // trace-Euclidean / trace-Hermitian

inline std::string variant_name(Variant v) { return v == Variant::cyclic ? "cyclic" : "skew"; }
inline std::string form_name(Form f) { return f == Form::te ? "te" : "th"; }

// Element c(X) + gamma*d(X) of R_n = F_{q^2}[X]/(X^n - 1) (cyclic) or of the
// skew quotient F_{q^2}[X;sigma]/(X^n - 1) (skew, n even).  Both component
// polynomials are reduced mod X^n - 1.
struct RnElem {
    std::size_t n = 0;
    FqPoly c;
    FqPoly d;
    friend bool operator==(const RnElem&, const RnElem&) = default;
};

inline RnElem make_rn(const FieldCtx& F, std::size_t n, FqPoly c, FqPoly d) {
    if (n == 0) throw LengthMismatch("length must be positive");
    return RnElem{n, mod_xn1(F, std::move(c), n), mod_xn1(F, std::move(d), n)};
}

inline RnElem rn_zero(std::size_t n) { return RnElem{n, FqPoly(), FqPoly()}; }

inline void check_lengths(const RnElem& u, const RnElem& v) {
    if (u.n != v.n)
        throw LengthMismatch("length " + std::to_string(u.n) + " vs " + std::to_string(v.n));
}

inline void check_variant_length(Variant variant, std::size_t n) {
    if (variant == Variant::skew && n % 2 != 0)
        throw OddLength("skew variant requires even length, got " + std::to_string(n));
}

inline RnElem add_rn(const FieldCtx& F, const RnElem& u, const RnElem& v) {
    check_lengths(u, v);
    return RnElem{u.n, add(F, u.c, v.c), add(F, u.d, v.d)};
}

inline RnElem sub_rn(const FieldCtx& F, const RnElem& u, const RnElem& v) {
    check_lengths(u, v);
    return RnElem{u.n, sub(F, u.c, v.c), sub(F, u.d, v.d)};
}

// Scalar action of alpha = s + gamma*t in F_{q^2}:
// alpha*(c + gamma*d) = (s*c + delta*t*d) + gamma*(t*c + s*d).
inline RnElem scalar_mul(const FieldCtx& F, Fq2 alpha, const RnElem& u) {
    FqPoly sc = mul_scalar(F, u.c, alpha.a);
    FqPoly dtd = mul_scalar(F, u.d, F.mul(F.delta(), alpha.b));
    FqPoly tc = mul_scalar(F, u.c, alpha.b);
    FqPoly sd = mul_scalar(F, u.d, alpha.a);
    return RnElem{u.n, add(F, sc, dtd), add(F, tc, sd)};
}

// Left action of a(X) in F_q[X].  Cyclic: both components are multiplied by
// a.  Skew: a(X)*gamma = gamma*a(-X), so the gamma component picks up a(-X).
inline RnElem left_action(const FieldCtx& F, const FqPoly& a, const RnElem& u, Variant variant) {
    check_variant_length(variant, u.n);
    FqPoly c = mod_xn1(F, mul(F, a, u.c), u.n);
    const FqPoly& ad = variant == Variant::skew ? flip(F, a) : a;
    FqPoly d = mod_xn1(F, mul(F, ad, u.d), u.n);
    return RnElem{u.n, std::move(c), std::move(d)};
}

// Ring product of u = c1 + gamma*d1 and v = c2 + gamma*d2.
// Cyclic:  (c1*c2 + delta*d1*d2) + gamma*(c1*d2 + d1*c2).
// Skew:    (c1*c2 + delta*d1(-X)*d2) + gamma*(c1(-X)*d2 + d1*c2).
inline RnElem skew_mul(const FieldCtx& F, const RnElem& u, const RnElem& v, Variant variant) {
    check_lengths(u, v);
    check_variant_length(variant, u.n);
    Fq delta = F.delta();
    FqPoly d1a = variant == Variant::skew ? flip(F, u.d) : u.d;
    FqPoly c1a = variant == Variant::skew ? flip(F, u.c) : u.c;
    FqPoly c = add(F, mul(F, u.c, v.c), mul_scalar(F, mul(F, d1a, v.d), delta));
    FqPoly d = add(F, mul(F, c1a, v.d), mul(F, u.d, v.c));
    return RnElem{u.n, mod_xn1(F, std::move(c), u.n), mod_xn1(F, std::move(d), u.n)};
}

// Coefficientwise pairings.  No polynomial multiplication is involved: the
// coefficients are paired positionally.
//
//   star(u, v)   = sum_i u_i v_i           (values in F_{q^2})
//   bullet(u, v) = sum_i u_i sigma(v_i)
inline Fq2 star(const FieldCtx& F, const RnElem& u, const RnElem& v) {
    check_lengths(u, v);
    Fq2 acc = F.zero2();
    for (std::size_t i = 0; i < u.n; ++i) {
        Fq2 ui = F.make2(u.c.coeff(i), u.d.coeff(i));
        Fq2 vi = F.make2(v.c.coeff(i), v.d.coeff(i));
        acc = F.add(acc, F.mul(ui, vi));
    }
    return acc;
}

inline Fq2 bullet(const FieldCtx& F, const RnElem& u, const RnElem& v) {
    check_lengths(u, v);
    Fq2 acc = F.zero2();
    for (std::size_t i = 0; i < u.n; ++i) {
        Fq2 ui = F.make2(u.c.coeff(i), u.d.coeff(i));
        Fq2 vi = F.frobenius(F.make2(v.c.coeff(i), v.d.coeff(i)));
        acc = F.add(acc, F.mul(ui, vi));
    }
    return acc;
}

// Trace forms: te pairs with star, th with bullet; both land in F_q.
inline Fq trace_form(const FieldCtx& F, const RnElem& u, const RnElem& v, Form form) {
    return F.trace(form == Form::te ? star(F, u, v) : bullet(F, u, v));
}

}  // namespace tracedual
