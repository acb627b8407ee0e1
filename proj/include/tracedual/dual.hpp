#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace tracedual {

struct DualReport {
    RnElem gen1, gen2;     // closed-form generators of the dual module
    FqPoly h, k;           // gcd data of the construction (1 when unused)
    FqPoly cprime, dprime; // Bezout cofactors (1, 0 when unused)
    std::size_t dim_code = 0;
    std::size_t dim_dual = 0;
    bool verified = false;          // oracle agreement (false when skipped)
    bool hypothesis_warning = false;  // gcd(n, p) != 1 where the construction assumes otherwise
    Code code;  // the primal module
    Code dual;  // module generated by gen1, gen2
};

struct DualOptions {
    bool verify = true;
    const GramMatrix* gram = nullptr;  // optional pre-built Gram matrix to reuse
};

namespace detail {

// Shared tail: build the primal and the claimed dual, then compare the claim
// against the brute-force nullspace dual.
inline void finish_report(const FieldCtx& F, const CodeSpec& spec, Form form, DualReport& rep,
                          const DualOptions& opts) {
    rep.code = build_code(F, spec);
    std::vector<RnElem> gens{rep.gen1, rep.gen2};
    rep.dual = build_code_from_generators(F, spec.variant, spec.n, gens);
    rep.dim_code = rep.code.dim();
    rep.dim_dual = rep.dual.dim();
    if (opts.verify) {
        Code reference = opts.gram != nullptr ? brute_dual(F, rep.code, *opts.gram)
                                              : brute_dual(F, rep.code, form);
        rep.verified = code_equals(F, rep.dual, reference);
    }
}

inline FqPoly lstar_fstar(const FieldCtx& F, const CodeSpec& spec) {
    return mul(F, reciprocal(spec.l), reciprocal(spec.f));
}

}  // namespace detail

// Generator of the Euclidean dual of the F_q-linear cyclic code <f> in
// F_q[X]/(X^n - 1): the reciprocal of the cofactor (X^n - 1)/f.
inline FqPoly euclidean_dual_linear(const FieldCtx& F, const FqPoly& f, std::size_t n) {
    if (f.is_zero()) throw NotADivisor("the zero polynomial does not divide X^n - 1");
    DivModResult d = divmod(F, xn_minus_1(F, n), f);
    if (!d.rem.is_zero()) throw NotADivisor("f does not divide X^n - 1");
    return reciprocal(d.quot);
}

// --- cyclic variant ------------------------------------------------------

// Unmixed case qpoly = 0: dual of <w*f, gamma*w*g> is <l*g*, gamma*l*f*>.
inline DualReport dual_te_cyclic_special(const FieldCtx& F, const CodeSpec& spec,
                                         const DualOptions& opts = {}) {
    spec.validate(F);
    if (spec.variant != Variant::cyclic) throw SpecViolation("spec is not cyclic");
    if (!spec.qpoly.is_zero()) throw SpecViolation("this construction requires qpoly = 0");
    FqPoly lstar = reciprocal(spec.l);
    DualReport rep;
    rep.gen1 = make_rn(F, spec.n, mul(F, lstar, reciprocal(spec.g)), FqPoly());
    rep.gen2 = make_rn(F, spec.n, FqPoly(), mul(F, lstar, reciprocal(spec.f)));
    rep.h = FqPoly::constant(F.one());
    rep.k = FqPoly::constant(F.one());
    rep.cprime = FqPoly::constant(F.one());
    rep.dprime = FqPoly();
    detail::finish_report(F, spec, Form::te, rep, opts);
    return rep;
}

// w-multiplied mixing (gen1 = w*f + gamma*w*qpoly), trace-Euclidean form.
// With A = X^{n - deg f}, B = hat(qpoly) and the Bezout identity
// c'*A + delta*d'*B = h = gcd(A, B):
//   gen1 = (g* c' l*,  g* d' l* f*)
//   gen2 = ((delta*B/h) l*,  -(A/h) l* f*).
// The construction assumes gcd(n, p) = 1; otherwise a warning flag is set
// and the oracle has the final word.
inline DualReport dual_te_cyclic_wq(const FieldCtx& F, const CodeSpec& spec,
                                    const DualOptions& opts = {}) {
    spec.validate(F);
    if (spec.variant != Variant::cyclic) throw SpecViolation("spec is not cyclic");
    if (spec.qshape != QShape::w_multiplied)
        throw SpecViolation("this construction requires the w-multiplied mixing shape");
    DualReport rep;
    rep.hypothesis_warning = (spec.n % F.p() == 0);
    Fq delta = F.delta();
    FqPoly A = FqPoly::x_pow(spec.n - spec.f.degree());
    FqPoly B = hat(spec.qpoly, spec.n);
    XgcdResult x = xgcd(F, A, B);
    rep.h = x.h;
    rep.k = FqPoly::constant(F.one());
    rep.cprime = x.u;
    rep.dprime = mul_scalar(F, x.v, F.inv(delta));
    FqPoly lstar = reciprocal(spec.l);
    FqPoly gstar = reciprocal(spec.g);
    FqPoly lf = detail::lstar_fstar(F, spec);
    rep.gen1 = make_rn(F, spec.n, mul(F, gstar, mul(F, rep.cprime, lstar)),
                       mul(F, gstar, mul(F, rep.dprime, lf)));
    rep.gen2 = make_rn(F, spec.n, mul_scalar(F, mul(F, exact_div(F, B, x.h), lstar), delta),
                       neg(F, mul(F, exact_div(F, A, x.h), lf)));
    detail::finish_report(F, spec, Form::te, rep, opts);
    return rep;
}

namespace detail {

// Plain mixing shape (gen1 = w*f + gamma*qpoly), both trace forms.  With
//   A = X^{n - deg f} hat(w),  B = l* hat(qpoly),
//   h = gcd(A, B),  W = w* l* g*,  k = gcd(h, W),
// and the Bezout identity c'*A + s*d'*B = h (s = gamma^2 = delta for the
// trace-Euclidean form, s = gamma^{q+1} = -delta for the trace-Hermitian):
//   gen1 = (c'*(W/k),  d'*(W/k) l* f*)
//   gen2 = (s*B/h,  -(A/h) l* f*).
inline DualReport dual_cyclic_general(const FieldCtx& F, const CodeSpec& spec, Form form,
                                      const DualOptions& opts) {
    spec.validate(F);
    if (spec.variant != Variant::cyclic) throw SpecViolation("spec is not cyclic");
    if (spec.qshape != QShape::plain)
        throw SpecViolation("this construction requires the plain mixing shape");
    DualReport rep;
    Fq s = form == Form::te ? F.delta() : F.neg(F.delta());
    FqPoly lstar = reciprocal(spec.l);
    FqPoly A = mul(F, FqPoly::x_pow(spec.n - spec.f.degree()), hat(spec.w, spec.n));
    FqPoly B = mul(F, lstar, hat(spec.qpoly, spec.n));
    XgcdResult x = xgcd(F, A, B);
    rep.h = x.h;
    rep.cprime = x.u;
    rep.dprime = mul_scalar(F, x.v, F.inv(s));
    FqPoly W = mul(F, reciprocal(spec.w), mul(F, lstar, reciprocal(spec.g)));
    rep.k = gcd_poly(F, rep.h, W);
    FqPoly base = exact_div(F, W, rep.k);
    FqPoly lf = lstar_fstar(F, spec);
    rep.gen1 = make_rn(F, spec.n, mul(F, rep.cprime, base), mul(F, rep.dprime, mul(F, base, lf)));
    rep.gen2 = make_rn(F, spec.n, mul_scalar(F, exact_div(F, B, x.h), s),
                       neg(F, mul(F, exact_div(F, A, x.h), lf)));
    finish_report(F, spec, form, rep, opts);
    return rep;
}

// Skew variant, both trace forms.  With
//   A = hat(w) hat(f),  B = l*(-X) f*(-X) hat(qpoly)(-X),
//   h = gcd(A, B),  k = gcd(h, X^n - 1),
// and the Bezout identity c'*A + s*d'*B = h:
//   gen1 = (c'*(X^n - 1)/k,  d'(-X) * ((X^n - 1)/k)(-X) * l* f*)
//   gen2 = (s*B/h,  -(A(-X)/h(-X)) l* f*).
inline DualReport dual_skew_general(const FieldCtx& F, const CodeSpec& spec, Form form,
                                    const DualOptions& opts) {
    spec.validate(F);
    if (spec.variant != Variant::skew) throw SpecViolation("spec is not skew");
    if (spec.qshape != QShape::plain)
        throw SpecViolation("this construction requires the plain mixing shape");
    DualReport rep;
    Fq s = form == Form::te ? F.delta() : F.neg(F.delta());
    FqPoly xn1 = xn_minus_1(F, spec.n);
    FqPoly A = mul(F, hat(spec.w, spec.n), hat(spec.f, spec.n));
    FqPoly B = mul(F, flip(F, reciprocal(spec.l)),
                   mul(F, flip(F, reciprocal(spec.f)), flip(F, hat(spec.qpoly, spec.n))));
    XgcdResult x = xgcd(F, A, B);
    rep.h = x.h;
    rep.cprime = x.u;
    rep.dprime = mul_scalar(F, x.v, F.inv(s));
    rep.k = gcd_poly(F, rep.h, xn1);
    FqPoly base = exact_div(F, xn1, rep.k);
    FqPoly lf = lstar_fstar(F, spec);
    rep.gen1 = make_rn(F, spec.n, mul(F, rep.cprime, base),
                       mul(F, flip(F, rep.dprime), mul(F, flip(F, base), lf)));
    rep.gen2 = make_rn(F, spec.n, mul_scalar(F, exact_div(F, B, x.h), s),
                       neg(F, mul(F, exact_div(F, flip(F, A), flip(F, x.h)), lf)));
    finish_report(F, spec, form, rep, opts);
    return rep;
}

}  // namespace detail

inline DualReport dual_te_cyclic_general(const FieldCtx& F, const CodeSpec& spec,
                                         const DualOptions& opts = {}) {
    return detail::dual_cyclic_general(F, spec, Form::te, opts);
}

inline DualReport dual_th_cyclic_general(const FieldCtx& F, const CodeSpec& spec,
                                         const DualOptions& opts = {}) {
    return detail::dual_cyclic_general(F, spec, Form::th, opts);
}

// --- skew variant --------------------------------------------------------

// Unmixed case qpoly = 0: the same generator shape as the cyclic unmixed
// case, under the skew action (n even).
inline DualReport dual_te_skew_special(const FieldCtx& F, const CodeSpec& spec,
                                       const DualOptions& opts = {}) {
    spec.validate(F);
    if (spec.variant != Variant::skew) throw SpecViolation("spec is not skew");
    if (!spec.qpoly.is_zero()) throw SpecViolation("this construction requires qpoly = 0");
    FqPoly lstar = reciprocal(spec.l);
    DualReport rep;
    rep.gen1 = make_rn(F, spec.n, mul(F, lstar, reciprocal(spec.g)), FqPoly());
    rep.gen2 = make_rn(F, spec.n, FqPoly(), mul(F, lstar, reciprocal(spec.f)));
    rep.h = FqPoly::constant(F.one());
    rep.k = FqPoly::constant(F.one());
    rep.cprime = FqPoly::constant(F.one());
    rep.dprime = FqPoly();
    detail::finish_report(F, spec, Form::te, rep, opts);
    return rep;
}

inline DualReport dual_te_skew_general(const FieldCtx& F, const CodeSpec& spec,
                                       const DualOptions& opts = {}) {
    return detail::dual_skew_general(F, spec, Form::te, opts);
}

inline DualReport dual_th_skew_general(const FieldCtx& F, const CodeSpec& spec,
                                       const DualOptions& opts = {}) {
    return detail::dual_skew_general(F, spec, Form::th, opts);
}

// Rewrites a w-multiplied spec as the equivalent plain one (the generator
// w*f + gamma*w*qpoly is literally the plain generator with mixing
// polynomial w*qpoly mod X^n - 1).
inline CodeSpec as_plain(const FieldCtx& F, const CodeSpec& spec) {
    if (spec.qshape == QShape::plain) return spec;
    CodeSpec out = spec;
    out.qpoly = mod_xn1(F, mul(F, spec.w, spec.qpoly), spec.n);
    out.qshape = QShape::plain;
    return out;
}

// Dispatcher used by the command-line tool: picks the construction matching
// the input's variant and mixing shape.  The w-multiplied trace-Hermitian and
// skew cases are handled by rewriting the input through as_plain.
inline DualReport compute_dual(const FieldCtx& F, const CodeSpec& spec, Form form,
                               const DualOptions& opts = {}) {
    if (spec.variant == Variant::cyclic) {
        if (spec.qshape == QShape::w_multiplied && form == Form::te)
            return dual_te_cyclic_wq(F, spec, opts);
        return detail::dual_cyclic_general(F, as_plain(F, spec), form, opts);
    }
    return detail::dual_skew_general(F, as_plain(F, spec), form, opts);
}

}  // namespace tracedual
