#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "code.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "oracle.hpp"
#include "poly.hpp"

namespace tracedual {

struct FactorPower {
    FqPoly base;       // monic irreducible
    std::size_t mult;  // multiplicity in X^n - 1
};

namespace detail {

// Smallest monic nontrivial divisor of rem with degree >= dmin, scanning
// candidates in canonical code order; such a divisor is irreducible.
inline bool smallest_divisor(const FieldCtx& F, const FqPoly& rem, std::size_t dmin,
                             FqPoly& out) {
    std::size_t dr = rem.degree();
    for (std::size_t d = dmin; 2 * d <= dr; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (count > 100000000 / F.q()) throw TooLarge("factor search space too large");
            count *= F.q();
        }
        for (std::uint64_t t = 0; t < count; ++t) {
            std::vector<Fq> c(d + 1, Fq{0});
            std::uint64_t v = t;
            for (std::size_t i = 0; i < d; ++i) {
                c[i] = F.elem(v % F.q());
                v /= F.q();
            }
            c[d] = F.one();
            FqPoly cand = FqPoly::from_coeffs(std::move(c));
            if (divmod(F, rem, cand).rem.is_zero()) {
                out = cand;
                return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// Factors X^n - 1 into monic irreducibles with multiplicities by repeated
// smallest-divisor extraction (no structure theory is assumed; repeated
// factors appear when the characteristic divides n).
inline std::vector<FactorPower> factor_xn1(const FieldCtx& F, std::size_t n) {
    std::vector<FactorPower> out;
    FqPoly rem = xn_minus_1(F, n);
    std::size_t dmin = 1;
    while (!rem.is_zero() && rem.degree() > 0) {
        FqPoly p;
        if (!detail::smallest_divisor(F, rem, dmin, p)) {
            p = monic(F, rem);  // remainder itself is irreducible
        }
        std::size_t mult = 0;
        for (;;) {
            DivModResult d = divmod(F, rem, p);
            if (!d.rem.is_zero()) break;
            rem = d.quot;
            ++mult;
        }
        out.push_back({p, mult});
        dmin = p.degree();
    }
    return out;
}

// Calls fn(w, l, f, g) for every ordered assignment of the irreducible
// factors (with multiplicity) of X^n - 1 into the four slots.
template <class Fn>
inline void for_each_factorization(const FieldCtx& F, std::size_t n, Fn&& fn) {
    std::vector<FactorPower> factors = factor_xn1(F, n);
    FqPoly one = FqPoly::constant(F.one());
    std::vector<FqPoly> slots(4, one);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == factors.size()) {
            fn(slots[0], slots[1], slots[2], slots[3]);
            return;
        }
        const FactorPower& fp = factors[idx];
        std::vector<FqPoly> powers(fp.mult + 1, one);
        for (std::size_t i = 1; i <= fp.mult; ++i) powers[i] = mul(F, powers[i - 1], fp.base);
        std::vector<FqPoly> saved = slots;
        for (std::size_t a = 0; a <= fp.mult; ++a)
            for (std::size_t b = 0; a + b <= fp.mult; ++b)
                for (std::size_t c = 0; a + b + c <= fp.mult; ++c) {
                    std::size_t d = fp.mult - a - b - c;
                    slots[0] = mul(F, saved[0], powers[a]);
                    slots[1] = mul(F, saved[1], powers[b]);
                    slots[2] = mul(F, saved[2], powers[c]);
                    slots[3] = mul(F, saved[3], powers[d]);
                    self(self, idx + 1);
                }
        slots = saved;
    };
    rec(rec, 0);
}

struct SweepParams {
    Variant variant = Variant::cyclic;
    Form form = Form::te;
    std::size_t nmax = 12;
    std::uint64_t seed = 0;
    int qpolys = 5;  // mixing polynomials per factorization (the first is 0)
};

struct SweepRow {
    std::size_t n = 0;
    long deg_w = 0, deg_l = 0, deg_f = 0, deg_g = 0;
    long deg_q = -1;  // -1 for the zero polynomial
    std::size_t dim_code = 0, dim_dual = 0;
    bool verified = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;           // oracle disagreements
    std::size_t dim_law_failed = 0;   // dim_code + dim_dual != 2n
    std::size_t collapse_checked = 0; // qpoly = 0 reductions compared against the unmixed form
    std::size_t collapse_failed = 0;

    bool ok() const { return failed == 0 && dim_law_failed == 0 && collapse_failed == 0; }
};

// Exhaustive closed-form-vs-oracle comparison over every ordered
// factorization of X^n - 1 (n <= nmax; even n only for the skew variant)
// with seeded mixing polynomials, the zero polynomial always included.
inline SweepResult run_sweep(const FieldCtx& F, const SweepParams& params) {
    if (params.nmax > 64) throw TooLarge("sweep length cap is 64");
    SweepResult res;
    std::mt19937_64 rng(params.seed);
    for (std::size_t n = 1; n <= params.nmax; ++n) {
        if (params.variant == Variant::skew && n % 2 != 0) continue;
        GramMatrix gram = gram_matrix(F, n, params.form);
        DualOptions opts;
        opts.verify = true;
        opts.gram = &gram;
        DualOptions no_verify;
        no_verify.verify = false;
        for_each_factorization(F, n, [&](const FqPoly& w, const FqPoly& l, const FqPoly& f,
                                         const FqPoly& g) {
            for (int t = 0; t < params.qpolys; ++t) {
                CodeSpec spec;
                spec.variant = params.variant;
                spec.n = n;
                spec.w = w;
                spec.l = l;
                spec.f = f;
                spec.g = g;
                spec.qshape = QShape::plain;
                if (t > 0) {
                    std::vector<Fq> qc(n, Fq{0});
                    for (Fq& c : qc) c = F.elem(rng() % F.q());
                    spec.qpoly = FqPoly::from_coeffs(std::move(qc));
                }
                DualReport rep = spec.variant == Variant::cyclic
                                     ? detail::dual_cyclic_general(F, spec, params.form, opts)
                                     : detail::dual_skew_general(F, spec, params.form, opts);
                SweepRow row;
                row.n = n;
                row.deg_w = static_cast<long>(w.degree());
                row.deg_l = static_cast<long>(l.degree());
                row.deg_f = static_cast<long>(f.degree());
                row.deg_g = static_cast<long>(g.degree());
                row.deg_q = spec.qpoly.is_zero() ? -1 : static_cast<long>(spec.qpoly.degree());
                row.dim_code = rep.dim_code;
                row.dim_dual = rep.dim_dual;
                row.verified = rep.verified;
                ++res.checked;
                if (rep.verified)
                    ++res.passed;
                else
                    ++res.failed;
                if (rep.dim_code + rep.dim_dual != 2 * n) ++res.dim_law_failed;

                // qpoly = 0: the mixed construction must collapse to the
                // unmixed one (same dual module).
                if (spec.qpoly.is_zero()) {
                    DualReport special = spec.variant == Variant::cyclic
                                             ? dual_te_cyclic_special(F, spec, no_verify)
                                             : dual_te_skew_special(F, spec, no_verify);
                    ++res.collapse_checked;
                    bool ok = code_equals(F, rep.dual, special.dual);
                    if (spec.variant == Variant::cyclic && params.form == Form::te) {
                        CodeSpec wq = spec;
                        wq.qshape = QShape::w_multiplied;
                        DualReport mixed = dual_te_cyclic_wq(F, wq, no_verify);
                        ok = ok && code_equals(F, mixed.dual, special.dual);
                    }
                    if (!ok) ++res.collapse_failed;
                }
                res.rows.push_back(row);
            }
        });
    }
    return res;
}

// CSV schema: n,deg_w,deg_l,deg_f,deg_g,deg_q,dim_code,dim_dual,verified
// (LF line endings, one row per sweep instance).
inline void write_sweep_csv(const std::string& path, const SweepResult& res) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << "n,deg_w,deg_l,deg_f,deg_g,deg_q,dim_code,dim_dual,verified\n";
    for (const SweepRow& r : res.rows) {
        out << r.n << ',' << r.deg_w << ',' << r.deg_l << ',' << r.deg_f << ',' << r.deg_g << ','
            << r.deg_q << ',' << r.dim_code << ',' << r.dim_dual << ','
            << (r.verified ? "true" : "false") << '\n';
    }
}

}  // namespace tracedual
