#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace tracedual {

enum class QShape { plain, w_multiplied };

// Construction data for an F_q-linear code in R_n: a factorization
// X^n - 1 = w*l*f*g together with a mixing polynomial qpoly.  The code is
// generated (as an F_q[X]-module under the variant's action) by
//   gen1 = w*f + gamma*qpoly      (plain)
//        = w*f + gamma*w*qpoly    (w_multiplied)
//   gen2 = gamma*w*g.
struct CodeSpec {
    Variant variant = Variant::cyclic;
    std::size_t n = 0;
    FqPoly w, l, f, g;
    FqPoly qpoly;
    QShape qshape = QShape::plain;

    void validate(const FieldCtx& F) const {
        if (n == 0) throw SpecViolation("length must be positive");
        check_variant_length(variant, n);
        validate_factorization(F, w, l, f, g, n);
        if (!qpoly.is_zero() && qpoly.degree() >= n)
            throw SpecViolation("deg qpoly must be below n");
    }

    RnElem gen1(const FieldCtx& F) const {
        FqPoly d = qshape == QShape::w_multiplied ? mul(F, w, qpoly) : qpoly;
        return make_rn(F, n, mul(F, w, f), std::move(d));
    }

    RnElem gen2(const FieldCtx& F) const { return make_rn(F, n, FqPoly(), mul(F, w, g)); }
};

inline std::vector<Fq> to_row(const RnElem& u) {
    std::vector<Fq> row(2 * u.n, Fq{0});
    for (std::size_t i = 0; i < u.c.coeffs().size(); ++i) row[i] = u.c.coeffs()[i];
    for (std::size_t i = 0; i < u.d.coeffs().size(); ++i) row[u.n + i] = u.d.coeffs()[i];
    return row;
}

inline RnElem row_to_elem(std::size_t n, const std::vector<Fq>& row) {
    std::vector<Fq> c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<Fq> d(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
    return RnElem{n, FqPoly::from_coeffs(std::move(c)), FqPoly::from_coeffs(std::move(d))};
}

// An F_q-linear code in R_n, closed under the variant's X-action, stored as
// a canonical row space of coefficient vectors (c-block then d-block).
class Code {
public:
    Code() = default;
    Code(Variant variant, std::size_t n) : variant_(variant), n_(n), basis_(2 * n) {
        check_variant_length(variant, n);
    }

    Variant variant() const { return variant_; }
    std::size_t n() const { return n_; }
    const RowSpace& basis() const { return basis_; }
    std::size_t dim() const { return basis_.rank(); }

    RnElem basis_elem(std::size_t i) const { return row_to_elem(n_, basis_.rows()[i]); }

    // Inserts the X-action orbit of u.  Once X^k u falls inside the span the
    // chain can stop: the span of an orbit prefix is X-stable from there on.
    void insert_orbit(const FieldCtx& F, const RnElem& u) {
        if (u.n != n_) throw LengthMismatch("element length does not match code length");
        RnElem cur = u;
        FqPoly x = FqPoly::x_pow(1);
        for (std::size_t i = 0; i < n_; ++i) {
            if (!basis_.insert(F, to_row(cur))) break;
            cur = left_action(F, x, cur, variant_);
        }
    }

    // Inserts a single element without taking the orbit (for rows that are
    // already known to span a module, e.g. oracle nullspaces).
    void insert_row(const FieldCtx& F, std::vector<Fq> row) { basis_.insert(F, std::move(row)); }

    bool contains(const FieldCtx& F, const RnElem& u) const {
        if (u.n != n_) throw LengthMismatch("element length does not match code length");
        return basis_.contains(F, to_row(u));
    }

    friend bool operator==(const Code&, const Code&) = default;

private:
    Variant variant_ = Variant::cyclic;
    std::size_t n_ = 0;
    RowSpace basis_;
};

inline Code build_code_from_generators(const FieldCtx& F, Variant variant, std::size_t n,
                                       std::span<const RnElem> gens) {
    Code code(variant, n);
    for (const RnElem& g : gens) code.insert_orbit(F, g);
    return code;
}

inline Code build_code(const FieldCtx& F, const CodeSpec& spec) {
    spec.validate(F);
    Code code(spec.variant, spec.n);
    code.insert_orbit(F, spec.gen1(F));
    code.insert_orbit(F, spec.gen2(F));
    return code;
}

struct Dims {
    std::size_t k = 0;       // dimension over F_q
    std::size_t k_star = 0;  // dimension over F_{q^2} of the F_{q^2}-closure
};

// k is the F_q-dimension; k_star is dim_{F_{q^2}} of the span of the code
// over F_{q^2}, computed by adjoining gamma*row for every basis row
// (gamma*(c + gamma*d) = delta*d + gamma*c).
inline Dims fq_dimension(const FieldCtx& F, const Code& code) {
    Dims dims;
    dims.k = code.dim();
    RowSpace closure(2 * code.n());
    for (const std::vector<Fq>& row : code.basis().rows()) {
        closure.insert(F, row);
        std::vector<Fq> scaled(row.size(), Fq{0});
        std::size_t n = code.n();
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i] = F.mul(F.delta(), row[n + i]);
            scaled[n + i] = row[i];
        }
        closure.insert(F, std::move(scaled));
    }
    if (closure.rank() % 2 != 0) throw Error("closure rank is odd; internal arithmetic error");
    dims.k_star = closure.rank() / 2;
    return dims;
}

inline bool code_equals(const FieldCtx&, const Code& a, const Code& b) {
    if (a.n() != b.n())
        throw LengthMismatch("codes have different lengths");
    if (a.variant() != b.variant())
        throw LengthMismatch("codes have different variants");
    return a.basis() == b.basis();
}

// Recovers the canonical construction data of the module generated by gens:
// the c-projection image ideal gives F = w*f, the pure-gamma ideal gives
// G = w*g, and the mixing polynomial is a d-component of any preimage of F,
// reduced mod G (through the sign twist for the skew variant, which keeps
// the reduction independent of the chosen preimage).
inline CodeSpec canonical_decomposition(const FieldCtx& F, std::span<const RnElem> gens,
                                        Variant variant) {
    if (gens.empty()) throw NotAModule("at least one generator is required");
    std::size_t n = gens[0].n;
    if (variant == Variant::skew && n % 2 != 0)
        throw NotAModule("skew variant requires even length, got " + std::to_string(n));
    Code code = build_code_from_generators(F, variant, n, gens);

    FqPoly xn1 = xn_minus_1(F, n);
    FqPoly big_f = xn1;  // generator of the image ideal of the c-projection
    FqPoly big_g = xn1;  // generator of {d : (0, d) in C}
    const RowSpace& basis = code.basis();
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        const std::vector<Fq>& row = basis.rows()[i];
        if (basis.pivots()[i] < n) {
            std::vector<Fq> c(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
            FqPoly cp = FqPoly::from_coeffs(std::move(c));
            if (!cp.is_zero()) big_f = gcd_poly(F, big_f, cp);
        } else {
            std::vector<Fq> d(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
            FqPoly dp = FqPoly::from_coeffs(std::move(d));
            if (!dp.is_zero()) big_g = gcd_poly(F, big_g, dp);
        }
    }

    // Preimage of big_f under the c-projection.  The c-parts of the rows with
    // a c-block pivot are themselves in reduced echelon form, so combination
    // coefficients can be read off at the pivot columns.
    FqPoly q0;
    {
        std::vector<Fq> target(n, Fq{0});
        for (std::size_t i = 0; i < big_f.coeffs().size() && i < n; ++i)
            target[i] = big_f.coeffs()[i];
        // big_f = X^n - 1 represents the zero ideal; its preimage is 0.
        bool zero_ideal = (big_f == xn1);
        std::vector<Fq> accum(2 * n, Fq{0});
        if (!zero_ideal) {
            for (std::size_t i = 0; i < basis.rank(); ++i) {
                std::size_t piv = basis.pivots()[i];
                if (piv >= n) break;
                Fq lambda = target[piv];
                if (lambda.v == 0) continue;
                const std::vector<Fq>& row = basis.rows()[i];
                for (std::size_t j = 0; j < n; ++j)
                    target[j] = F.sub(target[j], F.mul(lambda, row[j]));
                for (std::size_t j = 0; j < 2 * n; ++j)
                    accum[j] = F.add(accum[j], F.mul(lambda, row[j]));
            }
            for (const Fq& t : target)
                if (t.v != 0) throw Error("projection image is inconsistent; internal error");
        }
        std::vector<Fq> d(accum.begin() + static_cast<std::ptrdiff_t>(n), accum.end());
        q0 = FqPoly::from_coeffs(std::move(d));
    }

    CodeSpec spec;
    spec.variant = variant;
    spec.n = n;
    spec.w = gcd_poly(F, big_f, big_g);
    spec.f = exact_div(F, big_f, spec.w);
    spec.g = exact_div(F, big_g, spec.w);
    spec.l = exact_div(F, xn1, mul(F, big_f, spec.g));
    if (variant == Variant::cyclic) {
        spec.qpoly = divmod(F, q0, big_g).rem;
    } else {
        FqPoly r = divmod(F, flip(F, q0), flip(F, big_g)).rem;
        spec.qpoly = flip(F, r);
    }
    spec.qshape = QShape::plain;
    return spec;
}

}  // namespace tracedual
