#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace tracedual {

// Dense polynomial over F_q, coefficients ascending.  Always normalized:
// no trailing zero coefficients, so the zero polynomial has an empty
// coefficient vector and degree is only defined for nonzero polynomials.
class FqPoly {
public:
    FqPoly() = default;

    static FqPoly from_coeffs(std::vector<Fq> c) {
        FqPoly out;
        out.c_ = std::move(c);
        out.normalize();
        return out;
    }

    static FqPoly from_ints(const FieldCtx& F, std::initializer_list<long long> c) {
        std::vector<Fq> v;
        v.reserve(c.size());
        for (long long t : c) v.push_back(F.from_int(t));
        return from_coeffs(std::move(v));
    }

    static FqPoly constant(Fq a) {
        if (a.v == 0) return FqPoly();
        FqPoly out;
        out.c_.push_back(a);
        return out;
    }

    static FqPoly x_pow(std::size_t k) {
        FqPoly out;
        out.c_.assign(k + 1, Fq{0});
        out.c_[k] = Fq{1};
        return out;
    }

    bool is_zero() const { return c_.empty(); }

    std::size_t degree() const {
        if (is_zero()) throw Error("degree of the zero polynomial is undefined");
        return c_.size() - 1;
    }

    std::size_t valuation() const {
        if (is_zero()) throw Error("valuation of the zero polynomial is undefined");
        std::size_t i = 0;
        while (c_[i].v == 0) ++i;
        return i;
    }

    Fq lc() const {
        if (is_zero()) throw Error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Fq coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fq{0}; }

    const std::vector<Fq>& coeffs() const { return c_; }

    friend bool operator==(const FqPoly&, const FqPoly&) = default;

private:
    std::vector<Fq> c_;

    void normalize() {
        while (!c_.empty() && c_.back().v == 0) c_.pop_back();
    }
};

inline FqPoly add(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    std::vector<Fq> out(std::max(a.coeffs().size(), b.coeffs().size()), Fq{0});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
    return FqPoly::from_coeffs(std::move(out));
}

inline FqPoly sub(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    std::vector<Fq> out(std::max(a.coeffs().size(), b.coeffs().size()), Fq{0});
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
    return FqPoly::from_coeffs(std::move(out));
}

inline FqPoly neg(const FieldCtx& F, const FqPoly& a) {
    std::vector<Fq> out(a.coeffs());
    for (Fq& c : out) c = F.neg(c);
    return FqPoly::from_coeffs(std::move(out));
}

inline FqPoly mul(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() || b.is_zero()) return FqPoly();
    std::vector<Fq> out(a.coeffs().size() + b.coeffs().size() - 1, Fq{0});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        Fq ai = a.coeffs()[i];
        if (ai.v == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return FqPoly::from_coeffs(std::move(out));
}

inline FqPoly mul_scalar(const FieldCtx& F, const FqPoly& a, Fq s) {
    if (s.v == 0) return FqPoly();
    std::vector<Fq> out(a.coeffs());
    for (Fq& c : out) c = F.mul(c, s);
    return FqPoly::from_coeffs(std::move(out));
}

// X^k * a
inline FqPoly shift_up(const FqPoly& a, std::size_t k) {
    if (a.is_zero()) return FqPoly();
    std::vector<Fq> out(a.coeffs().size() + k, Fq{0});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i + k] = a.coeffs()[i];
    return FqPoly::from_coeffs(std::move(out));
}

struct DivModResult {
    FqPoly quot;
    FqPoly rem;
};

inline DivModResult divmod(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) return {FqPoly(), a};
    std::vector<Fq> rem(a.coeffs());
    std::size_t db = b.degree();
    std::vector<Fq> quot(rem.size() - db, Fq{0});
    Fq lead_inv = F.inv(b.lc());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].v == 0) continue;
        Fq c = F.mul(rem[i], lead_inv);
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.coeff(j)));
    }
    return {FqPoly::from_coeffs(std::move(quot)), FqPoly::from_coeffs(std::move(rem))};
}

inline FqPoly exact_div(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    DivModResult r = divmod(F, a, b);
    if (!r.rem.is_zero()) throw NonExactDivision("polynomial division left a remainder");
    return r.quot;
}

inline FqPoly mod_xn1(const FieldCtx& F, const FqPoly& a, std::size_t n) {
    if (a.is_zero() || a.coeffs().size() <= n) return a;
    std::vector<Fq> out(n, Fq{0});
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        out[i % n] = F.add(out[i % n], a.coeffs()[i]);
    return FqPoly::from_coeffs(std::move(out));
}

inline FqPoly monic(const FieldCtx& F, const FqPoly& a) {
    if (a.is_zero()) return a;
    return mul_scalar(F, a, F.inv(a.lc()));
}

inline FqPoly xn_minus_1(const FieldCtx& F, std::size_t n) {
    std::vector<Fq> out(n + 1, Fq{0});
    out[0] = F.neg(F.one());
    out[n] = F.one();
    return FqPoly::from_coeffs(std::move(out));
}

inline Fq eval(const FieldCtx& F, const FqPoly& a, Fq x) {
    Fq acc{0};
    for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs()[i]);
    return acc;
}

// Reciprocal f*(X) = sum_i f_i X^{deg f - i}.  Trailing zeros of f become
// leading zeros and are stripped, so deg f* = deg f - val f.
inline FqPoly reciprocal(const FqPoly& a) {
    if (a.is_zero()) return a;
    std::vector<Fq> out(a.coeffs().rbegin(), a.coeffs().rend());
    return FqPoly::from_coeffs(std::move(out));
}

// Canonical representative X^{n - deg f} f* of the reciprocal in P_n.
inline FqPoly hat(const FqPoly& a, std::size_t n) {
    if (a.is_zero()) return a;
    if (a.degree() > n)
        throw DegreeExceedsLength("degree " + std::to_string(a.degree()) +
                                  " exceeds length " + std::to_string(n));
    return shift_up(reciprocal(a), n - a.degree());
}

// f(-X): negate the odd-index coefficients.
inline FqPoly flip(const FieldCtx& F, const FqPoly& a) {
    std::vector<Fq> out(a.coeffs());
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = F.neg(out[i]);
    return FqPoly::from_coeffs(std::move(out));
}

struct XgcdResult {
    FqPoly h;  // monic gcd
    FqPoly u;  // cofactor of the first argument
    FqPoly v;  // cofactor of the second argument
};

// Extended Euclid: h = gcd(a, b) monic with u*a + v*b = h and the minimal
// cofactor pair (deg u < deg b - deg h and deg v < deg a - deg h whenever
// the bounds are meaningful).
inline XgcdResult xgcd(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    FqPoly r0 = a, r1 = b;
    FqPoly u0 = FqPoly::constant(F.one()), u1;
    FqPoly v0, v1 = FqPoly::constant(F.one());
    while (!r1.is_zero()) {
        DivModResult d = divmod(F, r0, r1);
        FqPoly r2 = d.rem;
        FqPoly u2 = sub(F, u0, mul(F, d.quot, u1));
        FqPoly v2 = sub(F, v0, mul(F, d.quot, v1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Fq s = F.inv(r0.lc());
    return {mul_scalar(F, r0, s), mul_scalar(F, u0, s), mul_scalar(F, v0, s)};
}

inline FqPoly gcd_poly(const FieldCtx& F, const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    FqPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        DivModResult d = divmod(F, r0, r1);
        r0 = std::move(r1);
        r1 = std::move(d.rem);
    }
    return monic(F, r0);
}

inline std::string poly_to_string(const FieldCtx& F, const FqPoly& a) {
    if (a.is_zero()) return F.e() == 1 ? "0" : "[0]";
    std::string out;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) out += ',';
        out += F.fq_to_string(a.coeffs()[i]);
    }
    return out;
}

// Human-readable infix rendering, highest term first.
inline std::string poly_pretty(const FieldCtx& F, const FqPoly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        Fq c = a.coeff(i);
        if (c.v == 0) continue;
        if (!out.empty()) out += " + ";
        bool unit_coeff = (c == F.one()) && F.e() == 1;
        if (!unit_coeff || i == 0) out += F.fq_to_string(c);
        if (i > 0) {
            if (!unit_coeff) out += "*";
            out += "X";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

// Checks w * l * f * g == X^n - 1 exactly.
inline void validate_factorization(const FieldCtx& F, const FqPoly& w, const FqPoly& l,
                                   const FqPoly& f, const FqPoly& g, std::size_t n) {
    FqPoly prod = mul(F, mul(F, w, l), mul(F, f, g));
    if (prod != xn_minus_1(F, n))
        throw FactorizationMismatch("w*l*f*g = " + poly_to_string(F, prod) +
                                    " differs from X^" + std::to_string(n) + " - 1");
}

}  // namespace tracedual
