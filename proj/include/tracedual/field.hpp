#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace tracedual {

// Element of F_q, q = p^e.  The value is a canonical code in [0, q): for e = 1
// it is the residue itself, for e > 1 the base-p digit packing of the
// coordinate vector with respect to the power basis of F_p[X]/(modulus).
struct Fq {
    std::uint64_t v = 0;
    friend bool operator==(const Fq&, const Fq&) = default;
};

// Element a + gamma*b of F_{q^2} = F_q(gamma), gamma^2 = delta.
struct Fq2 {
    Fq a{};
    Fq b{};
    friend bool operator==(const Fq2&, const Fq2&) = default;
};

// Arithmetic context for the pair (F_q, F_{q^2}).  All operations are pure;
// a context can be shared freely.  delta is the first nonsquare of F_q in
// canonical code order, and gamma is a formal square root of delta.
class FieldCtx {
public:
    static constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 31;
    static constexpr std::uint64_t kTableLimit = 64;       // LUT-backed ops below this
    static constexpr std::uint64_t kExhaustiveLimit = 10000;  // exhaustive square testing

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return mod_; }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq delta() const { return delta_; }
    Fq2 gamma() const { return Fq2{zero(), one()}; }

    // Canonical enumeration: every code in [0, q) is a distinct element.
    Fq elem(std::uint64_t code) const {
        if (code >= q_) throw TooLarge("element code " + std::to_string(code) + " out of range");
        return Fq{code};
    }

    // Embeds an integer via F_p: reduced mod p, lifted as a constant.
    Fq from_int(long long t) const {
        long long r = t % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return Fq{static_cast<std::uint64_t>(r)};
    }

    Fq add(Fq a, Fq b) const {
        if (!tab_.empty()) return Fq{tab_[kAdd * q_ * q_ + a.v * q_ + b.v]};
        if (e_ == 1) {
            std::uint64_t s = a.v + b.v;
            return Fq{s >= p_ ? s - p_ : s};
        }
        return digit_zip(a, b, /*subtract=*/false);
    }

    Fq sub(Fq a, Fq b) const {
        if (!tab_.empty()) return Fq{tab_[kSub * q_ * q_ + a.v * q_ + b.v]};
        if (e_ == 1) return Fq{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
        return digit_zip(a, b, /*subtract=*/true);
    }

    Fq neg(Fq a) const { return sub(zero(), a); }

    Fq mul(Fq a, Fq b) const {
        if (!tab_.empty()) return Fq{tab_[kMul * q_ * q_ + a.v * q_ + b.v]};
        if (e_ == 1) return Fq{(a.v * b.v) % p_};
        return ext_mul(a, b);
    }

    Fq inv(Fq a) const {
        if (a.v == 0) throw DivisionByZero("inverse of zero");
        if (!inv_tab_.empty()) return Fq{inv_tab_[a.v]};
        return pow(a, q_ - 2);
    }

    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

    Fq pow(Fq a, std::uint64_t k) const {
        Fq acc = one();
        Fq base = a;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    bool is_square(Fq a) const {
        if (a.v == 0) return true;
        bool euler = pow(a, (q_ - 1) / 2) == one();
        if (!square_tab_.empty()) {
            bool exhaustive = square_tab_[a.v] != 0;
            if (exhaustive != euler)
                throw Error("square test disagreement at code " + std::to_string(a.v));
            return exhaustive;
        }
        return euler;
    }

    // --- F_{q^2} operations ---------------------------------------------

    Fq2 make2(Fq a, Fq b) const { return Fq2{a, b}; }
    Fq2 lift(Fq a) const { return Fq2{a, zero()}; }
    Fq2 zero2() const { return Fq2{}; }
    Fq2 one2() const { return Fq2{one(), zero()}; }

    Fq2 add(Fq2 x, Fq2 y) const { return Fq2{add(x.a, y.a), add(x.b, y.b)}; }
    Fq2 sub(Fq2 x, Fq2 y) const { return Fq2{sub(x.a, y.a), sub(x.b, y.b)}; }
    Fq2 neg(Fq2 x) const { return Fq2{neg(x.a), neg(x.b)}; }

    // (a + gamma b)(c + gamma d) = (ac + delta bd) + gamma(ad + bc)
    Fq2 mul(Fq2 x, Fq2 y) const {
        Fq re = add(mul(x.a, y.a), mul(delta_, mul(x.b, y.b)));
        Fq im = add(mul(x.a, y.b), mul(x.b, y.a));
        return Fq2{re, im};
    }

    Fq2 inv(Fq2 x) const {
        if (x == zero2()) throw DivisionByZero("inverse of zero");
        // norm = (a + gamma b)(a - gamma b) = a^2 - delta b^2, nonzero since
        // delta is a nonsquare.
        Fq norm = sub(mul(x.a, x.a), mul(delta_, mul(x.b, x.b)));
        Fq ninv = inv(norm);
        return Fq2{mul(x.a, ninv), neg(mul(x.b, ninv))};
    }

    // Frobenius x -> x^q; on a + gamma b this is a - gamma b.
    Fq2 frobenius(Fq2 x) const { return Fq2{x.a, neg(x.b)}; }

    // Tr(x) = x + x^q, always in F_q.
    Fq trace(Fq2 x) const { return add(x.a, x.a); }

    Fq2 pow(Fq2 x, std::uint64_t k) const {
        Fq2 acc = one2();
        Fq2 base = x;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    std::string fq_to_string(Fq a) const {
        if (e_ == 1) return std::to_string(a.v);
        std::string out = "[";
        std::uint64_t v = a.v;
        for (unsigned i = 0; i < e_; ++i) {
            if (i) out += ' ';
            out += std::to_string(v % p_);
            v /= p_;
        }
        out += ']';
        return out;
    }

    static FieldCtx make(std::uint64_t p) { return FieldCtx(p, 1, {}); }

    static FieldCtx make(std::uint64_t p, unsigned e, const std::vector<long long>& modulus) {
        std::vector<std::uint64_t> m;
        if (e > 1) {
            if (modulus.size() != static_cast<std::size_t>(e) + 1)
                throw ReducibleModulus("modulus must have degree e = " + std::to_string(e));
            m.reserve(modulus.size());
            for (long long c : modulus) {
                long long r = c % static_cast<long long>(p);
                if (r < 0) r += static_cast<long long>(p);
                m.push_back(static_cast<std::uint64_t>(r));
            }
        } else if (!modulus.empty()) {
            throw ReducibleModulus("modulus only valid for e > 1");
        }
        return FieldCtx(p, e, m);
    }

private:
    enum TableKind { kAdd = 0, kSub = 1, kMul = 2 };

    std::uint64_t p_ = 0;
    unsigned e_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> mod_;   // monic modulus over F_p, size e + 1 (e > 1 only)
    std::vector<std::uint64_t> ppow_;  // p^0 .. p^e
    Fq delta_{};
    std::vector<std::uint8_t> tab_;        // add/sub/mul fused, q <= kTableLimit
    std::vector<std::uint8_t> inv_tab_;    // q <= kTableLimit
    std::vector<std::uint8_t> square_tab_;  // q <= kExhaustiveLimit

    FieldCtx(std::uint64_t p, unsigned e, std::vector<std::uint64_t> mod)
        : p_(p), e_(e), mod_(std::move(mod)) {
        if (p < 2) throw NonPrimeP("p = " + std::to_string(p) + " is not prime");
        if (p == 2) throw EvenCharacteristic("characteristic 2 is not supported");
        if (p % 2 == 0 || !is_prime(p)) throw NonPrimeP("p = " + std::to_string(p) + " is not prime");
        if (e < 1) throw TooLarge("extension degree must be at least 1");
        q_ = 1;
        ppow_.assign(e_ + 1, 1);
        for (unsigned i = 1; i <= e_; ++i) {
            if (q_ > kMaxQ / p_) throw TooLarge("p^e exceeds supported range");
            q_ *= p_;
            ppow_[i] = q_;
        }
        if (e_ > 1) {
            if (mod_[e_] != 1) throw ReducibleModulus("modulus must be monic");
            check_irreducible();
        }
        build_tables();
        pick_delta();
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    // Componentwise add/sub of base-p digit vectors.
    Fq digit_zip(Fq a, Fq b, bool subtract) const {
        std::uint64_t out = 0;
        std::uint64_t av = a.v, bv = b.v;
        for (unsigned i = 0; i < e_; ++i) {
            std::uint64_t da = av % p_, db = bv % p_;
            av /= p_;
            bv /= p_;
            std::uint64_t d = subtract ? (da >= db ? da - db : da + p_ - db)
                                       : (da + db >= p_ ? da + db - p_ : da + db);
            out += d * ppow_[i];
        }
        return Fq{out};
    }

    // Schoolbook product of the digit vectors, reduced modulo the monic
    // modulus (X^e = -sum mod_[j] X^j).
    Fq ext_mul(Fq a, Fq b) const {
        std::vector<std::uint64_t> da(e_), db(e_), prod(2 * e_ - 1, 0);
        std::uint64_t av = a.v, bv = b.v;
        for (unsigned i = 0; i < e_; ++i) {
            da[i] = av % p_;
            db[i] = bv % p_;
            av /= p_;
            bv /= p_;
        }
        for (unsigned i = 0; i < e_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < e_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
        for (unsigned i = 2 * e_ - 2; i >= e_; --i) {
            std::uint64_t t = prod[i];
            if (t == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < e_; ++j) {
                std::uint64_t dec = (t * mod_[j]) % p_;
                prod[i - e_ + j] = (prod[i - e_ + j] + p_ - dec) % p_;
            }
        }
        std::uint64_t out = 0;
        for (unsigned i = 0; i < e_; ++i) out += prod[i] * ppow_[i];
        return Fq{out};
    }

    // Irreducibility over F_p: gcd(modulus, X^{p^i} - X) = 1 for i <= e/2 and
    // X^{p^e} = X modulo the modulus.
    void check_irreducible() const {
        std::vector<std::uint64_t> x(2, 0);
        x[1] = 1;
        std::vector<std::uint64_t> r = x;  // X^{p^i} mod modulus
        for (unsigned i = 1; i <= e_; ++i) {
            r = fp_powmod(r, p_);
            if (i <= e_ / 2) {
                std::vector<std::uint64_t> diff = fp_sub(r, x);
                if (fp_gcd_deg(fp_trim(diff)) != 0)
                    throw ReducibleModulus("modulus is reducible over F_p");
            }
        }
        if (fp_trim(fp_sub(r, x)) != std::vector<std::uint64_t>{})
            throw ReducibleModulus("modulus is reducible over F_p");
    }

    // --- minimal F_p[X] helpers used only for the irreducibility check ----

    static std::vector<std::uint64_t> fp_trim(std::vector<std::uint64_t> a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }

    std::vector<std::uint64_t> fp_sub(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> out(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            std::uint64_t av = i < a.size() ? a[i] : 0;
            std::uint64_t bv = i < b.size() ? b[i] : 0;
            out[i] = (av + p_ - bv) % p_;
        }
        return out;
    }

    std::vector<std::uint64_t> fp_mulmod(const std::vector<std::uint64_t>& a,
                                         const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
        }
        // reduce modulo the monic modulus
        for (std::size_t i = prod.size(); i-- > e_;) {
            std::uint64_t t = prod[i];
            if (t == 0) continue;
            prod[i] = 0;
            for (unsigned j = 0; j < e_; ++j) {
                std::uint64_t dec = (t * mod_[j]) % p_;
                prod[i - e_ + j] = (prod[i - e_ + j] + p_ - dec) % p_;
            }
        }
        prod.resize(e_);
        return prod;
    }

    std::vector<std::uint64_t> fp_powmod(std::vector<std::uint64_t> base, std::uint64_t k) const {
        std::vector<std::uint64_t> acc(1, 1);
        acc.resize(e_, 0);
        base.resize(std::max<std::size_t>(base.size(), e_), 0);
        while (k > 0) {
            if (k & 1) acc = fp_mulmod(acc, base);
            base = fp_mulmod(base, base);
            k >>= 1;
        }
        return acc;
    }

    // Degree of gcd(modulus, a); 0 means coprime (gcd is a nonzero constant).
    int fp_gcd_deg(std::vector<std::uint64_t> a) const {
        std::vector<std::uint64_t> r0(mod_.begin(), mod_.end());
        std::vector<std::uint64_t> r1 = fp_trim(std::move(a));
        while (!r1.empty()) {
            // r0 mod r1 by long division
            std::uint64_t lead_inv = fp_inv_scalar(r1.back());
            while (r0.size() >= r1.size() && !r0.empty()) {
                std::uint64_t c = (r0.back() * lead_inv) % p_;
                std::size_t shift = r0.size() - r1.size();
                for (std::size_t i = 0; i < r1.size(); ++i) {
                    std::uint64_t dec = (c * r1[i]) % p_;
                    r0[shift + i] = (r0[shift + i] + p_ - dec) % p_;
                }
                r0 = fp_trim(std::move(r0));
            }
            std::swap(r0, r1);
        }
        return r0.empty() ? -1 : static_cast<int>(r0.size()) - 1;
    }

    std::uint64_t fp_inv_scalar(std::uint64_t a) const {
        std::uint64_t acc = 1, base = a, k = p_ - 2;
        while (k > 0) {
            if (k & 1) acc = (acc * base) % p_;
            base = (base * base) % p_;
            k >>= 1;
        }
        return acc;
    }

    void build_tables() {
        if (q_ <= kTableLimit) {
            tab_.assign(3 * q_ * q_, 0);
            inv_tab_.assign(q_, 0);
            for (std::uint64_t a = 0; a < q_; ++a) {
                for (std::uint64_t b = 0; b < q_; ++b) {
                    Fq fa{a}, fb{b};
                    Fq s = e_ == 1 ? Fq{(a + b) % p_} : digit_zip(fa, fb, false);
                    Fq d = e_ == 1 ? Fq{(a + p_ - b) % p_} : digit_zip(fa, fb, true);
                    Fq m = e_ == 1 ? Fq{(a * b) % p_} : ext_mul(fa, fb);
                    tab_[kAdd * q_ * q_ + a * q_ + b] = static_cast<std::uint8_t>(s.v);
                    tab_[kSub * q_ * q_ + a * q_ + b] = static_cast<std::uint8_t>(d.v);
                    tab_[kMul * q_ * q_ + a * q_ + b] = static_cast<std::uint8_t>(m.v);
                    if (m.v == 1) {
                        inv_tab_[a] = static_cast<std::uint8_t>(b);
                    }
                }
            }
        }
        if (q_ <= kExhaustiveLimit) {
            square_tab_.assign(q_, 0);
            for (std::uint64_t a = 0; a < q_; ++a) {
                Fq sq = tab_.empty() ? (e_ == 1 ? Fq{(a * a) % p_} : ext_mul(Fq{a}, Fq{a}))
                                     : Fq{tab_[kMul * q_ * q_ + a * q_ + a]};
                square_tab_[sq.v] = 1;
            }
        }
    }

    void pick_delta() {
        for (std::uint64_t c = 0; c < q_; ++c) {
            if (!is_square(Fq{c})) {
                delta_ = Fq{c};
                return;
            }
        }
        throw Error("no nonsquare found; field is not of odd characteristic");
    }
};

inline FieldCtx make_field(std::uint64_t p) { return FieldCtx::make(p); }

inline FieldCtx make_field(std::uint64_t p, unsigned e, const std::vector<long long>& modulus) {
    return FieldCtx::make(p, e, modulus);
}

}  // namespace tracedual
