#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "code.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "linalg.hpp"
#include "ring.hpp"

namespace tracedual {

// Gram matrix of the chosen trace form on the standard F_q-basis of R_n
// (the 2n unit vectors: X^i, then gamma*X^i).  Built entirely from the
// pairing itself so that the brute-force dual is independent of the
// closed-form generator machinery.
struct GramMatrix {
    std::size_t n = 0;
    Form form = Form::te;
    std::vector<Fq> entries;  // (2n) x (2n), row-major

    Fq at(std::size_t i, std::size_t j) const { return entries[i * 2 * n + j]; }
};

inline RnElem unit_elem(std::size_t n, std::size_t i) {
    if (i < n) return RnElem{n, FqPoly::x_pow(i), FqPoly()};
    return RnElem{n, FqPoly(), FqPoly::x_pow(i - n)};
}

inline GramMatrix gram_matrix(const FieldCtx& F, std::size_t n, Form form) {
    GramMatrix G;
    G.n = n;
    G.form = form;
    G.entries.assign(4 * n * n, Fq{0});
    for (std::size_t i = 0; i < 2 * n; ++i) {
        RnElem ei = unit_elem(n, i);
        for (std::size_t j = 0; j < 2 * n; ++j)
            G.entries[i * 2 * n + j] = trace_form(F, ei, unit_elem(n, j), form);
    }
    return G;
}

// Brute-force dual: the nullspace of basis * Gram.  Works for any F_q-linear
// code; the result of a module input is again a module.
inline Code brute_dual(const FieldCtx& F, const Code& code, const GramMatrix& gram) {
    if (gram.n != code.n()) throw LengthMismatch("Gram matrix length does not match code");
    std::size_t m = 2 * code.n();
    RowSpace constraints(m);
    for (const std::vector<Fq>& row : code.basis().rows()) {
        std::vector<Fq> scaled(m, Fq{0});
        for (std::size_t t = 0; t < m; ++t) {
            if (row[t].v == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                Fq g = gram.at(t, j);
                if (g.v == 0) continue;
                scaled[j] = F.add(scaled[j], F.mul(row[t], g));
            }
        }
        constraints.insert(F, std::move(scaled));
    }
    Code dual(code.variant(), code.n());
    for (std::vector<Fq>& v : constraints.nullspace(F)) dual.insert_row(F, std::move(v));
    return dual;
}

inline Code brute_dual(const FieldCtx& F, const Code& code, Form form) {
    return brute_dual(F, code, gram_matrix(F, code.n(), form));
}

// All q^k codewords, one F_q-combination of the basis rows at a time.
// Refuses to enumerate more than cap elements.
inline std::vector<RnElem> enumerate_codewords(const FieldCtx& F, const Code& code,
                                               std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < code.dim(); ++i) {
        if (total > cap / F.q()) throw TooLarge("codeword count exceeds cap");
        total *= F.q();
        if (total > cap) throw TooLarge("codeword count exceeds cap");
    }
    std::size_t k = code.dim();
    std::size_t m = 2 * code.n();
    std::vector<RnElem> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Fq> row(m, Fq{0});
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i) {
            Fq lambda = F.elem(t % F.q());
            t /= F.q();
            if (lambda.v == 0) continue;
            const std::vector<Fq>& basis_row = code.basis().rows()[i];
            for (std::size_t j = 0; j < m; ++j)
                row[j] = F.add(row[j], F.mul(lambda, basis_row[j]));
        }
        out.push_back(row_to_elem(code.n(), row));
    }
    return out;
}

struct DualViolation {
    std::size_t claimed_row = 0;  // basis row of the claimed dual
    std::size_t primal_row = 0;   // basis row of the primal code it fails against
    Fq value{};                   // the nonzero pairing value
};

struct DualCheck {
    bool equal = false;
    std::size_t dim_claimed = 0;
    std::size_t dim_reference = 0;
    std::vector<DualViolation> violations;  // filled when a primal code is supplied
};

inline DualCheck verify_dual(const FieldCtx& F, const Code& claimed, const Code& reference) {
    DualCheck out;
    out.dim_claimed = claimed.dim();
    out.dim_reference = reference.dim();
    out.equal = code_equals(F, claimed, reference);
    return out;
}

// Same, but also names which (claimed row, primal row) pairs fail to pair to
// zero under the form.  Useful output for negative controls.
inline DualCheck verify_dual(const FieldCtx& F, const Code& claimed, const Code& reference,
                             const Code& primal, Form form) {
    DualCheck out = verify_dual(F, claimed, reference);
    for (std::size_t i = 0; i < claimed.dim(); ++i) {
        RnElem u = claimed.basis_elem(i);
        for (std::size_t j = 0; j < primal.dim(); ++j) {
            Fq val = trace_form(F, u, primal.basis_elem(j), form);
            if (val.v != 0) out.violations.push_back({i, j, val});
        }
    }
    return out;
}

}  // namespace tracedual
