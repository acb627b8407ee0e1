// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Self-contained (no test framework); every numeric expectation is
// either frozen reference data or an independently recomputed property.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <tracedual/code.hpp>
#include <tracedual/dual.hpp>
#include <tracedual/field.hpp>
#include <tracedual/oracle.hpp>
#include <tracedual/poly.hpp>
#include <tracedual/ring.hpp>
#include <tracedual/sweep.hpp>

using namespace tracedual;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", s);
    return buf;
}

FqPoly random_poly_len(const FieldCtx& F, std::mt19937_64& rng, std::size_t len) {
    std::vector<Fq> c(len, Fq{0});
    for (Fq& x : c) x = F.elem(rng() % F.q());
    return FqPoly::from_coeffs(std::move(c));
}

RnElem random_elem(const FieldCtx& F, std::mt19937_64& rng, std::size_t n) {
    return RnElem{n, random_poly_len(F, rng, n), random_poly_len(F, rng, n)};
}

CodeSpec length28_spec(const FieldCtx& F) {
    CodeSpec spec;
    spec.variant = Variant::cyclic;
    spec.n = 28;
    spec.w = FqPoly::from_ints(F, {2, 1});
    spec.l = FqPoly::from_ints(F, {1, 2, 2, 0, 0, 1, 2, 2, 2, 2, 2, 2, 2, 2, 1, 0, 0, 2, 2, 1});
    spec.f = FqPoly::from_ints(F, {1, 0, 1});
    spec.g = FqPoly::from_ints(F, {1, 2, 0, 2, 0, 2, 1});
    spec.qpoly = FqPoly::x_pow(1);
    spec.qshape = QShape::w_multiplied;
    return spec;
}

CodeSpec length10_spec(const FieldCtx& F) {
    CodeSpec spec;
    spec.variant = Variant::skew;
    spec.n = 10;
    spec.w = FqPoly::from_ints(F, {1, 1});
    spec.l = FqPoly::from_ints(F, {1, 1, 1, 1, 1});
    spec.f = FqPoly::from_ints(F, {1, -1, 1, -1, 1});
    spec.g = FqPoly::from_ints(F, {-1, 1});
    spec.qpoly = FqPoly::from_ints(F, {1, 1});
    spec.qshape = QShape::plain;
    return spec;
}

// --- criterion 1: length-28 cyclic worked example -------------------------

Outcome criterion1() {
    FieldCtx F = make_field(3);
    CodeSpec spec = length28_spec(F);
    auto t0 = Clock::now();
    DualReport rep = dual_te_cyclic_wq(F, spec);
    double secs = seconds_since(t0);

    FqPoly gen1_c = FqPoly::from_ints(F, {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1,
                                          1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1});
    FqPoly gen2_c = FqPoly::from_ints(F, {0, 2, 1, 1, 0, 0, 2, 1, 1, 1, 1,
                                          1, 1, 1, 1, 2, 0, 0, 1, 1, 2});
    FqPoly gen2_d = FqPoly::from_ints(F, {2, 1, 0, 1, 1, 2, 1, 0, 2, 2, 2,
                                          2, 2, 2, 0, 1, 2, 1, 1, 0, 1, 2});
    std::vector<RnElem> reference{make_rn(F, 28, gen1_c, FqPoly()),
                                  make_rn(F, 28, gen2_c, gen2_d)};
    Code ref = build_code_from_generators(F, Variant::cyclic, 28, reference);

    Outcome out;
    bool exact = rep.h == FqPoly::x_pow(26) && code_equals(F, rep.dual, ref);
    out.pass = exact && rep.verified && secs < 1.0;
    out.detail = std::string(exact ? "h = X^26 and module match" : "reference data mismatch") +
                 (rep.verified ? "" : "; oracle disagrees") + ", " + fmt_secs(secs);
    return out;
}

// --- criterion 2: length-10 skew worked example ---------------------------

Outcome criterion2() {
    FieldCtx F = make_field(3);
    CodeSpec spec = length10_spec(F);
    auto t0 = Clock::now();
    DualReport rep = dual_te_skew_general(F, spec);
    double secs = seconds_since(t0);

    FqPoly gen1_c = FqPoly::from_ints(F, {1, 0, 0, 0, 2, 2, 0, 0, 0, 1});
    FqPoly gen2_c = FqPoly::from_ints(F, {1, 0, 0, 0, 0, 2});
    FqPoly gen2_d = FqPoly::from_ints(F, {2, 1, 2, 1, 2, 1, 2, 1, 2, 1});
    std::vector<RnElem> reference{make_rn(F, 10, gen1_c, FqPoly()),
                                  make_rn(F, 10, gen2_c, gen2_d)};
    Code ref = build_code_from_generators(F, Variant::skew, 10, reference);

    Outcome out;
    bool exact = rep.h == mul(F, FqPoly::x_pow(9), spec.f) && rep.k == spec.f &&
                 code_equals(F, rep.dual, ref);
    out.pass = exact && rep.verified && secs < 1.0;
    out.detail = std::string(exact ? "h = X^9*f, k = f and module match"
                                   : "reference data mismatch") +
                 (rep.verified ? "" : "; oracle disagrees") + ", " + fmt_secs(secs);
    return out;
}

// --- criterion 3: full oracle sweeps --------------------------------------

struct SweepCell {
    std::uint64_t q = 0;
    Variant variant = Variant::cyclic;
    Form form = Form::te;
    SweepResult res;
};

Outcome criterion3(std::vector<SweepCell>& cells, double& total_secs) {
    auto t0 = Clock::now();
    std::size_t instances = 0, oracle_failures = 0;
    for (std::uint64_t q : {3ull, 5ull}) {
        FieldCtx F = make_field(q);
        for (Variant v : {Variant::cyclic, Variant::skew}) {
            for (Form form : {Form::te, Form::th}) {
                SweepParams params;
                params.variant = v;
                params.form = form;
                params.nmax = 12;
                params.seed = 2026;
                params.qpolys = 5;
                SweepCell cell{q, v, form, run_sweep(F, params)};
                instances += cell.res.checked;
                oracle_failures += cell.res.failed;
                cells.push_back(std::move(cell));
            }
        }
    }
    total_secs = seconds_since(t0);
    Outcome out;
    out.pass = instances > 0 && oracle_failures == 0 && total_secs < 300.0;
    out.detail = std::to_string(instances) + " instances, " + std::to_string(oracle_failures) +
                 " oracle disagreements, " + fmt_secs(total_secs);
    return out;
}

// --- criterion 4: dimension law on every sweep row ------------------------

Outcome criterion4(const std::vector<SweepCell>& cells) {
    std::size_t rows = 0, violations = 0;
    for (const SweepCell& cell : cells) {
        for (const SweepRow& row : cell.res.rows) {
            ++rows;
            if (row.dim_code + row.dim_dual != 2 * row.n) ++violations;
        }
    }
    Outcome out;
    out.pass = rows > 0 && violations == 0;
    out.detail = std::to_string(rows) + " rows, " + std::to_string(violations) + " violations";
    return out;
}

// --- criterion 5: pairing identity suite ----------------------------------

Outcome criterion5() {
    std::mt19937_64 rng(20260501);
    std::size_t trials = 0, violations = 0;
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
        FieldCtx F = make_field(q);
        for (int i = 0; i < 1000; ++i) {
            ++trials;
            std::size_t n = 2 + rng() % 10;
            FqPoly fp = random_poly_len(F, rng, n);
            FqPoly gp = random_poly_len(F, rng, n);
            FqPoly qp = random_poly_len(F, rng, n);
            RnElem f = make_rn(F, n, fp, FqPoly());
            RnElem g = make_rn(F, n, gp, FqPoly());
            Fq2 alpha = F.make2(F.elem(rng() % q), F.elem(rng() % q));
            Fq base = star(F, f, g).a;
            bool ok = star(F, f, g) == F.lift(base);

            RnElem ff = make_rn(F, n, flip(F, fp), FqPoly());
            RnElem gf = make_rn(F, n, flip(F, gp), FqPoly());
            ok = ok && star(F, ff, gf) == F.lift(base);

            RnElem fq = make_rn(F, n, mul(F, fp, qp), FqPoly());
            RnElem gq = make_rn(F, n, mul(F, gp, hat(qp, n)), FqPoly());
            ok = ok && star(F, fq, g) == star(F, f, gq);

            ok = ok && trace_form(F, f, g, Form::te) == F.mul(F.from_int(2), base);

            RnElem ag = scalar_mul(F, alpha, g);
            RnElem af = scalar_mul(F, alpha, f);
            Fq tr_alpha = F.trace(alpha);
            ok = ok && F.trace(star(F, f, ag)) == F.mul(tr_alpha, base);
            ok = ok && F.trace(star(F, af, g)) == F.mul(tr_alpha, base);
            ok = ok && F.trace(star(F, af, ag)) == F.mul(F.trace(F.mul(alpha, alpha)), base);

            ok = ok && bullet(F, f, g) == F.lift(base);
            ok = ok && trace_form(F, f, g, Form::th) == F.mul(F.from_int(2), base);
            ok = ok && F.trace(bullet(F, f, ag)) == F.mul(tr_alpha, base);
            ok = ok && F.trace(bullet(F, af, g)) == F.mul(tr_alpha, base);
            Fq norm_tr = F.trace(F.mul(alpha, F.frobenius(alpha)));
            ok = ok && F.trace(bullet(F, af, ag)) == F.mul(norm_tr, base);

            if (!ok) ++violations;
        }
    }
    Outcome out;
    out.pass = violations == 0 && trials == 3000;
    out.detail = std::to_string(trials) + " triples, " + std::to_string(violations) +
                 " violations";
    return out;
}

// --- criterion 6: reciprocal identities -----------------------------------

Outcome criterion6() {
    std::mt19937_64 rng(20260601);
    std::size_t pairs = 0, violations = 0;
    for (std::uint64_t q : {3ull, 5ull, 7ull}) {
        FieldCtx F = make_field(q);
        std::size_t checked = 0;
        while (checked < 1000) {
            FqPoly f = random_poly_len(F, rng, 1 + rng() % 12);
            FqPoly g = random_poly_len(F, rng, 1 + rng() % 12);
            if (f.is_zero() || g.is_zero()) continue;
            ++checked;
            ++pairs;
            bool ok = shift_up(reciprocal(reciprocal(f)), f.valuation()) == f;
            ok = ok && shift_up(reciprocal(reciprocal(g)), g.valuation()) == g;
            if (f.degree() < g.degree()) std::swap(f, g);
            FqPoly s = add(F, f, g);
            if (!s.is_zero()) {
                std::size_t D = f.degree() - s.degree();
                FqPoly lhs = shift_up(reciprocal(s), D);
                FqPoly rhs = add(F, reciprocal(f),
                                 shift_up(reciprocal(g), f.degree() - g.degree()));
                ok = ok && lhs == rhs;
            }
            if (!ok) ++violations;
        }
    }
    Outcome out;
    out.pass = violations == 0 && pairs == 3000;
    out.detail = std::to_string(pairs) + " pairs, " + std::to_string(violations) + " violations";
    return out;
}

// --- criterion 7: zero mixing polynomial collapses ------------------------

Outcome criterion7(const std::vector<SweepCell>& cells) {
    std::size_t checked = 0, failed = 0;
    for (const SweepCell& cell : cells) {
        checked += cell.res.collapse_checked;
        failed += cell.res.collapse_failed;
    }
    Outcome out;
    out.pass = checked > 0 && failed == 0;
    out.detail = std::to_string(checked) + " reductions, " + std::to_string(failed) +
                 " mismatches";
    return out;
}

// --- criterion 8: dual membership law for g = X - 1, unit mixing ----------

Outcome criterion8() {
    struct Case {
        std::uint64_t q;
        std::size_t n;
        std::vector<long long> w, f;
    };
    const std::vector<Case> cases = {
        {3, 8, {1, 1}, {1, 0, 1}},  {3, 4, {1}, {1, 0, 1}},    {3, 6, {1, 1}, {-1, 1}},
        {5, 6, {1, 1}, {1, 1, 1}},  {5, 10, {-1, 1}, {1, 1}},
    };
    std::size_t rows = 0, violations = 0, unverified = 0;
    for (const Case& c : cases) {
        FieldCtx F = make_field(c.q);
        CodeSpec spec;
        spec.variant = Variant::cyclic;
        spec.n = c.n;
        std::vector<Fq> wc, fc;
        for (long long t : c.w) wc.push_back(F.from_int(t));
        for (long long t : c.f) fc.push_back(F.from_int(t));
        spec.w = FqPoly::from_coeffs(std::move(wc));
        spec.f = FqPoly::from_coeffs(std::move(fc));
        spec.g = FqPoly::from_ints(F, {-1, 1});
        spec.l = exact_div(F, xn_minus_1(F, c.n), mul(F, spec.w, mul(F, spec.f, spec.g)));
        spec.qpoly = FqPoly::constant(F.one());
        spec.qshape = QShape::w_multiplied;
        DualReport rep = dual_te_cyclic_wq(F, spec);
        if (!rep.verified) ++unverified;
        FqPoly lstar = reciprocal(spec.l);
        FqPoly lf = mul(F, lstar, reciprocal(spec.f));
        for (std::size_t i = 0; i < rep.dual.dim(); ++i) {
            ++rows;
            RnElem u = rep.dual.basis_elem(i);
            try {
                FqPoly cpart = exact_div(F, u.c, lstar);
                FqPoly dpart = exact_div(F, u.d, lf);
                Fq val = F.add(eval(F, cpart, F.one()),
                               F.mul(F.delta(), eval(F, dpart, F.one())));
                if (val.v != 0) ++violations;
            } catch (const NonExactDivision&) {
                ++violations;
            }
        }
    }
    Outcome out;
    out.pass = rows > 0 && violations == 0 && unverified == 0;
    out.detail = std::to_string(rows) + " dual rows over " + std::to_string(cases.size()) +
                 " specs, " + std::to_string(violations) + " violations, " +
                 std::to_string(unverified) + " unverified";
    return out;
}

// --- criterion 9: canonical decomposition round trip ----------------------

Outcome criterion9() {
    std::mt19937_64 rng(20260901);
    FieldCtx F3 = make_field(3);
    FieldCtx F5 = make_field(5);
    std::size_t trials = 0, failures = 0;
    for (Variant variant : {Variant::cyclic, Variant::skew}) {
        for (int t = 0; t < 200; ++t) {
            ++trials;
            const FieldCtx& F = (t % 2 == 0) ? F3 : F5;
            std::size_t n = variant == Variant::skew ? 2 * (1 + rng() % 5) : 1 + rng() % 10;
            std::vector<RnElem> gens;
            std::size_t count = 1 + rng() % 3;
            for (std::size_t i = 0; i < count; ++i) gens.push_back(random_elem(F, rng, n));
            try {
                CodeSpec spec = canonical_decomposition(F, gens, variant);
                spec.validate(F);
                Code orig = build_code_from_generators(F, variant, n, gens);
                Code rebuilt = build_code(F, spec);
                bool ok = code_equals(F, orig, rebuilt);

                // canonical mixing polynomial obeys the degree bound
                FqPoly big_g = mul(F, spec.w, spec.g);
                ok = ok && (spec.qpoly.is_zero() || spec.qpoly.degree() < big_g.degree());

                // decomposition depends only on the module, not the
                // generating set
                std::vector<RnElem> more = gens;
                more.push_back(left_action(F, random_poly_len(F, rng, n), gens[0], variant));
                CodeSpec spec2 = canonical_decomposition(F, more, variant);
                ok = ok && spec2.w == spec.w && spec2.l == spec.l && spec2.f == spec.f &&
                     spec2.g == spec.g && spec2.qpoly == spec.qpoly;

                // skew mixing polynomials satisfy the divisibility constraint
                if (variant == Variant::skew) {
                    FqPoly big_f = mul(F, spec.w, spec.f);
                    FqPoly cof = exact_div(F, xn_minus_1(F, n), flip(F, big_f));
                    FqPoly lifted = mod_xn1(F, mul(F, cof, spec.qpoly), n);
                    ok = ok && divmod(F, lifted, big_g).rem.is_zero();
                }

                if (!ok) ++failures;
            } catch (const Error&) {
                ++failures;
            }
        }
    }
    Outcome out;
    out.pass = failures == 0 && trials == 400;
    out.detail = std::to_string(trials) + " generator sets, " + std::to_string(failures) +
                 " failures";
    return out;
}

// --- criterion 10: negative control ---------------------------------------

Outcome criterion10() {
    FieldCtx F = make_field(3);
    CodeSpec spec;
    spec.variant = Variant::cyclic;
    spec.n = 6;
    spec.w = FqPoly::constant(F.one());
    spec.f = FqPoly::from_ints(F, {2, 0, 1});
    spec.g = FqPoly::from_ints(F, {-1, 1});
    spec.l = exact_div(F, xn_minus_1(F, 6), mul(F, spec.f, spec.g));
    spec.qpoly = FqPoly::from_ints(F, {1, 1});
    DualReport rep = dual_te_cyclic_general(F, spec);
    Code reference = brute_dual(F, rep.code, Form::te);

    std::vector<RnElem> corrupted_gens;
    for (std::size_t i = 0; i < rep.dual.dim(); ++i)
        corrupted_gens.push_back(rep.dual.basis_elem(i));
    corrupted_gens[0].c = add(F, corrupted_gens[0].c, FqPoly::constant(F.one()));
    Code corrupted = build_code_from_generators(F, Variant::cyclic, 6, corrupted_gens);
    DualCheck check = verify_dual(F, corrupted, reference, rep.code, Form::te);
    bool library_ok = rep.verified && !check.equal && !check.violations.empty();
    for (const DualViolation& v : check.violations) {
        library_ok = library_ok && v.value.v != 0 &&
                     trace_form(F, corrupted.basis_elem(v.claimed_row),
                                rep.code.basis_elem(v.primal_row), Form::te) == v.value;
    }

    std::string cmd = std::string(TRACEDUAL_BIN) + " dual " + FIXTURES_DIR +
                      "/example_n28.spec --corrupt > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    bool cli_ok = exit_code == 2;

    Outcome out;
    out.pass = library_ok && cli_ok;
    out.detail = std::to_string(check.violations.size()) + " named violations, corrupt run exit " +
                 std::to_string(exit_code);
    return out;
}

}  // namespace

int main() {
    std::vector<SweepCell> cells;
    double sweep_secs = 0;

    struct Line {
        int id;
        const char* name;
        Outcome outcome;
    };
    std::vector<Line> lines;
    lines.push_back({1, "length-28 cyclic worked example reproduced exactly", criterion1()});
    lines.push_back({2, "length-10 skew worked example reproduced exactly", criterion2()});
    lines.push_back({3, "closed-form duals equal the brute-force oracle on full sweeps",
                     criterion3(cells, sweep_secs)});
    lines.push_back({4, "dimension law holds on every sweep row", criterion4(cells)});
    lines.push_back({5, "pairing identity suite holds exactly", criterion5()});
    lines.push_back({6, "reciprocal identities hold exactly", criterion6()});
    lines.push_back({7, "zero mixing polynomial collapses to the unmixed construction",
                     criterion7(cells)});
    lines.push_back({8, "dual membership law for g = X-1 with unit mixing", criterion8()});
    lines.push_back({9, "canonical decomposition round trip is stable", criterion9()});
    lines.push_back({10, "negative control detects corrupted generators", criterion10()});

    int failures = 0;
    for (const Line& line : lines) {
        if (!line.outcome.pass) ++failures;
        std::printf("%s criterion %d: %s (%s)\n", line.outcome.pass ? "PASS" : "FAIL", line.id,
                    line.name, line.outcome.detail.c_str());
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
