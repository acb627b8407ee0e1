#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <tracedual/code.hpp>
#include <tracedual/dual.hpp>
#include <tracedual/field.hpp>
#include <tracedual/io.hpp>
#include <tracedual/oracle.hpp>
#include <tracedual/sweep.hpp>

namespace {

using namespace tracedual;

Form parse_form_flag(const std::string& s) {
    if (s == "te") return Form::te;
    if (s == "th") return Form::th;
    throw ParseError("unknown form '" + s + "' (expected te or th)");
}

int cmd_dual(const std::string& path, const std::string& form_flag, bool no_verify, bool json,
             bool pretty, bool corrupt) {
    ParsedSpec parsed = parse_spec_file(path);
    const FieldCtx& F = parsed.field;
    Form form = Form::te;
    if (!form_flag.empty())
        form = parse_form_flag(form_flag);
    else if (parsed.form)
        form = *parsed.form;

    DualOptions opts;
    opts.verify = false;
    DualReport rep = compute_dual(F, parsed.spec, form, opts);
    if (rep.hypothesis_warning)
        std::cerr << "warning: gcd(n, p) != 1; the construction is outside its hypothesis and "
                     "only the oracle check validates the result\n";

    if (corrupt) {
        // Deliberately damage the first generator before verification; used
        // as a negative control for the oracle path.
        rep.gen1.c = add(F, rep.gen1.c, FqPoly::constant(F.one()));
        std::vector<RnElem> gens{rep.gen1, rep.gen2};
        rep.dual = build_code_from_generators(F, parsed.spec.variant, parsed.spec.n, gens);
        rep.dim_dual = rep.dual.dim();
    }

    bool checked = !no_verify;
    if (checked) {
        Code reference = brute_dual(F, rep.code, form);
        rep.verified = code_equals(F, rep.dual, reference);
    }

    if (json) {
        std::cout << report_to_json(F, rep);
    } else {
        std::cout << report_to_text(F, rep);
        if (pretty) {
            std::cout << "# gen1 = (" << poly_pretty(F, rep.gen1.c) << ") + gamma*("
                      << poly_pretty(F, rep.gen1.d) << ")\n";
            std::cout << "# gen2 = (" << poly_pretty(F, rep.gen2.c) << ") + gamma*("
                      << poly_pretty(F, rep.gen2.d) << ")\n";
            std::cout << "# h = " << poly_pretty(F, rep.h) << ", k = " << poly_pretty(F, rep.k)
                      << ", cprime = " << poly_pretty(F, rep.cprime)
                      << ", dprime = " << poly_pretty(F, rep.dprime) << "\n";
        }
    }
    return (checked && !rep.verified) ? 2 : 0;
}

int cmd_canonicalize(const std::string& path) {
    ParsedGens parsed = parse_generators_file(path);
    CodeSpec spec = canonical_decomposition(parsed.field, parsed.gens, parsed.variant);
    std::cout << spec_to_text(parsed.field, spec);
    return 0;
}

int cmd_sweep(const std::string& q_flag, const std::string& modulus_flag, std::size_t nmax,
              const std::string& variant_flag, const std::string& form_flag, std::uint64_t seed,
              const std::string& csv_path, int qpolys) {
    std::vector<std::string> parts = detail::split(q_flag, '^');
    if (parts.empty() || parts.size() > 2) throw ParseError("malformed --q value");
    long long p = detail::parse_int(detail::trim(parts[0]), 0);
    long long e = parts.size() == 2 ? detail::parse_int(detail::trim(parts[1]), 0) : 1;
    if (p < 2 || e < 1) throw ParseError("malformed --q value");
    std::vector<long long> modulus;
    if (!modulus_flag.empty())
        for (const std::string& tok : detail::split(modulus_flag, ','))
            modulus.push_back(detail::parse_int(detail::trim(tok), 0));
    FieldCtx F = e == 1 ? make_field(static_cast<std::uint64_t>(p))
                        : make_field(static_cast<std::uint64_t>(p), static_cast<unsigned>(e),
                                     modulus);

    SweepParams params;
    params.variant = variant_flag == "skew" ? Variant::skew : Variant::cyclic;
    if (variant_flag != "skew" && variant_flag != "cyclic")
        throw ParseError("unknown --variant value '" + variant_flag + "'");
    params.form = parse_form_flag(form_flag);
    params.nmax = nmax;
    params.seed = seed;
    params.qpolys = qpolys;

    SweepResult res = run_sweep(F, params);
    if (!csv_path.empty()) write_sweep_csv(csv_path, res);
    std::cout << "checked: " << res.checked << "\n";
    std::cout << "passed: " << res.passed << "\n";
    std::cout << "failed: " << res.failed << "\n";
    std::cout << "dim_law_failed: " << res.dim_law_failed << "\n";
    std::cout << "collapse_checked: " << res.collapse_checked << "\n";
    std::cout << "collapse_failed: " << res.collapse_failed << "\n";
    return res.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction and duals of F_q-linear (skew) cyclic codes over F_{q^2}"};
    app.require_subcommand(1);

    std::string spec_path, form_flag;
    bool no_verify = false, json = false, pretty = false, corrupt = false;
    CLI::App* dual = app.add_subcommand("dual", "Closed-form dual of a spec file");
    dual->add_option("spec", spec_path, "SpecFile path")->required();
    dual->add_option("--form", form_flag, "Trace form: te or th (overrides the file)");
    dual->add_flag("--no-verify", no_verify, "Skip the oracle comparison");
    dual->add_flag("--json", json, "Emit the report as a JSON object");
    dual->add_flag("--pretty", pretty, "Append infix-rendered polynomials");
    dual->add_flag("--corrupt", corrupt, "Damage one generator coefficient (negative control)");

    std::string gens_path;
    CLI::App* canon = app.add_subcommand("canonicalize",
                                         "Recover construction data from generators");
    canon->add_option("gens", gens_path, "Generator file path")->required();

    std::string q_flag = "3", modulus_flag, variant_flag = "cyclic", sweep_form = "te", csv_path;
    std::size_t nmax = 12;
    std::uint64_t seed = 0;
    int qpolys = 5;
    CLI::App* sweep = app.add_subcommand("sweep", "Exhaustive oracle sweep over factorizations");
    sweep->add_option("--q", q_flag, "Field size (p or p^e)");
    sweep->add_option("--modulus", modulus_flag, "Base modulus coefficients for e > 1");
    sweep->add_option("--nmax", nmax, "Largest length to sweep");
    sweep->add_option("--variant", variant_flag, "cyclic or skew");
    sweep->add_option("--form", sweep_form, "te or th");
    CLI::Option* seed_opt = sweep->add_option("--seed", seed, "Seed for the mixing polynomials");
    sweep->add_option("--csv", csv_path, "Write one CSV row per instance to this path");
    sweep->add_option("--qpolys", qpolys, "Mixing polynomials per factorization");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (dual->parsed())
            return cmd_dual(spec_path, form_flag, no_verify, json, pretty, corrupt);
        if (canon->parsed()) return cmd_canonicalize(gens_path);
        if (sweep->parsed()) {
            if (seed_opt->count() == 0) {
                if (const char* env = std::getenv("TRACEDUAL_SEED")) {
                    seed = std::strtoull(env, nullptr, 10);
                }
            }
            return cmd_sweep(q_flag, modulus_flag, nmax, variant_flag, sweep_form, seed, csv_path,
                             qpolys);
        }
    } catch (const tracedual::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
