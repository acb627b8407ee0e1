#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "code.hpp"
#include "dual.hpp"
#include "errors.hpp"
#include "field.hpp"
#include "poly.hpp"
#include "ring.hpp"

namespace tracedual {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline long long parse_int(const std::string& tok, std::size_t line_no) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                         tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("line " + std::to_string(line_no) + ": trailing characters in '" + tok +
                         "'");
    return v;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// Coefficient token: a plain integer for e = 1, "[d0 d1 ...]" for e > 1.
inline Fq parse_coeff(const FieldCtx& F, const std::string& tok, std::size_t line_no) {
    std::string t = trim(tok);
    if (F.e() == 1) {
        if (!t.empty() && t.front() == '[')
            throw ParseError("line " + std::to_string(line_no) +
                             ": bracketed coefficients are only valid for extension fields");
        return F.from_int(parse_int(t, line_no));
    }
    if (t.empty() || t.front() != '[' || t.back() != ']')
        throw ParseError("line " + std::to_string(line_no) +
                         ": extension-field coefficients must be bracketed digit vectors");
    std::istringstream in(t.substr(1, t.size() - 2));
    std::uint64_t code = 0, scale = 1;
    std::string digit;
    unsigned i = 0;
    while (in >> digit) {
        if (i >= F.e())
            throw ParseError("line " + std::to_string(line_no) + ": too many digits in '" + t +
                             "'");
        long long d = parse_int(digit, line_no);
        long long p = static_cast<long long>(F.p());
        long long r = d % p;
        if (r < 0) r += p;
        code += static_cast<std::uint64_t>(r) * scale;
        scale *= F.p();
        ++i;
    }
    if (i == 0)
        throw ParseError("line " + std::to_string(line_no) + ": empty coefficient in '" + t + "'");
    return F.elem(code);
}

inline FqPoly parse_poly(const FieldCtx& F, const std::string& value, std::size_t line_no) {
    std::vector<Fq> coeffs;
    for (const std::string& tok : split(value, ','))
        coeffs.push_back(parse_coeff(F, tok, line_no));
    return FqPoly::from_coeffs(std::move(coeffs));
}

struct KeyValue {
    std::string value;
    std::size_t line_no = 0;
};

// key: value lines; blank lines and '#' comments are skipped.
inline std::map<std::string, KeyValue> parse_key_values(std::istream& in,
                                                        std::vector<std::string>* raw_lines) {
    std::map<std::string, KeyValue> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (raw_lines != nullptr && t.find('=') != std::string::npos &&
            t.find(':') == std::string::npos) {
            raw_lines->push_back(t);
            continue;
        }
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'key: value'");
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (out.contains(key))
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        out[key] = {value, line_no};
    }
    return out;
}

inline FieldCtx field_from_entries(std::map<std::string, KeyValue>& entries) {
    if (!entries.contains("q")) throw ParseError("missing key 'q'");
    KeyValue qv = entries["q"];
    entries.erase("q");
    std::vector<std::string> parts = split(qv.value, '^');
    if (parts.size() > 2)
        throw ParseError("line " + std::to_string(qv.line_no) + ": malformed field size");
    long long p = parse_int(trim(parts[0]), qv.line_no);
    long long e = parts.size() == 2 ? parse_int(trim(parts[1]), qv.line_no) : 1;
    if (p < 2 || e < 1)
        throw ParseError("line " + std::to_string(qv.line_no) + ": malformed field size");
    std::vector<long long> modulus;
    if (entries.contains("modulus")) {
        KeyValue mv = entries["modulus"];
        entries.erase("modulus");
        for (const std::string& tok : split(mv.value, ','))
            modulus.push_back(parse_int(trim(tok), mv.line_no));
    }
    if (e == 1) {
        if (!modulus.empty()) throw ParseError("'modulus' is only valid for extension fields");
        return make_field(static_cast<std::uint64_t>(p));
    }
    if (modulus.empty()) throw ParseError("extension fields require a 'modulus' key");
    return make_field(static_cast<std::uint64_t>(p), static_cast<unsigned>(e), modulus);
}

}  // namespace detail

struct ParsedSpec {
    FieldCtx field;
    CodeSpec spec;
    std::optional<Form> form;
};

// SpecFile format: one "key: value" pair per line.
//   variant: cyclic | skew          (required)
//   form: te | th                   (optional)
//   q: p or p^e                     (required, odd prime power)
//   modulus: c0,c1,...,1            (required iff e > 1; over F_p)
//   n: length                       (required)
//   w, l, f, g: coefficient lists   (required; ascending, comma-separated)
//   qpoly: coefficient list         (optional, default 0)
//   qshape: plain | w-multiplied    (optional, default plain)
// Coefficients are integers (reduced mod p) for e = 1 and bracketed digit
// vectors "[c0 c1 ...]" for e > 1.  Unknown keys are rejected.
inline ParsedSpec parse_spec(std::istream& in) {
    std::map<std::string, detail::KeyValue> entries = detail::parse_key_values(in, nullptr);
    FieldCtx F = detail::field_from_entries(entries);
    ParsedSpec out{F, CodeSpec{}, std::nullopt};

    auto take = [&](const std::string& key) -> std::optional<detail::KeyValue> {
        auto it = entries.find(key);
        if (it == entries.end()) return std::nullopt;
        detail::KeyValue kv = it->second;
        entries.erase(it);
        return kv;
    };

    std::optional<detail::KeyValue> kv;
    if (!(kv = take("variant"))) throw ParseError("missing key 'variant'");
    if (kv->value == "cyclic")
        out.spec.variant = Variant::cyclic;
    else if (kv->value == "skew")
        out.spec.variant = Variant::skew;
    else
        throw ParseError("line " + std::to_string(kv->line_no) + ": unknown variant '" +
                         kv->value + "'");

    if ((kv = take("form"))) {
        if (kv->value == "te")
            out.form = Form::te;
        else if (kv->value == "th")
            out.form = Form::th;
        else
            throw ParseError("line " + std::to_string(kv->line_no) + ": unknown form '" +
                             kv->value + "'");
    }

    if (!(kv = take("n"))) throw ParseError("missing key 'n'");
    long long n = detail::parse_int(kv->value, kv->line_no);
    if (n < 1) throw ParseError("line " + std::to_string(kv->line_no) + ": n must be positive");
    out.spec.n = static_cast<std::size_t>(n);

    for (const char* key : {"w", "l", "f", "g"}) {
        if (!(kv = take(key))) throw ParseError(std::string("missing key '") + key + "'");
        FqPoly p = detail::parse_poly(F, kv->value, kv->line_no);
        if (key[0] == 'w')
            out.spec.w = std::move(p);
        else if (key[0] == 'l')
            out.spec.l = std::move(p);
        else if (key[0] == 'f')
            out.spec.f = std::move(p);
        else
            out.spec.g = std::move(p);
    }

    if ((kv = take("qpoly"))) out.spec.qpoly = detail::parse_poly(F, kv->value, kv->line_no);

    if ((kv = take("qshape"))) {
        if (kv->value == "plain")
            out.spec.qshape = QShape::plain;
        else if (kv->value == "w-multiplied")
            out.spec.qshape = QShape::w_multiplied;
        else
            throw ParseError("line " + std::to_string(kv->line_no) + ": unknown qshape '" +
                             kv->value + "'");
    }

    if (!entries.empty()) {
        const auto& bad = *entries.begin();
        throw ParseError("line " + std::to_string(bad.second.line_no) + ": unknown key '" +
                         bad.first + "'");
    }
    out.spec.validate(F);
    return out;
}

inline ParsedSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return parse_spec(in);
}

struct ParsedGens {
    FieldCtx field;
    Variant variant = Variant::cyclic;
    std::size_t n = 0;
    std::vector<RnElem> gens;
};

// Generator file: the header keys variant/q/modulus/n as in a SpecFile,
// followed by one "c=<coeffs>; d=<coeffs>" line per generator.
inline ParsedGens parse_generators(std::istream& in) {
    std::vector<std::string> gen_lines;
    std::map<std::string, detail::KeyValue> entries = detail::parse_key_values(in, &gen_lines);
    FieldCtx F = detail::field_from_entries(entries);
    ParsedGens out{F, Variant::cyclic, 0, {}};

    auto it = entries.find("variant");
    if (it == entries.end()) throw ParseError("missing key 'variant'");
    if (it->second.value == "cyclic")
        out.variant = Variant::cyclic;
    else if (it->second.value == "skew")
        out.variant = Variant::skew;
    else
        throw ParseError("unknown variant '" + it->second.value + "'");
    entries.erase(it);

    it = entries.find("n");
    if (it == entries.end()) throw ParseError("missing key 'n'");
    long long n = detail::parse_int(it->second.value, it->second.line_no);
    if (n < 1) throw ParseError("n must be positive");
    out.n = static_cast<std::size_t>(n);
    entries.erase(it);

    if (!entries.empty()) {
        const auto& bad = *entries.begin();
        throw ParseError("line " + std::to_string(bad.second.line_no) + ": unknown key '" +
                         bad.first + "'");
    }

    for (const std::string& line : gen_lines) {
        FqPoly c, d;
        bool saw_c = false, saw_d = false;
        for (const std::string& part : detail::split(line, ';')) {
            std::string t = detail::trim(part);
            if (t.empty()) continue;
            std::size_t eq = t.find('=');
            if (eq == std::string::npos) throw ParseError("malformed generator line: " + line);
            std::string key = detail::trim(t.substr(0, eq));
            FqPoly p = detail::parse_poly(F, t.substr(eq + 1), 0);
            if (key == "c") {
                c = std::move(p);
                saw_c = true;
            } else if (key == "d") {
                d = std::move(p);
                saw_d = true;
            } else {
                throw ParseError("unknown generator component '" + key + "'");
            }
        }
        if (!saw_c || !saw_d) throw ParseError("generator line needs both c= and d=: " + line);
        out.gens.push_back(make_rn(F, out.n, std::move(c), std::move(d)));
    }
    if (out.gens.empty()) throw ParseError("no generator lines found");
    return out;
}

inline ParsedGens parse_generators_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return parse_generators(in);
}

inline std::string field_spec_string(const FieldCtx& F) {
    if (F.e() == 1) return std::to_string(F.p());
    return std::to_string(F.p()) + "^" + std::to_string(F.e());
}

// Prints a spec in SpecFile syntax (accepted back by parse_spec).
inline std::string spec_to_text(const FieldCtx& F, const CodeSpec& spec) {
    std::string out;
    out += "variant: " + variant_name(spec.variant) + "\n";
    out += "q: " + field_spec_string(F) + "\n";
    if (F.e() > 1) {
        out += "modulus: ";
        for (std::size_t i = 0; i < F.modulus().size(); ++i) {
            if (i) out += ',';
            out += std::to_string(F.modulus()[i]);
        }
        out += "\n";
    }
    out += "n: " + std::to_string(spec.n) + "\n";
    out += "w: " + poly_to_string(F, spec.w) + "\n";
    out += "l: " + poly_to_string(F, spec.l) + "\n";
    out += "f: " + poly_to_string(F, spec.f) + "\n";
    out += "g: " + poly_to_string(F, spec.g) + "\n";
    out += "qpoly: " + poly_to_string(F, spec.qpoly) + "\n";
    out += "qshape: " + std::string(spec.qshape == QShape::plain ? "plain" : "w-multiplied") +
           "\n";
    return out;
}

inline std::string report_to_text(const FieldCtx& F, const DualReport& rep) {
    std::string out;
    out += "h: " + poly_to_string(F, rep.h) + "\n";
    out += "k: " + poly_to_string(F, rep.k) + "\n";
    out += "cprime: " + poly_to_string(F, rep.cprime) + "\n";
    out += "dprime: " + poly_to_string(F, rep.dprime) + "\n";
    out += "dual_gen1_c: " + poly_to_string(F, rep.gen1.c) + "\n";
    out += "dual_gen1_d: " + poly_to_string(F, rep.gen1.d) + "\n";
    out += "dual_gen2_c: " + poly_to_string(F, rep.gen2.c) + "\n";
    out += "dual_gen2_d: " + poly_to_string(F, rep.gen2.d) + "\n";
    out += "dim_code: " + std::to_string(rep.dim_code) + "\n";
    out += "dim_dual: " + std::to_string(rep.dim_dual) + "\n";
    out += std::string("verified: ") + (rep.verified ? "true" : "false") + "\n";
    return out;
}

inline nlohmann::json poly_to_json(const FieldCtx& F, const FqPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Fq& c : p.coeffs()) {
        if (F.e() == 1) {
            arr.push_back(c.v);
        } else {
            nlohmann::json digits = nlohmann::json::array();
            std::uint64_t v = c.v;
            for (unsigned i = 0; i < F.e(); ++i) {
                digits.push_back(v % F.p());
                v /= F.p();
            }
            arr.push_back(digits);
        }
    }
    return arr;
}

inline std::string report_to_json(const FieldCtx& F, const DualReport& rep) {
    nlohmann::json j;
    j["h"] = poly_to_json(F, rep.h);
    j["k"] = poly_to_json(F, rep.k);
    j["cprime"] = poly_to_json(F, rep.cprime);
    j["dprime"] = poly_to_json(F, rep.dprime);
    j["dual_gen1_c"] = poly_to_json(F, rep.gen1.c);
    j["dual_gen1_d"] = poly_to_json(F, rep.gen1.d);
    j["dual_gen2_c"] = poly_to_json(F, rep.gen2.c);
    j["dual_gen2_d"] = poly_to_json(F, rep.gen2.d);
    j["dim_code"] = rep.dim_code;
    j["dim_dual"] = rep.dim_dual;
    j["verified"] = rep.verified;
    return j.dump() + "\n";
}

}  // namespace tracedual
