/*
   Copyright 2026 The hyrec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
   JSON and CSV encodings of library results. Integer-polynomial coefficients
   and discriminants are arbitrary precision and are written as decimal
   strings; finite-field coefficients are written as integers. Elements of
   F_(p^k) are arrays of k residues.
*/

#ifndef HYREC_CLI_REPORT_HPP
#define HYREC_CLI_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyrec/ff/prime_field.hpp"
#include "hyrec/jacobian/jacobian.hpp"
#include "hyrec/poly/factor.hpp"
#include "hyrec/poly/integer_polynomial.hpp"
#include "hyrec/reciprocity/reciprocity.hpp"
#include "hyrec/torsion/blowup.hpp"
#include "hyrec/torsion/two_torsion.hpp"

namespace hyrec::cli {

using Json = nlohmann::ordered_json;

inline Json to_json(const IntegerPolynomial& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return Json{{"text", f.to_string()}, {"coefficients", coeffs}};
}

inline IntegerPolynomial integer_polynomial_from_json(const Json& j) {
    std::vector<BigInt> v;
    for (const auto& c : j.at("coefficients")) v.emplace_back(c.get<std::string>());
    return IntegerPolynomial(std::move(v));
}

/// Coefficients of a polynomial over F_p or F_(p^k).
template <class F>
Json coefficients_json(const Polynomial<F>& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) {
        const auto w = p.field().coefficients(c);
        if (w.size() == 1 && p.field().degree() == 1) {
            out.push_back(w[0]);
        } else {
            out.push_back(w);
        }
    }
    return out;
}

template <class F>
Json to_json(const MumfordDivisor<F>& d) {
    return Json{{"u", coefficients_json(d.u)}, {"v", coefficients_json(d.v)}, {"text", d.to_string()}};
}

inline Json parts_json(const SplittingType& t) {
    Json parts = Json::array();
    for (auto [d, m] : t.parts) parts.push_back(Json::array({d, m}));
    return parts;
}

inline Json to_json(const SplittingType& t) {
    return Json{{"parts", parts_json(t)}, {"all_linear", t.all_linear}, {"squarefree", t.squarefree}};
}

/// Flat record, one CSV row per prime.
inline Json to_json(const PrimeRecord& r) {
    Json j{{"p", r.p},
           {"splitting", parts_json(r.splitting)},
           {"all_linear", r.splitting.all_linear},
           {"squarefree", r.splitting.squarefree}};
    j["torsion_rank"] = r.torsion_rank ? Json(*r.torsion_rank) : Json(nullptr);
    j["law_consistent"] = r.law_consistent;
    return j;
}

inline PrimeRecord prime_record_from_json(const Json& j) {
    PrimeRecord r;
    r.p = j.at("p").get<std::uint32_t>();
    for (const auto& pr : j.at("splitting")) r.splitting.parts.emplace_back(pr.at(0).get<unsigned>(), pr.at(1).get<unsigned>());
    r.splitting.all_linear = j.at("all_linear").get<bool>();
    r.splitting.squarefree = j.at("squarefree").get<bool>();
    if (!j.at("torsion_rank").is_null()) r.torsion_rank = j.at("torsion_rank").get<unsigned>();
    r.law_consistent = j.at("law_consistent").get<bool>();
    return r;
}

inline Json to_json(const Fraction& f) {
    return Json{{"numerator", f.numerator}, {"denominator", f.denominator}, {"value", f.value()}};
}

inline Json to_json(const ReciprocityReport& rep) {
    Json records = Json::array();
    for (const auto& r : rep.records) records.push_back(to_json(r));
    Json violations = Json::array();
    for (const auto& r : rep.violations()) violations.push_back(to_json(r));
    Json hints{{"rational_root", rep.hints.rational_root}};
    hints["certified_by"] = rep.hints.certified_by ? Json(*rep.hints.certified_by) : Json(nullptr);
    return Json{{"kind", "verify"},
                {"f", to_json(rep.f)},
                {"genus", rep.genus},
                {"bound", rep.bound},
                {"discriminant", rep.discriminant.str()},
                {"bad_primes", rep.bad_primes},
                {"records", records},
                {"spl", rep.spl},
                {"verdict", rep.verdict},
                {"density", to_json(rep.density)},
                {"irreducibility", hints},
                {"violations", violations}};
}

inline ReciprocityReport reciprocity_report_from_json(const Json& j) {
    ReciprocityReport rep;
    rep.f = integer_polynomial_from_json(j.at("f"));
    rep.genus = j.at("genus").get<unsigned>();
    rep.bound = j.at("bound").get<std::uint64_t>();
    rep.discriminant = BigInt(j.at("discriminant").get<std::string>());
    rep.bad_primes = j.at("bad_primes").get<std::vector<std::uint32_t>>();
    for (const auto& r : j.at("records")) rep.records.push_back(prime_record_from_json(r));
    rep.spl = j.at("spl").get<std::vector<std::uint32_t>>();
    rep.verdict = j.at("verdict").get<bool>();
    rep.density = {j.at("density").at("numerator").get<std::uint64_t>(),
                   j.at("density").at("denominator").get<std::uint64_t>()};
    rep.hints.rational_root = j.at("irreducibility").at("rational_root").get<bool>();
    if (!j.at("irreducibility").at("certified_by").is_null())
        rep.hints.certified_by = j.at("irreducibility").at("certified_by").get<std::uint32_t>();
    return rep;
}

inline Json to_json(const BlowupChart& c) {
    Json terms = Json::array();
    for (const auto& [e, coef] : c.equation.terms()) terms.push_back(Json::array({e.first, e.second, coef.value}));
    return Json{{"step", c.step},
                {"substitution", c.substitution},
                {"variables", Json::array({c.s_name, c.t_name})},
                {"factored", Json::array({c.factored.first, c.factored.second})},
                {"equation", c.equation.to_string(c.s_name, c.t_name)},
                {"terms", terms},
                {"residual_exponent", c.residual_exponent},
                {"terminal", c.terminal}};
}

/// Renders one CSV field from a JSON value: scalars verbatim, structures as compact JSON.
inline std::string csv_field(const Json& v) {
    std::string s;
    if (v.is_string()) {
        s = v.get<std::string>();
    } else if (v.is_null()) {
        s = "";
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

/// CSV with a header row taken from the keys of the first record.
inline std::string csv_from_rows(const Json& rows) {
    std::string out;
    if (!rows.is_array() || rows.empty()) return out;
    std::vector<std::string> keys;
    for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (i) out += ",";
            out += row.contains(keys[i]) ? csv_field(row.at(keys[i])) : "";
        }
        out += "\n";
    }
    return out;
}

}  // namespace hyrec::cli

#endif  // HYREC_CLI_REPORT_HPP
