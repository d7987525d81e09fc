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
   Subcommand dispatch. Every command builds a JSON payload; the CSV and text
   renderings are derived from that payload, so the three formats never
   disagree. Exit codes:

     0  success (for `verify`, the law held at every good prime)
     1  usage or input error
     2  `verify` found a prime at which the law fails
*/

#ifndef HYREC_CLI_RUN_HPP
#define HYREC_CLI_RUN_HPP

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyrec/cli/parse.hpp"
#include "hyrec/cli/report.hpp"
#include "hyrec/error.hpp"
#include "hyrec/ff/ext_field.hpp"
#include "hyrec/jacobian/jacobian.hpp"
#include "hyrec/random.hpp"
#include "hyrec/reciprocity/reciprocity.hpp"
#include "hyrec/torsion/binary_matrix.hpp"
#include "hyrec/torsion/blowup.hpp"
#include "hyrec/torsion/two_torsion.hpp"

namespace hyrec::cli {

inline constexpr const char* kToolName = "hyrec";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSeedEnv = "HYREC_SEED";

enum class Format { Json, Csv, Text };

inline std::string to_string(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "json";
}

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"verify", "factor",    "torsion", "spl",     "density",
                                                "include", "frobenius", "blowup",  "jacobian"};
    return names;
}

struct RunConfig {
    std::string command;
    std::vector<std::string> polynomials;
    std::uint64_t bound = 100;
    std::optional<std::uint32_t> prime;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::uint64_t> group_order;
    Format format = Format::Json;
    std::string output;  ///< empty: write to the given stream
    unsigned threads = 1;
    unsigned ext_cap = ExtField::kDefaultDegreeCap;
    std::uint64_t enum_cap = kDefaultEnumerationCap;
    std::optional<std::string> timestamp;
};

/// Seed from $HYREC_SEED when it holds a decimal integer, else the built-in default.
inline std::uint64_t default_seed_from_env() {
    const char* s = std::getenv(kSeedEnv);
    if (s == nullptr || *s == '\0') return kDefaultSeed;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    return kDefaultSeed;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Result of one subcommand before rendering.
struct CommandResult {
    Json payload;
    Json rows;  ///< flat records used for CSV and the text table
    int exit_status = 0;
};

namespace detail {

inline Json config_echo(const RunConfig& cfg) {
    Json j{{"polynomials", cfg.polynomials}, {"bound", cfg.bound}};
    j["prime"] = cfg.prime ? Json(*cfg.prime) : Json(nullptr);
    j["seed"] = cfg.seed;
    j["group_order"] = cfg.group_order ? Json(*cfg.group_order) : Json(nullptr);
    j["ext_cap"] = cfg.ext_cap;
    j["enum_cap"] = cfg.enum_cap;
    j["format"] = to_string(cfg.format);
    return j;
}

inline IntegerPolynomial polynomial_arg(const RunConfig& cfg, std::size_t i) {
    if (cfg.polynomials.size() <= i) throw UsageError("missing polynomial argument " + std::to_string(i + 1));
    return parse_polynomial(cfg.polynomials[i]).poly;
}

inline void require_count(const RunConfig& cfg, std::size_t n) {
    if (cfg.polynomials.size() != n)
        throw UsageError("'" + cfg.command + "' takes " + std::to_string(n) + " polynomial(s), got " +
                         std::to_string(cfg.polynomials.size()));
}

inline std::uint32_t prime_arg(const RunConfig& cfg) {
    if (!cfg.prime) throw UsageError("'" + cfg.command + "' needs a prime (-p)");
    return *cfg.prime;
}

inline std::shared_ptr<const PrimeField> field_for(std::uint32_t p) { return std::make_shared<const PrimeField>(p); }

inline CommandResult cmd_verify(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto rep = verify_law(f, cfg.bound, {cfg.seed, cfg.threads});
    CommandResult r;
    r.payload = to_json(rep);
    r.rows = r.payload["records"];
    r.exit_status = rep.verdict ? 0 : 2;
    return r;
}

inline CommandResult cmd_factor(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto p = prime_arg(cfg);
    const auto fbar = f.reduce(field_for(p));
    if (fbar.degree() < 1) throw Error(ErrorCode::UnsupportedDegree, "f mod p is constant");
    const auto fac = factorize(fbar, cfg.seed);
    const auto type = splitting_type(fac);
    CommandResult r;
    Json factors = Json::array();
    for (const auto& [g, m] : fac.factors)
        factors.push_back(Json{{"degree", g.degree()}, {"multiplicity", m}, {"coefficients", coefficients_json(g)},
                               {"text", g.to_string()}});
    r.payload = Json{{"kind", "factor"},
                     {"f", to_json(f)},
                     {"p", p},
                     {"unit", fac.unit.value},
                     {"factors", factors},
                     {"splitting", to_json(type)},
                     {"splits_completely", type.splits_completely() &&
                                               static_cast<int>(type.total_degree()) == fbar.degree()}};
    r.rows = factors;
    return r;
}

inline CommandResult cmd_torsion(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto p = prime_arg(cfg);
    const HyperellipticCurve<PrimeField> curve(f.reduce(field_for(p)));
    const auto sub = two_torsion_points(curve, cfg.seed);
    Json elements = Json::array();
    for (const auto& d : sub.elements) elements.push_back(to_json(d));
    CommandResult r;
    r.payload = Json{{"kind", "torsion"},
                     {"f", to_json(f)},
                     {"p", p},
                     {"genus", curve.genus()},
                     {"factor_count", sub.factor_count},
                     {"rank", sub.rank},
                     {"count", sub.elements.size()},
                     {"elements", elements}};
    r.rows = elements;
    return r;
}

inline CommandResult cmd_spl(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto spl = spl_set(f, cfg.bound, {cfg.seed, cfg.threads});
    CommandResult r;
    r.payload = Json{{"kind", "spl"}, {"f", to_json(f)}, {"bound", cfg.bound}, {"spl", spl}, {"count", spl.size()}};
    r.rows = Json::array();
    for (auto p : spl) r.rows.push_back(Json{{"p", p}});
    return r;
}

inline CommandResult cmd_density(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto rep = density_report(f, cfg.bound, cfg.group_order, {cfg.seed, cfg.threads});
    CommandResult r;
    Json row{{"bound", rep.bound},
             {"split", rep.observed.numerator},
             {"good", rep.observed.denominator},
             {"frequency", rep.observed.value()}};
    row["group_order"] = rep.group_order ? Json(*rep.group_order) : Json(nullptr);
    row["expected"] = rep.group_order ? Json(1.0 / static_cast<double>(*rep.group_order)) : Json(nullptr);
    row["deviation"] = rep.deviation ? Json(*rep.deviation) : Json(nullptr);
    r.payload = Json{{"kind", "density"}, {"f", to_json(f)}, {"observed", to_json(rep.observed)}};
    for (const auto& [k, v] : row.items()) r.payload[k] = v;
    r.rows = Json::array({row});
    return r;
}

inline CommandResult cmd_include(const RunConfig& cfg) {
    require_count(cfg, 2);
    const auto f = polynomial_arg(cfg, 0);
    const auto h = polynomial_arg(cfg, 1);
    const auto res = inclusion_check(f, h, cfg.bound, {cfg.seed, cfg.threads});
    CommandResult r;
    Json row{{"holds", res.holds},
             {"good_count", res.good_count},
             {"f_split_count", res.f_split_count},
             {"h_split_count", res.h_split_count}};
    const auto first = res.first_counterexample();
    row["first_counterexample"] = first ? Json(*first) : Json(nullptr);
    row["exceptions"] = res.exceptions;
    r.payload = Json{{"kind", "include"}, {"f", to_json(f)}, {"h", to_json(h)}, {"bound", cfg.bound}};
    for (const auto& [k, v] : row.items()) r.payload[k] = v;
    r.rows = Json::array({row});
    return r;
}

/// Size of the subgroup of GL_n(F_2) generated by `gens`; nullopt past `cap` elements.
inline std::optional<std::size_t> generated_group_size(const std::set<BinaryMatrix>& gens, unsigned n,
                                                       std::size_t cap = 1U << 16) {
    std::set<BinaryMatrix> seen{BinaryMatrix::identity(n)};
    std::deque<BinaryMatrix> todo{BinaryMatrix::identity(n)};
    while (!todo.empty()) {
        const auto m = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            auto next = m * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) return std::nullopt;
                todo.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

inline CommandResult cmd_frobenius(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    hyrec::detail::require_law_input(f);
    std::vector<std::uint32_t> primes;
    if (cfg.prime) {
        primes.push_back(*cfg.prime);
    } else {
        primes = good_primes(f, cfg.bound);
    }
    const unsigned genus = static_cast<unsigned>(f.degree() - 1) / 2;
    const auto actions = hyrec::detail::ordered_map(primes, cfg.threads, [&](std::uint32_t p) {
        return frobenius_matrix(f.reduce(field_for(p)), derive_seed(cfg.seed, p), cfg.ext_cap);
    });
    Json entries = Json::array();
    std::set<BinaryMatrix> observed;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const auto& a = actions[i];
        observed.insert(a.matrix);
        entries.push_back(Json{{"p", primes[i]},
                               {"matrix", a.matrix.to_string()},
                               {"columns", a.matrix.columns()},
                               {"order", a.matrix.order()},
                               {"permutation", a.permutation},
                               {"permutation_order", a.permutation_order},
                               {"splitting_degree", a.basis.field->degree()},
                               {"identity", a.matrix.is_identity()}});
    }
    const auto closure = generated_group_size(observed, 2 * genus);
    CommandResult r;
    r.payload = Json{{"kind", "frobenius"},
                     {"f", to_json(f)},
                     {"genus", genus},
                     {"bound", cfg.prime ? Json(nullptr) : Json(cfg.bound)},
                     {"entries", entries},
                     {"distinct_matrices", observed.size()}};
    r.payload["generated_group_order"] = closure ? Json(*closure) : Json(nullptr);
    r.rows = entries;
    return r;
}

inline CommandResult cmd_blowup(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    hyrec::detail::require_law_input(f);
    const auto p = prime_arg(cfg);
    const auto field = field_for(p);
    const auto fbar = f.reduce(field);
    const unsigned genus = static_cast<unsigned>(f.degree() - 1) / 2;
    std::vector<PrimeField::Element> asc(fbar.coeffs().begin(), fbar.coeffs().end());
    const auto a = blowup_coefficients(asc);
    const auto chain = blowup_chain(genus, a, field);
    Json charts = Json::array();
    for (const auto& c : chain) charts.push_back(to_json(c));
    Json coeffs = Json::array();
    for (const auto& e : a) coeffs.push_back(e.value);
    CommandResult r;
    r.payload = Json{{"kind", "blowup"},
                     {"f", to_json(f)},
                     {"p", p},
                     {"genus", genus},
                     {"a", coeffs},
                     {"start", infinity_chart(genus, a, field).to_string("x", "z")},
                     {"chain", charts}};
    r.rows = charts;
    return r;
}

inline CommandResult cmd_jacobian(const RunConfig& cfg) {
    require_count(cfg, 1);
    const auto f = polynomial_arg(cfg, 0);
    const auto p = prime_arg(cfg);
    const HyperellipticCurve<PrimeField> curve(f.reduce(field_for(p)));
    const auto all = enumerate_jacobian(curve, cfg.enum_cap);
    bool annihilated = true;
    for (const auto& d : all) annihilated = annihilated && scalar_mul(all.size(), d, curve).is_identity();
    const auto sub = two_torsion_points(curve, cfg.seed);
    Json row{{"p", p},
             {"genus", curve.genus()},
             {"order", all.size()},
             {"two_torsion_count", sub.elements.size()},
             {"order_annihilates", annihilated}};
    CommandResult r;
    r.payload = Json{{"kind", "jacobian"}, {"f", to_json(f)}};
    for (const auto& [k, v] : row.items()) r.payload[k] = v;
    r.rows = Json::array({row});
    return r;
}

inline CommandResult dispatch(const RunConfig& cfg) {
    if (cfg.bound < 2) throw UsageError("bound must be at least 2");
    if (cfg.threads == 0) throw UsageError("threads must be at least 1");
    const auto& c = cfg.command;
    if (c == "verify") return cmd_verify(cfg);
    if (c == "factor") return cmd_factor(cfg);
    if (c == "torsion") return cmd_torsion(cfg);
    if (c == "spl") return cmd_spl(cfg);
    if (c == "density") return cmd_density(cfg);
    if (c == "include") return cmd_include(cfg);
    if (c == "frobenius") return cmd_frobenius(cfg);
    if (c == "blowup") return cmd_blowup(cfg);
    if (c == "jacobian") return cmd_jacobian(cfg);
    throw UsageError("unknown command '" + c + "'");
}

inline std::string render_text(const std::string& command, const Json& payload, const Json& rows) {
    std::ostringstream os;
    os << kToolName << " " << command << "\n";
    for (const auto& [k, v] : payload.items()) {
        if (k == "kind" || (v.is_array() && v == rows)) continue;
        if (v.is_object() && v.contains("text")) {
            os << "  " << k << ": " << v["text"].get<std::string>() << "\n";
        } else {
            os << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
    if (rows.is_array() && !rows.empty()) os << "\n" << csv_from_rows(rows);
    return os.str();
}

}  // namespace detail

/// The full JSON envelope for a finished command.
inline Json make_envelope(const RunConfig& cfg, int exit_status, const Json& payload,
                          const std::optional<Json>& error = std::nullopt) {
    Json env{{"tool", kToolName}, {"version", kVersion}, {"command", cfg.command}, {"config", detail::config_echo(cfg)}};
    env["timestamp"] = cfg.timestamp ? Json(*cfg.timestamp) : Json(nullptr);
    env["exit_status"] = exit_status;
    env["payload"] = payload;
    if (error) env["error"] = *error;
    return env;
}

/// Runs one subcommand and writes its report; returns the process exit code.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << cfg.output << "'\n";
            return 1;
        }
        sink = &file;
    }

    for (const auto& text : cfg.polynomials) {
        try {
            if (parse_polynomial(text).non_monic) err << "warning: '" << text << "' is not monic\n";
        } catch (const Error&) {
            // reported by the command itself
        }
    }

    Json error;
    try {
        const auto result = detail::dispatch(cfg);
        if (result.exit_status == 2)
            err << "error: law violation detected; see payload.violations\n";
        switch (cfg.format) {
            case Format::Json: *sink << make_envelope(cfg, result.exit_status, result.payload).dump(2) << "\n"; break;
            case Format::Csv: *sink << csv_from_rows(result.rows); break;
            case Format::Text: *sink << detail::render_text(cfg.command, result.payload, result.rows); break;
        }
        return result.exit_status;
    } catch (const SyntaxError& e) {
        error = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}, {"position", e.position()}};
    } catch (const Error& e) {
        error = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    } catch (const UsageError& e) {
        error = Json{{"code", "Usage"}, {"message", e.what()}};
    }
    err << "error: " << error["message"].get<std::string>() << "\n";
    if (cfg.format == Format::Json) *sink << make_envelope(cfg, 1, nullptr, error).dump(2) << "\n";
    return 1;
}

}  // namespace hyrec::cli

#endif  // HYREC_CLI_RUN_HPP
