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

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "hyrec/cli/run.hpp"

namespace {

const std::map<std::string, std::string>& descriptions() {
    static const std::map<std::string, std::string> d{
        {"verify", "check the splitting / 2-torsion law at every good prime up to --bound"},
        {"factor", "factor f mod p and report its splitting type"},
        {"torsion", "list the rational 2-torsion of the Jacobian of y^2 = f(x) over F_p"},
        {"spl", "primes up to --bound at which f splits completely"},
        {"density", "observed frequency of completely split primes"},
        {"include", "test Spl(f) subset of Spl(h) up to --bound"},
        {"frobenius", "Frobenius action on the 2-torsion as a matrix over F_2"},
        {"blowup", "resolve the point at infinity of y^2 = f(x) over F_p"},
        {"jacobian", "enumerate the Jacobian over F_p and report its order"},
    };
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    using hyrec::cli::Format;
    hyrec::cli::RunConfig cfg;
    cfg.seed = hyrec::cli::default_seed_from_env();
    std::string format = "json";
    std::uint32_t prime = 0;
    std::uint64_t group_order = 0;
    std::string timestamp;

    CLI::App app{"Hyperelliptic 2-torsion and prime splitting toolkit"};
    app.set_version_flag("--version", std::string(hyrec::cli::kVersion));
    app.require_subcommand(1);

    for (const auto& name : hyrec::cli::command_names()) {
        auto* sub = app.add_subcommand(name, descriptions().at(name));
        sub->add_option("polynomials", cfg.polynomials, "polynomial(s): \"x^3 - 2\" or \"-2,0,0,1\"")->required();
        sub->add_option("-b,--bound", cfg.bound, "prime bound")->capture_default_str();
        sub->add_option("-p,--prime", prime, "a single odd prime");
        sub->add_option("-s,--seed", cfg.seed, "PRNG seed (default from $HYREC_SEED)")->capture_default_str();
        sub->add_option("-G,--group-order", group_order, "expected Galois group order");
        sub->add_option("-f,--format", format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("-o,--output", cfg.output, "output path (default stdout)");
        sub->add_option("-j,--threads", cfg.threads, "worker threads")->capture_default_str();
        sub->add_option("--ext-cap", cfg.ext_cap, "largest extension degree")->capture_default_str();
        sub->add_option("--enum-cap", cfg.enum_cap, "largest enumeration size")->capture_default_str();
        sub->add_option("--timestamp", timestamp, "timestamp recorded in the report");
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
    for (auto* sub : app.get_subcommands()) {
        if (sub->count("--prime") > 0) cfg.prime = prime;
        if (sub->count("--group-order") > 0) cfg.group_order = group_order;
        if (sub->count("--timestamp") > 0) cfg.timestamp = timestamp;
    }
    if (!cfg.timestamp) {
        if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0')
            cfg.timestamp = epoch;
    }
    return hyrec::cli::run(cfg, std::cout, std::cerr);
}
