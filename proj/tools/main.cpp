/*
 * Copyright 2026 The futs authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "futs/bisim.hpp"
#include "futs/model_io.hpp"
#include "futs/quotient.hpp"
#include "futs/testkit.hpp"

namespace {

using nlohmann::json;

struct Options {
    bool quiet = false;
    bool emit_json = false;
    std::uint64_t seed = 0;
    std::uint32_t max_brute = futs::default_brute_force_cap;
};

/// Diagnostic already formatted as "file:line:col: message".
struct positioned_error {
    std::string display;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw futs::error(futs::errc::bad_params, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

[[noreturn]] void rethrow_positioned(const std::string &path, const futs::parse_error &e) {
    throw positioned_error{path + ":" + std::to_string(e.line()) + ":" +
                           std::to_string(e.column()) + ": " +
                           std::string(futs::errc_name(e.code())) + ": " + e.raw_message()};
}

futs::ModelDocument load_document(const std::string &path) {
    try {
        return futs::parse_model(read_file(path));
    } catch (const futs::parse_error &e) {
        rethrow_positioned(path, e);
    }
}

json partition_to_json(const futs::Partition &partition,
                       const std::vector<std::string> &names) {
    json blocks = json::array();
    for (const auto &[id, members] : partition.blocks()) {
        json block = json::array();
        for (std::uint32_t member : members)
            block.push_back(names[member]);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

int cmd_parse(const Options &options, const std::string &path) {
    futs::ModelDocument doc = load_document(path);
    std::string canonical = futs::serialize_model(doc);
    if (options.emit_json) {
        json out{{"command", "parse"}, {"kind", futs::kind_name(doc.kind)},
                 {"model", canonical}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << canonical;
    }
    return 0;
}

int cmd_minimize(const Options &options, const std::string &path) {
    futs::ModelDocument doc = load_document(path);
    futs::Futs system = futs::encode_document(doc);
    futs::Partition coarsest = futs::coarsest_bisimulation(system);
    futs::QuotientResult quotient = futs::quotient_futs(system, coarsest);
    std::string quotient_text =
        futs::serialize_model(futs::decode_futs(quotient.quotient, doc.kind));
    std::string partition_text =
        futs::serialize_partition(coarsest, system.states());

    if (options.emit_json) {
        json out{{"command", "minimize"},
                 {"kind", futs::kind_name(doc.kind)},
                 {"partition", partition_to_json(coarsest, system.states())},
                 {"quotient", quotient_text}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << partition_text;
        if (!options.quiet)
            std::cout << "\n" << quotient_text;
    }
    return 0;
}

int cmd_equiv(const Options &options, const std::string &path, const std::string &left,
              const std::string &right) {
    futs::ModelDocument doc = load_document(path);
    futs::Futs system = futs::encode_document(doc);
    bool related = futs::bisimilar(system, left, right);
    if (options.emit_json) {
        json out{{"command", "equiv"}, {"left", left}, {"right", right},
                 {"bisimilar", related}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (related ? "bisimilar" : "not-bisimilar") << "\n";
    }
    return related ? 0 : 1;
}

int cmd_check(const Options &options, const std::string &path,
              const std::string &relation_path) {
    futs::ModelDocument doc = load_document(path);
    futs::Futs system = futs::encode_document(doc);
    futs::Partition relation;
    try {
        relation = futs::parse_relation(read_file(relation_path), system.states());
    } catch (const futs::parse_error &e) {
        rethrow_positioned(relation_path, e);
    }

    std::optional<futs::BisimViolation> violation =
        futs::find_bisim_violation(system, relation);
    json witness;
    std::string witness_text;
    if (violation) {
        const auto &type = system.type().components[violation->component];
        futs::Partition top =
            futs::lift_chain(relation, system, violation->component).top();
        std::string class_text;
        if (type.depth() == 1) {
            class_text = "{";
            const auto &members = top.members(violation->lifted_block);
            for (std::size_t i = 0; i < members.size(); ++i)
                class_text += (i ? " " : "") + system.state_name(members[i]);
            class_text += "}";
        } else {
            class_text = "{";
            const auto &members = top.members(violation->lifted_block);
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i)
                    class_text += ", ";
                class_text += futs::render_continuation(
                    system.registry().at(type.depth() - 1, members[i]), system);
            }
            class_text += "}";
        }
        witness_text = "witness: states " + system.state_name(violation->x) + ", " +
                       system.state_name(violation->y) + " differ on component " +
                       std::to_string(violation->component + 1) + " label " +
                       type.labels[violation->label] + " at class " + class_text + ": " +
                       futs::to_string(violation->lhs) + " vs " +
                       futs::to_string(violation->rhs);
        witness = json{{"left", system.state_name(violation->x)},
                       {"right", system.state_name(violation->y)},
                       {"component", violation->component + 1},
                       {"label", type.labels[violation->label]},
                       {"class", class_text},
                       {"left_value", futs::to_string(violation->lhs)},
                       {"right_value", futs::to_string(violation->rhs)}};
    }

    if (options.emit_json) {
        json out{{"command", "check"}, {"holds", !violation}};
        if (violation)
            out["witness"] = witness;
        std::cout << out.dump() << "\n";
    } else if (!violation) {
        std::cout << "bisimulation" << "\n";
    } else {
        std::cout << "not-a-bisimulation" << "\n";
        if (!options.quiet)
            std::cout << witness_text << "\n";
    }
    return violation ? 1 : 0;
}

int cmd_oracle(const Options &options, const std::string &path) {
    futs::ModelDocument doc = load_document(path);
    futs::Futs system = futs::encode_document(doc);
    futs::Partition coarsest = futs::brute_force_coarsest(system, options.max_brute);
    if (options.emit_json) {
        json out{{"command", "oracle"},
                 {"kind", futs::kind_name(doc.kind)},
                 {"partition", partition_to_json(coarsest, system.states())}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << futs::serialize_partition(coarsest, system.states());
    }
    return 0;
}

int cmd_crosscheck(const Options &options, const std::string &path) {
    futs::ModelDocument doc = load_document(path);
    futs::Futs system = futs::encode_document(doc);
    const std::uint32_t n = system.state_count();

    // Relations to exercise: every partition when the model is small enough,
    // otherwise a seeded sample.
    std::vector<futs::Partition> relations;
    std::vector<std::uint32_t> carrier(n);
    for (std::uint32_t i = 0; i < n; ++i)
        carrier[i] = i;
    if (n <= options.max_brute) {
        for (const auto &assignment : futs::all_set_partitions(n))
            relations.push_back(futs::partition_from_assignment(carrier, assignment));
    } else {
        for (std::uint64_t i = 0; i < 50; ++i)
            relations.push_back(futs::random_equivalence(n, options.seed + i));
    }

    std::size_t checked = 0;
    bool agree = true;
    std::string detail;
    for (const futs::Partition &relation : relations) {
        bool futs_verdict = futs::is_bisimulation(system, relation);
        // transfer condition vs quotient construction (two routes)
        bool quotient_ok = true;
        try {
            futs::quotient_futs(system, relation);
        } catch (const futs::error &e) {
            if (e.code() != futs::errc::not_a_bisimulation)
                throw;
            quotient_ok = false;
        }
        if (quotient_ok != futs_verdict) {
            agree = false;
            detail = "quotient construction disagrees with the transfer condition on\n" +
                     futs::serialize_partition(relation, system.states());
            break;
        }
        std::optional<bool> concrete = futs::concrete_is_bisimulation(doc, relation);
        if (concrete && *concrete != futs_verdict) {
            agree = false;
            detail = "concrete notion disagrees with FuTS bisimulation on\n" +
                     futs::serialize_partition(relation, system.states());
            break;
        }
        ++checked;
    }

    bool coarsest_compared = false;
    if (agree && n <= options.max_brute) {
        coarsest_compared = true;
        futs::Partition computed = futs::coarsest_bisimulation(system);
        futs::Partition oracle = futs::brute_force_coarsest(system, options.max_brute);
        if (!(computed == oracle)) {
            agree = false;
            detail = "partition refinement disagrees with the brute-force oracle";
        } else if (std::optional<futs::Partition> concrete =
                       futs::brute_force_concrete_coarsest(doc, options.max_brute)) {
            if (!(computed == *concrete)) {
                agree = false;
                detail = "coarsest FuTS bisimulation differs from the concrete coarsest";
            }
        }
    }

    if (options.emit_json) {
        json out{{"command", "crosscheck"},
                 {"kind", futs::kind_name(doc.kind)},
                 {"relations_checked", checked},
                 {"coarsest_compared", coarsest_compared},
                 {"agree", agree}};
        if (!agree)
            out["detail"] = detail;
        std::cout << out.dump() << "\n";
    } else {
        if (!options.quiet)
            std::cout << "crosscheck " << futs::kind_name(doc.kind) << ": " << checked
                      << " relations checked"
                      << (coarsest_compared ? ", coarsest compared" : "") << "\n";
        if (!agree && !options.quiet)
            std::cout << detail << "\n";
        std::cout << (agree ? "agree" : "disagree") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_gen(const Options &options, const std::string &kind_text, std::uint32_t states,
            double density) {
    std::optional<futs::ModelKind> kind = futs::kind_from_name(kind_text);
    if (!kind)
        throw futs::error(futs::errc::bad_params, "unknown model kind '" + kind_text + "'");
    futs::GeneratorParams params;
    params.n_states = states;
    params.density = density;
    futs::ModelDocument doc = futs::random_model(*kind, options.seed, params);
    std::string text = futs::serialize_model(doc);
    if (options.emit_json) {
        json out{{"command", "gen"}, {"kind", kind_text}, {"model", text}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"FuTS bisimulation tool: minimize, compare and cross-validate "
                 "quantitative transition systems"};
    app.require_subcommand(1);
    app.fallthrough();

    Options options;
    app.add_flag("--quiet", options.quiet, "suppress informational output");
    app.add_flag("--json", options.emit_json, "machine-readable output");
    app.add_option("--seed", options.seed, "seed for generator commands");
    app.add_option("--max-brute", options.max_brute,
                   "state cap for brute-force enumeration (default 6)");

    std::string path, relation_path, left, right, kind_text;
    std::uint32_t gen_states = 5;
    double gen_density = 0.3;

    CLI::App *parse_cmd = app.add_subcommand("parse", "validate and canonicalize a model");
    parse_cmd->add_option("file", path)->required();

    CLI::App *minimize_cmd =
        app.add_subcommand("minimize", "print the coarsest partition and quotient");
    minimize_cmd->add_option("file", path)->required();

    CLI::App *equiv_cmd = app.add_subcommand("equiv", "decide bisimilarity of two states");
    equiv_cmd->add_option("file", path)->required();
    equiv_cmd->add_option("s", left)->required();
    equiv_cmd->add_option("t", right)->required();

    CLI::App *check_cmd =
        app.add_subcommand("check", "verify the transfer condition for a relation");
    check_cmd->add_option("file", path)->required();
    check_cmd->add_option("--relation", relation_path, "relation file")->required();

    CLI::App *oracle_cmd =
        app.add_subcommand("oracle", "brute-force coarsest bisimulation");
    oracle_cmd->add_option("file", path)->required();

    CLI::App *crosscheck_cmd = app.add_subcommand(
        "crosscheck", "compare the concrete notion against FuTS bisimulation");
    crosscheck_cmd->add_option("file", path)->required();

    CLI::App *gen_cmd = app.add_subcommand("gen", "generate a random model");
    gen_cmd->add_option("kind", kind_text)->required();
    gen_cmd->add_option("--states", gen_states, "number of states");
    gen_cmd->add_option("--density", gen_density, "transition density in [0,1]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        std::cerr << "futs: " << e.what() << "\n";
        return 2;
    }

    try {
        if (parse_cmd->parsed())
            return cmd_parse(options, path);
        if (minimize_cmd->parsed())
            return cmd_minimize(options, path);
        if (equiv_cmd->parsed())
            return cmd_equiv(options, path, left, right);
        if (check_cmd->parsed())
            return cmd_check(options, path, relation_path);
        if (oracle_cmd->parsed())
            return cmd_oracle(options, path);
        if (crosscheck_cmd->parsed())
            return cmd_crosscheck(options, path);
        if (gen_cmd->parsed())
            return cmd_gen(options, kind_text, gen_states, gen_density);
    } catch (const positioned_error &e) {
        std::cerr << "futs: " << e.display << "\n";
        return 2;
    } catch (const futs::error &e) {
        std::cerr << "futs: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "futs: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
