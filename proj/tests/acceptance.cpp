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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// binary exits nonzero when any criterion fails.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include "futs/bisim.hpp"
#include "futs/model_io.hpp"
#include "futs/quotient.hpp"
#include "futs/testkit.hpp"
#include "test_support.hpp"

using namespace futs;
using namespace futs::test;

namespace {

bool report(int criterion, const std::string &label, bool ok) {
    std::cout << "[acceptance] criterion " << criterion << " (" << label
              << "): " << (ok ? "PASS" : "FAIL") << std::endl;
    return ok;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string &arguments) {
    std::string command = std::string(FUTS_CLI_PATH) + " " + arguments + " 2>/dev/null";
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string &name) {
    return std::string(FUTS_MODELS_DIR) + "/" + name;
}

std::filesystem::path scratch_dir() {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "futs_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << content;
}

// Generator settings shared by the correspondence criteria.
GeneratorParams corpus_params(int index, std::uint32_t max_states) {
    GeneratorParams params;
    params.n_states = 2 + static_cast<std::uint32_t>(index) % (max_states - 1);
    const double densities[] = {0.15, 0.3, 0.5};
    params.density = densities[index % 3];
    return params;
}

bool correspondence_holds(ModelKind kind, int models, std::uint32_t max_states,
                          std::uint64_t seed_base) {
    for (int i = 0; i < models; ++i) {
        GeneratorParams params = corpus_params(i, max_states);
        ModelDocument doc = random_model(kind, seed_base + i, params);
        Futs system = encode_document(doc);
        for (int r = 0; r < 5; ++r) {
            Partition relation =
                random_equivalence(params.n_states, seed_base + 1000 * i + r);
            std::optional<bool> concrete = concrete_is_bisimulation(doc, relation);
            if (!concrete)
                return false;
            if (*concrete != is_bisimulation(system, relation))
                return false;
        }
    }
    return true;
}

const std::vector<ModelDocument> &oracle_corpus() {
    static std::vector<ModelDocument> corpus = [] {
        std::vector<ModelDocument> models;
        const ModelKind kinds[] = {ModelKind::lts, ModelKind::ctmc, ModelKind::imc,
                                   ModelKind::pa, ModelKind::ma};
        for (ModelKind kind : kinds)
            for (int i = 0; i < 100; ++i)
                models.push_back(
                    random_model(kind, 9000 + i, corpus_params(i, 6)));
        return models;
    }();
    return corpus;
}

struct Fixture {
    const char *file;
    std::string partition; // expected minimize output, frozen from the oracle
    const char *left, *right;
    bool bisimilar;
};

const std::vector<Fixture> &fixtures() {
    static std::vector<Fixture> list = {
        {"c1.ctmc", "{s0}\n{s1 s2}\n{u}\n", "s1", "s2", true},
        {"l1.lts", "{p q}\n{p1 q1 q2}\n", "p", "q", true},
        {"i1.imc", "{p}\n{p1 q1}\n{q}\n", "p", "q", false},
        {"p1.pa", "{s t}\n{u v w}\n", "s", "t", true},
        {"m1.ma", "{s t}\n{u v}\n{w}\n", "u", "v", true},
    };
    return list;
}

std::set<std::set<std::string>> canonical_blocks(const std::string &partition_text) {
    std::set<std::set<std::string>> blocks;
    std::istringstream in(partition_text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.size() < 2 || line.front() != '{' || line.back() != '}')
            continue;
        std::istringstream words(line.substr(1, line.size() - 2));
        std::set<std::string> block;
        std::string word;
        while (words >> word)
            block.insert(word);
        if (!block.empty())
            blocks.insert(std::move(block));
    }
    return blocks;
}

// The same model with the state declarations permuted; perm[i] is the new
// position of the state declared at position i.
std::string permuted_document(const std::string &path,
                              const std::vector<std::uint32_t> &perm) {
    ModelDocument doc = parse_model([&] {
        std::ifstream in(path, std::ios::binary);
        REQUIRE(in.good());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }());

    std::visit(
        [&perm](auto &model) {
            REQUIRE(perm.size() == model.states.size());
            auto renumber = [&perm](std::uint32_t s) { return perm[s]; };
            std::vector<std::string> reordered(model.states.size());
            for (std::uint32_t i = 0; i < model.states.size(); ++i)
                reordered[perm[i]] = model.states[i];
            model.states = std::move(reordered);
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, LtsModel>) {
                for (auto &t : model.transitions) {
                    t.src = renumber(t.src);
                    t.dst = renumber(t.dst);
                }
            } else if constexpr (std::is_same_v<M, CtmcModel>) {
                for (auto &t : model.transitions) {
                    t.src = renumber(t.src);
                    t.dst = renumber(t.dst);
                }
            } else if constexpr (std::is_same_v<M, ImcModel>) {
                for (auto &t : model.interactive) {
                    t.src = renumber(t.src);
                    t.dst = renumber(t.dst);
                }
                for (auto &t : model.markovian) {
                    t.src = renumber(t.src);
                    t.dst = renumber(t.dst);
                }
            } else if constexpr (std::is_same_v<M, PaModel> || std::is_same_v<M, MaModel>) {
                auto remap_steps = [&](std::vector<PaStep> &steps) {
                    for (auto &step : steps) {
                        step.src = renumber(step.src);
                        for (auto &[state, probability] : step.distribution)
                            state = renumber(state);
                        step.distribution = make_distribution(std::move(step.distribution));
                    }
                };
                if constexpr (std::is_same_v<M, PaModel>) {
                    remap_steps(model.steps);
                } else {
                    remap_steps(model.immediate);
                    for (auto &t : model.timed) {
                        t.src = renumber(t.src);
                        t.dst = renumber(t.dst);
                    }
                }
            } else {
                static_assert(std::is_same_v<M, RawFutsModel>);
            }
        },
        doc.model);
    return serialize_model(doc);
}

} // namespace

TEST_CASE("criterion 1: LTS correspondence") {
    auto start = std::chrono::steady_clock::now();
    bool ok = correspondence_holds(ModelKind::lts, 200, 8, 100);
    ok = ok && seconds_since(start) <= 60.0;
    CHECK(report(1, "lts bisimulation equivalence = FuTS bisimulation", ok));
}

TEST_CASE("criterion 2: CTMC lumping correspondence") {
    bool ok = correspondence_holds(ModelKind::ctmc, 200, 8, 200);
    ok = ok && correspondence_holds(ModelKind::dtmc, 100, 8, 250);
    CHECK(report(2, "lumping = FuTS bisimulation, exact rationals", ok));
}

TEST_CASE("criterion 3: IMC, PA and MA correspondences") {
    bool ok = correspondence_holds(ModelKind::imc, 200, 8, 300);
    ok = ok && correspondence_holds(ModelKind::pa, 200, 8, 400);
    ok = ok && correspondence_holds(ModelKind::ma, 200, 8, 500);
    CHECK(report(3, "imc/pa/ma notions = FuTS bisimulation (nested lifting)", ok));
}

TEST_CASE("criterion 4: partition refinement matches the brute-force oracle") {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const ModelDocument &doc : oracle_corpus()) {
        Futs system = encode_document(doc);
        Partition computed = coarsest_bisimulation(system);
        Partition oracle = brute_force_coarsest(system);
        if (!(computed == oracle)) {
            ok = false;
            break;
        }
    }
    ok = ok && seconds_since(start) <= 120.0;
    CHECK(report(4, "coarsest = brute force, 5 classes x 100 models", ok));
}

TEST_CASE("criterion 5: the canonical map is a homomorphism onto a minimal quotient") {
    bool ok = true;
    for (const ModelDocument &doc : oracle_corpus()) {
        Futs system = encode_document(doc);
        Partition coarsest = coarsest_bisimulation(system);
        QuotientResult quotient = quotient_futs(system, coarsest);
        if (!check_homomorphism(quotient.state_to_class, system, quotient.quotient)) {
            ok = false;
            break;
        }
        std::uint32_t classes = quotient.quotient.state_count();
        if (!(coarsest_bisimulation(quotient.quotient) ==
              Partition::identity(iota_carrier(classes)))) {
            ok = false;
            break;
        }
    }
    CHECK(report(5, "quotient homomorphism and minimality", ok));
}

TEST_CASE("criterion 6: lifting laws") {
    bool ok = true;
    TestRng rng(77);
    for (int round = 0; round < 10000 && ok; ++round) {
        std::uint32_t n = 2 + rng.below(5);
        SemiringId id = round % 2 ? SemiringId::boolean : SemiringId::nonneg_rational;
        std::uint32_t count = 1 + rng.below(6);
        std::vector<Continuation> universe;
        for (std::uint32_t i = 0; i < count; ++i)
            universe.push_back(random_level1(rng, n, id));

        Partition fine = random_equivalence(n, rng.next());
        Partition coarse = random_coarsening(rng, fine);

        // well-formed output partition
        Partition lifted = lift_once(fine, universe);
        if (lifted.carrier() != iota_carrier(count)) {
            ok = false;
            break;
        }
        std::size_t covered = 0;
        for (const auto &[block_id, members] : lifted.blocks())
            covered += members.size();
        ok = ok && covered == count;

        // identity lifting groups exactly the equal continuations
        Partition by_equality = lift_once(Partition::identity(iota_carrier(n)), universe);
        for (std::uint32_t i = 0; i < count && ok; ++i)
            for (std::uint32_t j = 0; j < count && ok; ++j)
                ok = by_equality.same_block(i, j) == (universe[i] == universe[j]);

        // monotonicity under refinement
        ok = ok && refines(lifted, lift_once(coarse, universe));
    }
    CHECK(report(6, "lift_once well-formed, identity grouping, monotone", ok));
}

TEST_CASE("criterion 7: bundled fixtures minimize to the expected partitions") {
    bool ok = true;
    for (const Fixture &f : fixtures()) {
        RunResult quiet = run_cli("minimize " + fixture(f.file) + " --quiet");
        if (quiet.exit_code != 0 || quiet.output != f.partition)
            ok = false;
        RunResult full = run_cli("minimize " + fixture(f.file));
        if (full.exit_code != 0 ||
            full.output.substr(0, f.partition.size() + 1) != f.partition + "\n")
            ok = false;
        RunResult cross = run_cli("crosscheck " + fixture(f.file));
        if (cross.exit_code != 0)
            ok = false;
    }
    CHECK(report(7, "fixture minimization byte-exact; crosscheck clean", ok));
}

TEST_CASE("criterion 8: dtmc stochasticity is enforced") {
    bool ok = true;
    try {
        std::ifstream in(fixture("nonstochastic.dtmc"), std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        parse_model(buffer.str());
        ok = false;
    } catch (const parse_error &e) {
        ok = e.code() == errc::not_stochastic;
    }
    RunResult run = run_cli("parse " + fixture("nonstochastic.dtmc"));
    ok = ok && run.exit_code == 2;
    CHECK(report(8, "non-stochastic dtmc rejected with NotStochastic", ok));
}

TEST_CASE("criterion 9: CLI output is deterministic and order independent") {
    bool ok = true;
    std::filesystem::path dir = scratch_dir();
    write_file(dir / "identity.rel", "");

    for (const Fixture &f : fixtures()) {
        std::string file = fixture(f.file);
        const std::string commands[] = {
            "parse " + file,
            "minimize " + file,
            "oracle " + file,
            "crosscheck " + file,
            "equiv " + file + " " + f.left + " " + f.right,
            "check " + file + " --relation " + (dir / "identity.rel").string(),
            "minimize " + file + " --json",
        };
        for (const std::string &command : commands) {
            RunResult first = run_cli(command);
            for (int round = 0; round < 2; ++round) {
                RunResult again = run_cli(command);
                if (again.exit_code != first.exit_code || again.output != first.output)
                    ok = false;
            }
        }

        // permuting the state declarations renames blocks but nothing else
        RunResult original = run_cli("minimize " + file + " --quiet");
        RunResult equiv_original =
            run_cli("equiv " + file + " " + f.left + " " + f.right);
        if (equiv_original.exit_code != (f.bisimilar ? 0 : 1))
            ok = false;

        std::uint32_t n = static_cast<std::uint32_t>(
            parse_model([&] {
                std::ifstream in(file, std::ios::binary);
                std::ostringstream buffer;
                buffer << in.rdbuf();
                return buffer.str();
            }()).state_names().size());
        std::vector<std::uint32_t> reversal(n), rotation(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            reversal[i] = n - 1 - i;
            rotation[i] = (i + 1) % n;
        }
        int index = 0;
        for (const auto &perm : {reversal, rotation}) {
            std::filesystem::path permuted_path =
                dir / ("perm" + std::to_string(index++) + "_" + f.file);
            write_file(permuted_path, permuted_document(file, perm));
            RunResult permuted = run_cli("minimize " + permuted_path.string() + " --quiet");
            if (canonical_blocks(original.output) != canonical_blocks(permuted.output))
                ok = false;

            RunResult equiv_permuted =
                run_cli("equiv " + permuted_path.string() + " " + f.left + " " + f.right);
            if (equiv_original.exit_code != equiv_permuted.exit_code ||
                equiv_original.output != equiv_permuted.output)
                ok = false;

            if (run_cli("crosscheck " + permuted_path.string()).exit_code != 0)
                ok = false;
        }
    }

    // generator determinism
    for (const char *kind : {"lts", "ctmc", "pa", "ma"}) {
        RunResult first = run_cli(std::string("gen ") + kind + " --seed 5 --states 5");
        RunResult second = run_cli(std::string("gen ") + kind + " --seed 5 --states 5");
        if (first.output != second.output || first.output.empty())
            ok = false;
    }
    CHECK(report(9, "byte-identical runs; permutation invariance", ok));
}
