#include "doctest.h"

#include "rlvqc/env/environment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace rlvqc;
using namespace rlvqc::env;
using problems::Graph;
using problems::ProblemTag;

namespace {

problems::QuboInstance edge_maxcut() {
    return problems::maxcut_qubo(Graph{2, {{0, 1}}});
}

problems::QuboInstance triangle_maxcut() {
    return problems::maxcut_qubo(Graph{3, {{0, 1}, {0, 2}, {1, 2}}});
}

EnvConfig exact_config(EnvMode mode, int n, std::size_t pairs) {
    EnvConfig cfg;
    cfg.mode = mode;
    cfg.exact_expectation = true;
    cfg.beta = resolve_beta(mode, pairs);
    cfg.max_ep_len = max_episode_steps(mode, n);
    return cfg;
}

}  // namespace

TEST_CASE("action space sizes") {
    CHECK(enumerate_actions(EnvMode::Global, 3, {}).actions.size() == 36);
    CHECK(enumerate_actions(EnvMode::Global, 8, {}).actions.size() == 276);
    CHECK(enumerate_actions(EnvMode::Block, 8, {{0, 1}}).actions.size() == 15);
    CHECK_THROWS_AS(enumerate_actions(EnvMode::Global, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_actions(EnvMode::Block, 4, {}), std::invalid_argument);
}

TEST_CASE("action ordering is axis-major, deterministic") {
    const auto space = enumerate_actions(EnvMode::Global, 3, {});
    // first 3n entries: single-qubit x, then y, then z
    CHECK(space.actions[0] == ActionDescriptor{false, sim::Axis::X, sim::Axis::X, 0, -1});
    CHECK(space.actions[3] == ActionDescriptor{false, sim::Axis::Y, sim::Axis::Y, 0, -1});
    CHECK(space.actions[8] == ActionDescriptor{false, sim::Axis::Z, sim::Axis::Z, 2, -1});
    // first two-qubit entry: (x, x) on the first pair
    CHECK(space.actions[9] == ActionDescriptor{true, sim::Axis::X, sim::Axis::X, 0, 1});
    CHECK(action_name(space.actions[9]) == "rxx 0 1");
}

TEST_CASE("interacting pairs from the qubo couplings") {
    const auto pairs = interacting_pairs(triangle_maxcut());
    CHECK(pairs == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("instantiate_block") {
    const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    SUBCASE("one abstract gate, five pairs") {
        const auto c = instantiate_block({{true, sim::Axis::Z, sim::Axis::Z, 0, 1}}, pairs, 4);
        CHECK(c.gates.size() == 5);
        CHECK(c.params.size() == 5);
    }
    SUBCASE("three abstract gates, five pairs, block-gate-major") {
        const std::vector<ActionDescriptor> gates{
            {true, sim::Axis::X, sim::Axis::Y, 0, 1},
            {false, sim::Axis::Y, sim::Axis::Y, 0, -1},
            {true, sim::Axis::Z, sim::Axis::Z, 0, 1},
        };
        const auto c = instantiate_block(gates, pairs, 4);
        CHECK(c.gates.size() == 15);
        CHECK(c.params.size() == 15);
        for (int k = 0; k < 5; ++k) CHECK(c.gates[static_cast<std::size_t>(k)].kind == sim::GateKind::Rab);
        for (int k = 5; k < 10; ++k) CHECK(c.gates[static_cast<std::size_t>(k)].kind == sim::GateKind::Ry);
    }
    SUBCASE("role mapping") {
        const auto c = instantiate_block({{false, sim::Axis::X, sim::Axis::X, 0, -1}},
                                         {{0, 2}, {1, 2}}, 3);
        REQUIRE(c.gates.size() == 2);
        CHECK(c.gates[0].qubits[0] == 0);
        CHECK(c.gates[1].qubits[0] == 1);
    }
    CHECK_THROWS_AS(instantiate_block({}, {}, 3), std::invalid_argument);
}

TEST_CASE("episode step caps") {
    CHECK(max_episode_steps(EnvMode::Global, 8) == 16);
    CHECK(max_episode_steps(EnvMode::Global, 16) == 32);
    CHECK(max_episode_steps(EnvMode::Block, 8) == 5);
    CHECK(max_episode_steps(EnvMode::Block, 12) == 5);
}

TEST_CASE("beta resolution") {
    CHECK(resolve_beta(EnvMode::Global, 10) == doctest::Approx(0.1));
    CHECK(resolve_beta(EnvMode::Block, 10) == doctest::Approx(0.01));
}

TEST_CASE("expectation estimators") {
    const auto qubo = edge_maxcut();
    const auto energies = problems::energy_table(qubo);
    SUBCASE("basis state gives the exact energy for any shot count") {
        sim::Circuit c;  // |00>
        c.n_qubits = 2;
        Rng rng(3);
        CHECK(estimate_expectation(c, energies, 17, rng) == doctest::Approx(qubo.energy(0)));
    }
    SUBCASE("uniform state on the single edge averages to -0.5") {
        const auto c = sim::Circuit::hadamard_layer(2);
        CHECK(exact_expectation(c, energies) == doctest::Approx(-0.5));
    }
    SUBCASE("fixed seed determinism") {
        const auto c = sim::Circuit::hadamard_layer(2);
        Rng a(9), b(9);
        CHECK(estimate_expectation(c, energies, 250, a) ==
              estimate_expectation(c, energies, 250, b));
    }
}

TEST_CASE("reset state") {
    CircuitEnv env(edge_maxcut(), exact_config(EnvMode::Global, 2, 1), 17);
    const auto obs = env.reset();
    REQUIRE(obs.size() == 4);
    for (double p : obs) CHECK(p == doctest::Approx(0.25));  // Hadamard layer
    CHECK(env.step_count() == 0);
    CHECK(env.patience() == 3);
    CHECK(env.best_episode_reward() == -std::numeric_limits<double>::infinity());
    CHECK(env.circuit().gates.size() == 2);  // H on each qubit
    for (const auto& g : env.circuit().gates) CHECK(g.kind == sim::GateKind::H);
}

TEST_CASE("global step appends one gate and reward matches the trace") {
    CircuitEnv env(edge_maxcut(), exact_config(EnvMode::Global, 2, 1), 17);
    env.reset();
    const auto out = env.step(0);  // rx on qubit 0
    CHECK(env.circuit().gates.size() == 3);
    CHECK(env.circuit().params.size() == 1);
    const auto& tr = env.traces().back();
    // reward = -expectation - beta * depth, exactly
    CHECK(tr.reward == doctest::Approx(-tr.expectation - 0.1 * tr.depth));
    CHECK(out.reward == tr.reward);
    CHECK_THROWS_AS(env.step(999), std::out_of_range);
}

TEST_CASE("block step instantiates every pair with fresh parameters") {
    const auto qubo = triangle_maxcut();
    CircuitEnv env(qubo, exact_config(EnvMode::Block, 3, 3), 23);
    env.reset();
    env.step(6);  // first two-qubit block action (rxx)
    CHECK(env.circuit().gates.size() == 3 + 3);  // H layer + one gate per pair
    CHECK(env.circuit().params.size() == 3);
    env.step(0);  // single-qubit block action on role 0
    CHECK(env.circuit().gates.size() == 3 + 6);
    CHECK(env.circuit().params.size() == 6);
    // earlier parameters kept their tuned values (not reset to zero)
    const auto& hist = env.history();
    REQUIRE(hist.size() == 2);
    for (std::size_t k = 0; k < 3; ++k)
        CHECK(hist[1].circuit.params[k] == hist[0].circuit.params[k]);
}

TEST_CASE("episodes respect patience and the step cap") {
    // drive many episodes with a fixed action; patience rules must hold
    CircuitEnv env(triangle_maxcut(), exact_config(EnvMode::Global, 3, 3), 31);
    Rng arng(5);
    for (int episode = 0; episode < 20; ++episode) {
        env.reset();
        bool done = false;
        int steps = 0;
        while (!done) {
            const int a = static_cast<int>(arng.uniform_index(
                static_cast<std::uint64_t>(env.action_count())));
            done = env.step(a).done;
            ++steps;
        }
        CHECK(steps <= max_episode_steps(EnvMode::Global, 3));
        CHECK(steps >= 3);  // patience 3 admits no shorter episode
        CHECK((env.patience() == 0 || env.step_count() == env.config().max_ep_len));
    }
    // trace-level patience transitions match the rule
    double best = -std::numeric_limits<double>::infinity();
    int patience = 3;
    int episode = -1;
    for (const auto& tr : env.traces()) {
        if (tr.episode != episode) {
            episode = tr.episode;
            best = -std::numeric_limits<double>::infinity();
            patience = 3;
        }
        patience += tr.reward < best ? -1 : 1;
        patience = std::clamp(patience, 0, 3);
        best = std::max(best, tr.reward);
        CHECK(tr.patience == patience);
        CHECK(tr.done == (patience == 0 || tr.step_in_episode == env.config().max_ep_len));
    }
    CHECK_THROWS_AS(env.step(0), std::logic_error);  // terminal without reset
}

TEST_CASE("exact-mode expectation is non-increasing within an episode") {
    for (EnvMode mode : {EnvMode::Global, EnvMode::Block}) {
        const auto qubo = triangle_maxcut();
        CircuitEnv env(qubo, exact_config(mode, 3, 3), 77);
        Rng arng(99);
        for (int episode = 0; episode < 6; ++episode) {
            env.reset();
            double prev = exact_expectation(sim::Circuit::hadamard_layer(3),
                                            env.energy_table());
            bool done = false;
            while (!done) {
                const int a = static_cast<int>(arng.uniform_index(
                    static_cast<std::uint64_t>(env.action_count())));
                done = env.step(a).done;
                const double e = env.traces().back().expectation;
                CHECK(e <= prev + 1e-12);  // zero-angle start can only improve
                prev = e;
            }
        }
    }
}

TEST_CASE("shot observations are count multiples summing to one") {
    EnvConfig cfg = exact_config(EnvMode::Block, 2, 1);
    cfg.exact_expectation = false;
    cfg.n_runs = 640;
    CircuitEnv env(edge_maxcut(), cfg, 41);
    auto obs = env.reset();
    for (int s = 0; s < 3; ++s) {
        std::uint64_t total = 0;
        for (double p : obs) {
            const double scaled = p * cfg.n_runs;
            const auto count = static_cast<std::uint64_t>(std::llround(scaled));
            CHECK(p == static_cast<double>(count) / cfg.n_runs);  // exact rational
            total += count;
        }
        CHECK(total == static_cast<std::uint64_t>(cfg.n_runs));
        obs = env.step(s % env.action_count()).obs;
    }
}

TEST_CASE("finalize") {
    const auto qubo = edge_maxcut();
    const auto energies = problems::energy_table(qubo);
    EnvConfig cfg = exact_config(EnvMode::Global, 2, 1);

    SUBCASE("single-circuit history returns that circuit, tuned") {
        sim::Circuit c = sim::Circuit::hadamard_layer(2);
        c.push_parameterized(sim::GateInstance::rzz(0, 1, 0), 0.3);
        c.push_parameterized(sim::GateInstance::rot(sim::Axis::X, 0, 0), 0.1);
        c.push_parameterized(sim::GateInstance::rot(sim::Axis::X, 1, 0), 0.1);
        const double before = exact_expectation(c, energies);
        Rng rng(1);
        const auto fin = finalize({{c, -before, before, 0, 1}}, energies, cfg, 1000, rng);
        CHECK(fin.history_index == 0);
        CHECK(fin.estimate <= before + 1e-12);
        CHECK(fin.estimate <= -0.99);  // the tuned layer solves the 2-qubit cut
    }
    SUBCASE("reward ties go to the earliest circuit") {
        sim::Circuit a = sim::Circuit::hadamard_layer(2);
        a.push_parameterized(sim::GateInstance::rot(sim::Axis::X, 0, 0), 0.25);
        sim::Circuit b = sim::Circuit::hadamard_layer(2);
        b.push_parameterized(sim::GateInstance::rot(sim::Axis::Y, 1, 0), 0.5);
        Rng rng(2);
        const auto fin = finalize({{a, 1.0, -0.5, 0, 1}, {b, 1.0, -0.5, 0, 2}}, energies, cfg,
                                  100, rng);
        CHECK(fin.history_index == 0);
        REQUIRE(fin.circuit.gates.size() == 3);
        CHECK(fin.circuit.gates[2].kind == sim::GateKind::Rx);
    }
    SUBCASE("empty history rejected") {
        Rng rng(3);
        CHECK_THROWS_AS(finalize({}, energies, cfg, 10, rng), std::invalid_argument);
    }
    SUBCASE("shot-mode fine-tune never loses more than noise") {
        EnvConfig noisy = cfg;
        noisy.exact_expectation = false;
        noisy.n_runs = 1000;
        sim::Circuit c = sim::Circuit::hadamard_layer(2);
        c.push_parameterized(sim::GateInstance::rzz(0, 1, 0), 0.9);
        Rng prng(4);
        const double pre = estimate_expectation(c, energies, noisy.n_runs, prng);
        Rng rng(5);
        const auto fin = finalize({{c, 0.0, pre, 0, 1}}, energies, noisy, 1000, rng);
        // 3 sigma of a +/-1-valued energy estimate at 1000 shots
        CHECK(fin.estimate <= pre + 3.0 * (1.0 / std::sqrt(1000.0)));
    }
}
