// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <utility>

#include "econofock/scenario.hpp"

namespace econofock {

namespace {

// One preset per model mechanism: pair creation under QE, gold-backed
// superposition collapse, a microloan with repayment, informal lending with
// enforcement pressure, a market swap chain, and debt-free earned money.

constexpr const char* qe_pair_rabi = R"json({
  "schema_version": 1,
  "name": "qe_pair_rabi",
  "basis": {"money_modes": 1, "debt_modes": 1},
  "energies": {"money": [0.0], "debt": [0.0]},
  "terms": [
    {"type": "qe", "amplitude": 1.0, "pairs": [[0, 0]]}
  ],
  "initial_state": {"kind": "vacuum"},
  "grid": {"t_start": 0.0, "t_end": 3.141592653589793, "n_steps": 1000},
  "observables": ["n_money", "n_debt", "charge", "energy", "norm"],
  "seed": 1,
  "outputs": ["csv", "jsonl"]
})json";

constexpr const char* gold_backed_collapse = R"json({
  "schema_version": 1,
  "name": "gold_backed_collapse",
  "register": {"qubits": ["asset"]},
  "terms": [],
  "initial_state": {
    "kind": "asset_superposition",
    "a": 0.5477225575051661,
    "b": 0.8366600265340756
  },
  "grid": {"t_start": 0.0, "t_end": 1.0, "n_steps": 10},
  "observables": ["prob_up_asset", "norm", "energy"],
  "seed": 42,
  "outputs": ["csv", "jsonl"],
  "measure": {"target": "asset", "trials": 10000}
})json";

constexpr const char* microloan = R"json({
  "schema_version": 1,
  "name": "microloan",
  "basis": {"money_modes": 1, "debt_modes": 1},
  "energies": {"money": [1.0], "debt": [-1.0]},
  "terms": [
    {"type": "free"},
    {"type": "exciton", "coupling": [[0.5]]}
  ],
  "initial_state": {"kind": "loan_pair", "money_mode": 0, "debt_mode": 0},
  "grid": {"t_start": 0.0, "t_end": 10.0, "n_steps": 2000},
  "observables": ["n_money", "n_debt", "charge", "exciton_count", "entropy_money", "energy", "norm"],
  "seed": 7,
  "outputs": ["csv", "jsonl"],
  "events": [
    {"time": 5.0, "kind": "repayment", "money_mode": 0, "debt_mode": 0}
  ]
})json";

constexpr const char* informal_lending = R"json({
  "schema_version": 1,
  "name": "informal_lending",
  "basis": {"money_modes": 1, "debt_modes": 1},
  "energies": {"money": [1.0], "debt": [-1.0]},
  "terms": [
    {"type": "free"},
    {"type": "exciton", "coupling": [[0.5]]},
    {"type": "viol", "delta_pr": 2.0, "g": 1.0},
    {"type": "perturb",
     "profit": {"kind": "linear_ramp", "slope": 0.05},
     "interest": {"kind": "linear_ramp", "slope": 0.1}}
  ],
  "initial_state": {"kind": "loan_pair", "money_mode": 0, "debt_mode": 0},
  "grid": {"t_start": 0.0, "t_end": 10.0, "n_steps": 2000},
  "observables": ["n_money", "n_debt", "charge", "exciton_count", "energy", "norm"],
  "seed": 11,
  "outputs": ["csv", "jsonl"]
})json";

constexpr const char* market_exchange = R"json({
  "schema_version": 1,
  "name": "market_exchange",
  "basis": {"money_modes": 3, "debt_modes": 0},
  "energies": {"money": [0.0, 0.0, 0.0], "debt": []},
  "terms": [
    {"type": "exchange", "amplitude": 0.5, "swaps": [["m0", "m1"], ["m1", "m2"]]}
  ],
  "initial_state": {"kind": "single_money", "mode": 0},
  "grid": {"t_start": 0.0, "t_end": 10.0, "n_steps": 2000},
  "observables": ["n_money_0", "n_money_1", "n_money_2", "n_money", "charge", "energy", "norm"],
  "seed": 3,
  "outputs": ["csv", "jsonl"]
})json";

constexpr const char* earned_money = R"json({
  "schema_version": 1,
  "name": "earned_money",
  "basis": {"money_modes": 1, "debt_modes": 1},
  "energies": {"money": [1.0], "debt": [-1.0]},
  "terms": [
    {"type": "free"}
  ],
  "initial_state": {"kind": "single_money", "mode": 0},
  "grid": {"t_start": 0.0, "t_end": 10.0, "n_steps": 1000},
  "observables": ["n_money", "n_debt", "charge", "exciton_count", "energy", "norm"],
  "seed": 5,
  "outputs": ["csv", "jsonl"]
})json";

constexpr std::array<std::pair<const char*, const char*>, 6> presets = {{
    {"qe_pair_rabi", qe_pair_rabi},
    {"gold_backed_collapse", gold_backed_collapse},
    {"microloan", microloan},
    {"informal_lending", informal_lending},
    {"market_exchange", market_exchange},
    {"earned_money", earned_money},
}};

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(presets.size());
    for (const auto& [name, text] : presets) {
        names.emplace_back(name);
    }
    return names;
}

std::string preset_text(const std::string& name) {
    for (const auto& [preset_name, text] : presets) {
        if (name == preset_name) return text;
    }
    fail(errc::unknown_label,
         "no preset named '" + name + "'; run 'presets list' for the catalog");
}

}  // namespace econofock
