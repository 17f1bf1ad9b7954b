// Copyright 2026 The Econofock Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "econofock/scenario.hpp"

namespace econofock {

using nlohmann::json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

namespace {

struct Issues {
    std::vector<ValidationIssue>* out;

    void add(std::string path, std::string message) {
        out->push_back({std::move(path), std::move(message)});
    }
    bool any() const { return !out->empty(); }
};

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed, Issues& issues) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key())) {
            issues.add(path.empty() ? it.key() : path + "." + it.key(), "unknown key");
        }
    }
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

std::optional<double> as_number(const json& j, const std::string& path, Issues& issues) {
    if (!j.is_number()) {
        issues.add(path, "expected a number");
        return std::nullopt;
    }
    return j.get<double>();
}

std::optional<std::size_t> as_count(const json& j, const std::string& path, Issues& issues) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        issues.add(path, "expected a nonnegative integer");
        return std::nullopt;
    }
    return static_cast<std::size_t>(j.get<long long>());
}

std::optional<std::string> as_string(const json& j, const std::string& path,
                                     Issues& issues) {
    if (!j.is_string()) {
        issues.add(path, "expected a string");
        return std::nullopt;
    }
    return j.get<std::string>();
}

std::optional<cplx> as_complex(const json& j, const std::string& path, Issues& issues) {
    if (j.is_number()) return cplx{j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return cplx{j[0].get<double>(), j[1].get<double>()};
    }
    issues.add(path, "expected a number or [re, im] pair");
    return std::nullopt;
}

std::optional<Schedule> parse_schedule(const json& j, const std::string& path,
                                       Issues& issues) {
    if (!j.is_object()) {
        issues.add(path, "expected a schedule object");
        return std::nullopt;
    }
    const auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
        issues.add(path + ".kind", "schedule kind is required");
        return std::nullopt;
    }
    const std::string kind = kind_it->get<std::string>();
    if (kind == "constant") {
        check_keys(j, path, {"kind", "value"}, issues);
        if (!j.contains("value")) {
            issues.add(path + ".value", "required");
            return std::nullopt;
        }
        const auto value = as_number(j["value"], path + ".value", issues);
        if (!value) return std::nullopt;
        return Schedule::constant(*value);
    }
    if (kind == "linear_ramp") {
        check_keys(j, path, {"kind", "slope"}, issues);
        if (!j.contains("slope")) {
            issues.add(path + ".slope", "required");
            return std::nullopt;
        }
        const auto slope = as_number(j["slope"], path + ".slope", issues);
        if (!slope) return std::nullopt;
        return Schedule::linear_ramp(*slope);
    }
    if (kind == "exponential") {
        check_keys(j, path, {"kind", "a", "b"}, issues);
        if (!j.contains("a") || !j.contains("b")) {
            issues.add(path, "exponential schedule needs 'a' and 'b'");
            return std::nullopt;
        }
        const auto a = as_number(j["a"], path + ".a", issues);
        const auto b = as_number(j["b"], path + ".b", issues);
        if (!a || !b) return std::nullopt;
        return Schedule::exponential(*a, *b);
    }
    if (kind == "piecewise_linear") {
        check_keys(j, path, {"kind", "points"}, issues);
        if (!j.contains("points") || !j["points"].is_array() || j["points"].empty()) {
            issues.add(path + ".points", "nonempty array of [t, value] pairs required");
            return std::nullopt;
        }
        std::vector<std::pair<double, double>> points;
        for (std::size_t i = 0; i < j["points"].size(); ++i) {
            const json& p = j["points"][i];
            const std::string ppath = path + ".points[" + std::to_string(i) + "]";
            if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
                issues.add(ppath, "expected a [t, value] pair");
                return std::nullopt;
            }
            points.emplace_back(p[0].get<double>(), p[1].get<double>());
        }
        if (!std::is_sorted(points.begin(), points.end(),
                            [](const auto& a, const auto& b) { return a.first < b.first; })) {
            issues.add(path + ".points", "points must ascend in t");
            return std::nullopt;
        }
        return Schedule::piecewise_linear(std::move(points));
    }
    issues.add(path + ".kind",
               "unknown schedule kind '" + kind +
                   "' (valid: constant, linear_ramp, exponential, piecewise_linear)");
    return std::nullopt;
}

void check_initial_condition(const Schedule& schedule, const std::string& path,
                             Issues& issues) {
    const double at_zero = schedule.value(0.0);
    if (std::abs(at_zero) > 1e-12) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%g", at_zero);
        issues.add(path, std::string("schedule has value(0) = ") + buf +
                             "; perturbations require the initial condition value(0) = 0");
    }
}

std::vector<Schedule> parse_schedule_list(const json& j, const std::string& path,
                                          std::size_t mode_count, Issues& issues) {
    std::vector<Schedule> schedules;
    if (j.is_array()) {
        if (j.size() != mode_count) {
            issues.add(path, "expected one schedule per mode (" +
                                 std::to_string(mode_count) + ")");
            return schedules;
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string spath = path + "[" + std::to_string(i) + "]";
            if (auto s = parse_schedule(j[i], spath, issues)) {
                check_initial_condition(*s, spath, issues);
                schedules.push_back(std::move(*s));
            }
        }
        return schedules;
    }
    // A single schedule broadcasts to every mode.
    if (auto s = parse_schedule(j, path, issues)) {
        check_initial_condition(*s, path, issues);
        schedules.assign(mode_count, *s);
    }
    return schedules;
}

std::optional<ModeId> parse_mode_ref(const json& j, const std::string& path,
                                     std::size_t m, std::size_t d, Issues& issues) {
    const auto text = as_string(j, path, issues);
    if (!text) return std::nullopt;
    if (text->size() < 2 || (text->front() != 'm' && text->front() != 'd')) {
        issues.add(path, "mode reference must look like 'm0' or 'd1'");
        return std::nullopt;
    }
    std::size_t index = 0;
    for (std::size_t i = 1; i < text->size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>((*text)[i]))) {
            issues.add(path, "mode reference must look like 'm0' or 'd1'");
            return std::nullopt;
        }
        index = index * 10 + static_cast<std::size_t>((*text)[i] - '0');
    }
    const bool is_money = text->front() == 'm';
    if ((is_money && index >= m) || (!is_money && index >= d)) {
        issues.add(path, "mode '" + *text + "' does not exist in this basis");
        return std::nullopt;
    }
    return is_money ? money_mode(index) : debt_mode(index);
}

std::optional<TermSpec> parse_term(const json& j, const std::string& path, std::size_t m,
                                   std::size_t d, Issues& issues) {
    if (!j.is_object()) {
        issues.add(path, "expected a term object");
        return std::nullopt;
    }
    const auto type_it = j.find("type");
    if (type_it == j.end() || !type_it->is_string()) {
        issues.add(path + ".type", "term type is required");
        return std::nullopt;
    }
    const std::string type = type_it->get<std::string>();
    TermSpec term;

    if (type == "free") {
        check_keys(j, path, {"type"}, issues);
        term.type = TermSpec::Type::free;
        return term;
    }
    if (type == "qe") {
        check_keys(j, path, {"type", "amplitude", "pairs"}, issues);
        term.type = TermSpec::Type::qe;
        term.amplitude = 1.0;
        if (j.contains("amplitude")) {
            if (auto a = as_number(j["amplitude"], path + ".amplitude", issues)) {
                term.amplitude = *a;
            }
        }
        if (!j.contains("pairs") || !j["pairs"].is_array() || j["pairs"].empty()) {
            issues.add(path + ".pairs", "nonempty array of [money, debt] pairs required");
            return std::nullopt;
        }
        for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
            const json& p = j["pairs"][i];
            const std::string ppath = path + ".pairs[" + std::to_string(i) + "]";
            if (!p.is_array() || p.size() != 2) {
                issues.add(ppath, "expected a [money_mode, debt_mode] pair");
                continue;
            }
            const auto k = as_count(p[0], ppath + "[0]", issues);
            const auto q = as_count(p[1], ppath + "[1]", issues);
            if (!k || !q) continue;
            if (*k >= m) issues.add(ppath + "[0]", "money mode out of range");
            if (*q >= d) issues.add(ppath + "[1]", "debt mode out of range");
            term.pairs.emplace_back(*k, *q);
        }
        return term;
    }
    if (type == "exciton") {
        check_keys(j, path, {"type", "coupling"}, issues);
        term.type = TermSpec::Type::exciton;
        if (!j.contains("coupling") || !j["coupling"].is_array() ||
            j["coupling"].size() != m) {
            issues.add(path + ".coupling",
                       "expected " + std::to_string(m) + " rows (one per money mode)");
            return std::nullopt;
        }
        term.coupling = CouplingMatrix::zero(m, d);
        for (std::size_t k = 0; k < m; ++k) {
            const json& row = j["coupling"][k];
            const std::string rpath = path + ".coupling[" + std::to_string(k) + "]";
            if (!row.is_array() || row.size() != d) {
                issues.add(rpath, "expected " + std::to_string(d) +
                                      " entries (one per debt mode)");
                continue;
            }
            for (std::size_t q = 0; q < d; ++q) {
                if (auto u = as_complex(row[q], rpath + "[" + std::to_string(q) + "]",
                                        issues)) {
                    term.coupling.entries[k * d + q] = *u;
                }
            }
        }
        return term;
    }
    if (type == "viol") {
        check_keys(j, path, {"type", "delta_pr", "g", "overrides"}, issues);
        term.type = TermSpec::Type::viol;
        if (!j.contains("delta_pr")) {
            issues.add(path + ".delta_pr", "required");
        } else if (auto v = as_number(j["delta_pr"], path + ".delta_pr", issues)) {
            if (*v < 0.0) {
                issues.add(path + ".delta_pr", "must be >= 0");
            } else {
                term.viol.delta_pr = *v;
            }
        }
        term.viol.g_viol = 1.0;
        if (j.contains("g")) {
            if (auto g = as_number(j["g"], path + ".g", issues)) {
                if (*g < 0.0) {
                    issues.add(path + ".g", "must be >= 0");
                } else {
                    term.viol.g_viol = *g;
                }
            }
        }
        if (j.contains("overrides")) {
            if (!j["overrides"].is_array()) {
                issues.add(path + ".overrides", "expected an array of [k, q, value]");
            } else {
                for (std::size_t i = 0; i < j["overrides"].size(); ++i) {
                    const json& o = j["overrides"][i];
                    const std::string opath =
                        path + ".overrides[" + std::to_string(i) + "]";
                    if (!o.is_array() || o.size() != 3) {
                        issues.add(opath, "expected [money_mode, debt_mode, value]");
                        continue;
                    }
                    const auto k = as_count(o[0], opath + "[0]", issues);
                    const auto q = as_count(o[1], opath + "[1]", issues);
                    const auto v = as_number(o[2], opath + "[2]", issues);
                    if (!k || !q || !v) continue;
                    if (*k >= m) issues.add(opath + "[0]", "money mode out of range");
                    if (*q >= d) issues.add(opath + "[1]", "debt mode out of range");
                    if (*v < 0.0) issues.add(opath + "[2]", "must be >= 0");
                    term.viol.overrides[{*k, *q}] = *v;
                }
            }
        }
        return term;
    }
    if (type == "perturb") {
        check_keys(j, path, {"type", "profit", "interest"}, issues);
        term.type = TermSpec::Type::perturb;
        if (m > 0) {
            if (!j.contains("profit")) {
                issues.add(path + ".profit", "required when money modes exist");
            } else {
                term.profit = parse_schedule_list(j["profit"], path + ".profit", m, issues);
            }
        }
        if (d > 0) {
            if (!j.contains("interest")) {
                issues.add(path + ".interest", "required when debt modes exist");
            } else {
                term.interest =
                    parse_schedule_list(j["interest"], path + ".interest", d, issues);
            }
        }
        return term;
    }
    if (type == "exchange") {
        check_keys(j, path, {"type", "amplitude", "swaps"}, issues);
        term.type = TermSpec::Type::exchange;
        term.amplitude = 1.0;
        if (j.contains("amplitude")) {
            if (auto a = as_number(j["amplitude"], path + ".amplitude", issues)) {
                term.amplitude = *a;
            }
        }
        if (!j.contains("swaps") || !j["swaps"].is_array() || j["swaps"].empty()) {
            issues.add(path + ".swaps", "nonempty array of mode pairs required");
            return std::nullopt;
        }
        for (std::size_t i = 0; i < j["swaps"].size(); ++i) {
            const json& s = j["swaps"][i];
            const std::string spath = path + ".swaps[" + std::to_string(i) + "]";
            if (!s.is_array() || s.size() != 2) {
                issues.add(spath, "expected a pair like [\"m0\", \"m1\"]");
                continue;
            }
            const auto lhs = parse_mode_ref(s[0], spath + "[0]", m, d, issues);
            const auto rhs = parse_mode_ref(s[1], spath + "[1]", m, d, issues);
            if (!lhs || !rhs) continue;
            if (*lhs == *rhs) {
                issues.add(spath, "swap needs two distinct modes");
                continue;
            }
            term.swaps.emplace_back(*lhs, *rhs);
        }
        return term;
    }
    issues.add(path + ".type",
               "unknown term type '" + type +
                   "' (valid: free, qe, exciton, viol, perturb, exchange)");
    return std::nullopt;
}

std::optional<InitialStateSpec> parse_initial_state(const json& j, const std::string& path,
                                                    const ScenarioConfig& config,
                                                    Issues& issues) {
    if (!j.is_object()) {
        issues.add(path, "expected an object");
        return std::nullopt;
    }
    const auto kind_it = j.find("kind");
    if (kind_it == j.end() || !kind_it->is_string()) {
        issues.add(path + ".kind", "initial state kind is required");
        return std::nullopt;
    }
    const std::string kind = kind_it->get<std::string>();
    InitialStateSpec spec;

    const auto need_fock = [&](const char* what) {
        if (config.is_register) {
            issues.add(path + ".kind",
                       std::string(what) + " requires a Fock basis, not a register");
            return false;
        }
        return true;
    };
    const auto need_register = [&](const char* what) {
        if (!config.is_register) {
            issues.add(path + ".kind",
                       std::string(what) + " requires a qubit register, not a Fock basis");
            return false;
        }
        return true;
    };

    if (kind == "vacuum") {
        check_keys(j, path, {"kind"}, issues);
        if (!need_fock("vacuum")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::vacuum;
        if (config.sector && *config.sector != 0) {
            issues.add(path, "the vacuum is not in sector Q=" +
                                 std::to_string(*config.sector));
        }
        return spec;
    }
    if (kind == "qe_pair" || kind == "loan_pair") {
        check_keys(j, path, {"kind", "money_mode", "debt_mode"}, issues);
        if (!need_fock(kind.c_str())) return std::nullopt;
        spec.kind = kind == "qe_pair" ? InitialStateSpec::Kind::qe_pair
                                      : InitialStateSpec::Kind::loan_pair;
        if (j.contains("money_mode")) {
            if (auto k = as_count(j["money_mode"], path + ".money_mode", issues)) {
                spec.money_mode = *k;
            }
        }
        if (j.contains("debt_mode")) {
            if (auto q = as_count(j["debt_mode"], path + ".debt_mode", issues)) {
                spec.debt_mode = *q;
            }
        }
        if (spec.money_mode >= config.money_modes) {
            issues.add(path + ".money_mode", "out of range");
        }
        if (spec.debt_mode >= config.debt_modes) {
            issues.add(path + ".debt_mode", "out of range");
        }
        if (config.sector && *config.sector != 0) {
            issues.add(path, "pair states live in sector Q=0");
        }
        return spec;
    }
    if (kind == "single_money") {
        check_keys(j, path, {"kind", "mode"}, issues);
        if (!need_fock("single_money")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::single_money;
        if (j.contains("mode")) {
            if (auto k = as_count(j["mode"], path + ".mode", issues)) spec.mode = *k;
        }
        if (spec.mode >= config.money_modes) {
            issues.add(path + ".mode", "out of range");
        }
        if (config.sector && *config.sector != 1) {
            issues.add(path, "a single money excitation lives in sector Q=+1");
        }
        return spec;
    }
    if (kind == "basis_state") {
        check_keys(j, path, {"kind", "occupation"}, issues);
        if (!need_fock("basis_state")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::basis_state;
        const auto occ_it = j.find("occupation");
        if (occ_it == j.end() || !occ_it->is_string()) {
            issues.add(path + ".occupation", "occupation string required");
            return std::nullopt;
        }
        spec.occupation = occ_it->get<std::string>();
        if (spec.occupation.size() != config.money_modes + config.debt_modes) {
            issues.add(path + ".occupation", "length must equal M + D");
        } else {
            for (char c : spec.occupation) {
                if (c != '0' && c != '1') {
                    issues.add(path + ".occupation", "only '0' and '1' allowed");
                    break;
                }
            }
        }
        return spec;
    }
    if (kind == "asset_superposition") {
        check_keys(j, path, {"kind", "a", "b"}, issues);
        if (!need_register("asset_superposition")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::asset_superposition;
        if (config.qubits != std::vector<std::string>{"asset"}) {
            issues.add(path, "asset_superposition requires register [\"asset\"]");
        }
        if (!j.contains("a") || !j.contains("b")) {
            issues.add(path, "amplitudes 'a' and 'b' are required");
            return std::nullopt;
        }
        const auto a = as_complex(j["a"], path + ".a", issues);
        const auto b = as_complex(j["b"], path + ".b", issues);
        if (!a || !b) return std::nullopt;
        spec.a = *a;
        spec.b = *b;
        if (std::abs(std::norm(*a) + std::norm(*b) - 1.0) > 1e-9) {
            issues.add(path, "|a|^2 + |b|^2 must equal 1");
        }
        return spec;
    }
    if (kind == "bell_qe") {
        check_keys(j, path, {"kind"}, issues);
        if (!need_register("bell_qe")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::bell_qe;
        if (config.qubits != bell_qe_labels()) {
            issues.add(path, "bell_qe requires register [\"money_valuation\", "
                             "\"bond_valuation\"]");
        }
        return spec;
    }
    if (kind == "register_state") {
        check_keys(j, path, {"kind", "pattern"}, issues);
        if (!need_register("register_state")) return std::nullopt;
        spec.kind = InitialStateSpec::Kind::register_state;
        const auto pat_it = j.find("pattern");
        if (pat_it == j.end() || !pat_it->is_string()) {
            issues.add(path + ".pattern", "pattern string required");
            return std::nullopt;
        }
        spec.pattern = pat_it->get<std::string>();
        if (spec.pattern.size() != config.qubits.size()) {
            issues.add(path + ".pattern", "length must match the register size");
        } else {
            for (char c : spec.pattern) {
                if (c != 'u' && c != 'd') {
                    issues.add(path + ".pattern", "only 'u' and 'd' allowed");
                    break;
                }
            }
        }
        return spec;
    }
    issues.add(path + ".kind",
               "unknown initial state '" + kind +
                   "' (valid: vacuum, qe_pair, loan_pair, single_money, basis_state, "
                   "asset_superposition, bell_qe, register_state)");
    return std::nullopt;
}

}  // namespace

std::vector<std::string> valid_observables(const ScenarioConfig& config) {
    std::vector<std::string> names = {"norm", "energy"};
    if (config.is_register) {
        for (const std::string& label : config.qubits) {
            names.push_back("prob_up_" + label);
        }
        if (config.qubits.size() >= 2) {
            for (const std::string& label : config.qubits) {
                names.push_back("entropy_" + label);
            }
            names.push_back("mutual_information");
            names.push_back("separability_gap");
        }
        return names;
    }
    names.push_back("charge");
    names.push_back("n_money");
    names.push_back("n_debt");
    names.push_back("exciton_count");
    for (std::size_t k = 0; k < config.money_modes; ++k) {
        names.push_back("n_money_" + std::to_string(k));
    }
    for (std::size_t q = 0; q < config.debt_modes; ++q) {
        names.push_back("n_debt_" + std::to_string(q));
    }
    if (config.money_modes >= 1 && config.debt_modes >= 1) {
        names.push_back("entropy_money");
        names.push_back("mutual_information");
        names.push_back("separability_gap");
    }
    return names;
}

ParseOutcome parse_scenario(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(errc::parse_error, e.what());
    }

    ParseOutcome outcome;
    Issues issues{&outcome.issues};
    if (!document.is_object()) {
        issues.add("", "top-level document must be an object");
        return outcome;
    }

    check_keys(document, "",
               {"schema_version", "name", "basis", "register", "energies", "terms",
                "initial_state", "grid", "observables", "seed", "outputs", "events",
                "measure"},
               issues);

    ScenarioConfig config;

    if (!document.contains("schema_version") ||
        !document["schema_version"].is_number_integer()) {
        issues.add("schema_version", "required integer");
    } else if (document["schema_version"].get<int>() != scenario_schema_version) {
        issues.add("schema_version", "unsupported version (this engine speaks " +
                                         std::to_string(scenario_schema_version) + ")");
    }

    if (!document.contains("name") || !document["name"].is_string() ||
        document["name"].get<std::string>().empty()) {
        issues.add("name", "nonempty string required");
    } else {
        config.name = document["name"].get<std::string>();
    }

    // --- basis xor register ---
    const bool has_basis = document.contains("basis");
    const bool has_register = document.contains("register");
    if (has_basis == has_register) {
        issues.add("basis", "exactly one of 'basis' or 'register' is required");
        return outcome;
    }
    if (has_basis) {
        const json& b = document["basis"];
        if (!b.is_object()) {
            issues.add("basis", "expected an object");
            return outcome;
        }
        check_keys(b, "basis", {"money_modes", "debt_modes", "sector"}, issues);
        if (!b.contains("money_modes") || !b.contains("debt_modes")) {
            issues.add("basis", "money_modes and debt_modes are required");
            return outcome;
        }
        const auto m = as_count(b["money_modes"], "basis.money_modes", issues);
        const auto d = as_count(b["debt_modes"], "basis.debt_modes", issues);
        if (!m || !d) return outcome;
        config.money_modes = *m;
        config.debt_modes = *d;
        if (*m + *d > max_total_modes) {
            issues.add("basis", "M + D exceeds the cap of " +
                                    std::to_string(max_total_modes) + " modes");
            return outcome;
        }
        if (b.contains("sector")) {
            if (!b["sector"].is_number_integer()) {
                issues.add("basis.sector", "expected an integer");
            } else {
                config.sector = b["sector"].get<int>();
                const int q = *config.sector;
                if (q < -static_cast<int>(*d) || q > static_cast<int>(*m)) {
                    issues.add("basis.sector", "sector admits no states (valid range " +
                                                   std::to_string(-static_cast<int>(*d)) +
                                                   ".." + std::to_string(*m) + ")");
                }
            }
        }
    } else {
        const json& r = document["register"];
        if (!r.is_object()) {
            issues.add("register", "expected an object");
            return outcome;
        }
        check_keys(r, "register", {"qubits"}, issues);
        if (!r.contains("qubits") || !r["qubits"].is_array() || r["qubits"].empty()) {
            issues.add("register.qubits", "nonempty array of labels required");
            return outcome;
        }
        config.is_register = true;
        for (std::size_t i = 0; i < r["qubits"].size(); ++i) {
            if (auto label = as_string(r["qubits"][i],
                                       "register.qubits[" + std::to_string(i) + "]",
                                       issues)) {
                config.qubits.push_back(std::move(*label));
            }
        }
        for (std::size_t i = 0; i < config.qubits.size(); ++i) {
            for (std::size_t k = i + 1; k < config.qubits.size(); ++k) {
                if (config.qubits[i] == config.qubits[k]) {
                    issues.add("register.qubits", "duplicate label '" + config.qubits[i] +
                                                      "'");
                }
            }
        }
        if (config.qubits.size() > 12) {
            issues.add("register.qubits", "register is capped at 12 qubits");
        }
    }

    // --- energies ---
    config.energies = ModeEnergies::zero(config.money_modes, config.debt_modes);
    if (document.contains("energies")) {
        if (config.is_register) {
            issues.add("energies", "registers carry no mode energies");
        } else {
            const json& e = document["energies"];
            if (!e.is_object()) {
                issues.add("energies", "expected an object");
            } else if (e.contains("symmetric")) {
                check_keys(e, "energies", {"symmetric"}, issues);
                if (!e["symmetric"].is_array() ||
                    e["symmetric"].size() != config.money_modes ||
                    config.money_modes != config.debt_modes) {
                    issues.add("energies.symmetric",
                               "needs M = D and one energy per money mode");
                } else {
                    std::vector<double> money;
                    for (std::size_t k = 0; k < e["symmetric"].size(); ++k) {
                        if (auto v = as_number(e["symmetric"][k],
                                               "energies.symmetric[" + std::to_string(k) +
                                                   "]",
                                               issues)) {
                            money.push_back(*v);
                        }
                    }
                    if (money.size() == config.money_modes) {
                        config.energies = ModeEnergies::symmetric(std::move(money));
                    }
                }
            } else {
                check_keys(e, "energies", {"money", "debt"}, issues);
                const auto read_list = [&](const char* key, std::size_t count,
                                           std::vector<double>& out) {
                    if (!e.contains(key)) {
                        if (count > 0) {
                            issues.add(std::string("energies.") + key,
                                       "required (one energy per mode)");
                        }
                        return;
                    }
                    const json& list = e[key];
                    if (!list.is_array() || list.size() != count) {
                        issues.add(std::string("energies.") + key,
                                   "expected " + std::to_string(count) + " energies");
                        return;
                    }
                    out.clear();
                    for (std::size_t i = 0; i < list.size(); ++i) {
                        if (auto v = as_number(list[i],
                                               std::string("energies.") + key + "[" +
                                                   std::to_string(i) + "]",
                                               issues)) {
                            out.push_back(*v);
                        } else {
                            out.push_back(0.0);
                        }
                    }
                };
                read_list("money", config.money_modes, config.energies.money);
                read_list("debt", config.debt_modes, config.energies.debt);
            }
        }
    }

    // --- terms ---
    if (!document.contains("terms") || !document["terms"].is_array()) {
        issues.add("terms", "array required (may be empty)");
    } else {
        const json& terms = document["terms"];
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string path = "terms[" + std::to_string(i) + "]";
            if (config.is_register) {
                issues.add(path, "register scenarios take no Hamiltonian terms");
                continue;
            }
            if (auto term = parse_term(terms[i], path, config.money_modes,
                                       config.debt_modes, issues)) {
                config.terms.push_back(std::move(*term));
            }
        }
    }

    // --- grid ---
    if (!document.contains("grid") || !document["grid"].is_object()) {
        issues.add("grid", "object with t_start, t_end, n_steps required");
    } else {
        const json& g = document["grid"];
        check_keys(g, "grid", {"t_start", "t_end", "n_steps"}, issues);
        bool have_all = true;
        for (const char* key : {"t_start", "t_end", "n_steps"}) {
            if (!g.contains(key)) {
                issues.add(std::string("grid.") + key, "required");
                have_all = false;
            }
        }
        if (have_all) {
            const auto t0 = as_number(g["t_start"], "grid.t_start", issues);
            const auto t1 = as_number(g["t_end"], "grid.t_end", issues);
            const auto steps = as_count(g["n_steps"], "grid.n_steps", issues);
            if (t0 && t1 && steps) {
                config.grid = {*t0, *t1, *steps};
                if (!(*t1 > *t0)) issues.add("grid.t_end", "must exceed t_start");
                if (*steps < 1) issues.add("grid.n_steps", "must be >= 1");
                if (*steps > 10'000'000) {
                    issues.add("grid.n_steps", "capped at 10^7 steps");
                }
            }
        }
    }

    // --- initial state ---
    if (!document.contains("initial_state")) {
        issues.add("initial_state", "required (exactly one)");
    } else if (auto spec = parse_initial_state(document["initial_state"], "initial_state",
                                               config, issues)) {
        config.initial_state = std::move(*spec);
    }

    // --- observables ---
    if (!document.contains("observables") || !document["observables"].is_array() ||
        document["observables"].empty()) {
        issues.add("observables", "nonempty array of observable names required");
    } else {
        const std::vector<std::string> valid = valid_observables(config);
        for (std::size_t i = 0; i < document["observables"].size(); ++i) {
            const std::string path = "observables[" + std::to_string(i) + "]";
            if (auto name = as_string(document["observables"][i], path, issues)) {
                if (std::find(valid.begin(), valid.end(), *name) == valid.end()) {
                    issues.add(path, "unknown observable '" + *name +
                                         "' (valid: " + join(valid) + ")");
                } else {
                    config.observables.push_back(std::move(*name));
                }
            }
        }
    }

    // --- seed ---
    if (!document.contains("seed") || !document["seed"].is_number_integer() ||
        document["seed"].get<long long>() < 0) {
        issues.add("seed", "nonnegative integer required");
    } else {
        config.seed = document["seed"].get<std::uint64_t>();
    }

    // --- outputs ---
    if (document.contains("outputs")) {
        if (!document["outputs"].is_array()) {
            issues.add("outputs", "expected an array of formats");
        } else {
            for (std::size_t i = 0; i < document["outputs"].size(); ++i) {
                const std::string path = "outputs[" + std::to_string(i) + "]";
                if (auto fmt = as_string(document["outputs"][i], path, issues)) {
                    if (*fmt != "csv" && *fmt != "jsonl") {
                        issues.add(path, "unknown format '" + *fmt +
                                             "' (valid: csv, jsonl)");
                    } else {
                        config.outputs.push_back(std::move(*fmt));
                    }
                }
            }
        }
    }
    if (config.outputs.empty()) config.outputs = {"csv"};

    // --- events ---
    if (document.contains("events")) {
        if (config.is_register) {
            issues.add("events", "repayment events need a Fock basis");
        } else if (!document["events"].is_array()) {
            issues.add("events", "expected an array");
        } else {
            for (std::size_t i = 0; i < document["events"].size(); ++i) {
                const json& ev = document["events"][i];
                const std::string path = "events[" + std::to_string(i) + "]";
                if (!ev.is_object()) {
                    issues.add(path, "expected an object");
                    continue;
                }
                check_keys(ev, path, {"time", "kind", "money_mode", "debt_mode"}, issues);
                const auto kind_it = ev.find("kind");
                if (kind_it == ev.end() || !kind_it->is_string() ||
                    kind_it->get<std::string>() != "repayment") {
                    issues.add(path + ".kind", "only 'repayment' events exist");
                    continue;
                }
                EventSpec spec;
                if (!ev.contains("time")) {
                    issues.add(path + ".time", "required");
                    continue;
                }
                if (auto t = as_number(ev["time"], path + ".time", issues)) {
                    spec.time = *t;
                } else {
                    continue;
                }
                if (ev.contains("money_mode")) {
                    if (auto k = as_count(ev["money_mode"], path + ".money_mode", issues)) {
                        spec.money_mode = *k;
                    }
                }
                if (ev.contains("debt_mode")) {
                    if (auto q = as_count(ev["debt_mode"], path + ".debt_mode", issues)) {
                        spec.debt_mode = *q;
                    }
                }
                if (spec.money_mode >= config.money_modes) {
                    issues.add(path + ".money_mode", "out of range");
                }
                if (spec.debt_mode >= config.debt_modes) {
                    issues.add(path + ".debt_mode", "out of range");
                }
                if (spec.time < config.grid.t_start - 1e-12 ||
                    spec.time > config.grid.t_end + 1e-12) {
                    issues.add(path + ".time", "outside the evolution interval");
                }
                config.events.push_back(spec);
            }
        }
    }

    // --- measure ---
    if (document.contains("measure")) {
        if (!config.is_register) {
            issues.add("measure", "measurement targets a register qubit");
        } else {
            const json& ms = document["measure"];
            if (!ms.is_object()) {
                issues.add("measure", "expected an object");
            } else {
                check_keys(ms, "measure", {"target", "trials"}, issues);
                MeasureSpec spec;
                if (!ms.contains("target") || !ms["target"].is_string()) {
                    issues.add("measure.target", "qubit label required");
                } else {
                    spec.target = ms["target"].get<std::string>();
                    if (std::find(config.qubits.begin(), config.qubits.end(),
                                  spec.target) == config.qubits.end()) {
                        issues.add("measure.target",
                                   "no qubit labeled '" + spec.target + "'");
                    }
                }
                spec.trials = 1;
                if (ms.contains("trials")) {
                    if (auto n = as_count(ms["trials"], "measure.trials", issues)) {
                        spec.trials = *n;
                        if (*n < 1 || *n > 10'000'000) {
                            issues.add("measure.trials", "must be in 1..10^7");
                        }
                    }
                }
                config.measure = std::move(spec);
            }
        }
    }

    // Schedules must stay finite over the configured horizon.
    for (std::size_t i = 0; i < config.terms.size(); ++i) {
        const TermSpec& term = config.terms[i];
        if (term.type != TermSpec::Type::perturb) continue;
        const auto finite_over = [&](const std::vector<Schedule>& schedules,
                                     const char* key) {
            for (const Schedule& s : schedules) {
                if (!std::isfinite(s.value(config.grid.t_start)) ||
                    !std::isfinite(s.value(config.grid.t_end))) {
                    issues.add("terms[" + std::to_string(i) + "]." + key,
                               "schedule is not finite over the evolution horizon");
                    return;
                }
            }
        };
        finite_over(term.profit, "profit");
        finite_over(term.interest, "interest");
    }

    if (issues.any()) return outcome;

    config.document = document;
    config.config_hash = fnv1a_hex(document.dump());
    outcome.config = std::move(config);
    return outcome;
}

std::string serialize_scenario(const ScenarioConfig& config) {
    return config.document.dump(2) + "\n";
}

// --- exciton1d configuration ---------------------------------------------

Exciton1dParseOutcome parse_exciton1d_config(const std::string& text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(errc::parse_error, e.what());
    }

    Exciton1dParseOutcome outcome;
    Issues issues{&outcome.issues};
    if (!document.is_object()) {
        issues.add("", "top-level document must be an object");
        return outcome;
    }
    check_keys(document, "",
               {"schema_version", "grid", "potential", "mass", "n_states",
                "wavefunction_csv"},
               issues);

    Exciton1dConfig config;

    if (!document.contains("schema_version") ||
        !document["schema_version"].is_number_integer() ||
        document["schema_version"].get<int>() != scenario_schema_version) {
        issues.add("schema_version", "required integer equal to " +
                                         std::to_string(scenario_schema_version));
    }

    if (!document.contains("grid") || !document["grid"].is_object()) {
        issues.add("grid", "object with x_min, x_max, n_points required");
    } else {
        const json& g = document["grid"];
        check_keys(g, "grid", {"x_min", "x_max", "n_points"}, issues);
        std::optional<double> x0, x1;
        std::optional<std::size_t> np;
        if (g.contains("x_min")) {
            x0 = as_number(g["x_min"], "grid.x_min", issues);
        } else {
            issues.add("grid.x_min", "required");
        }
        if (g.contains("x_max")) {
            x1 = as_number(g["x_max"], "grid.x_max", issues);
        } else {
            issues.add("grid.x_max", "required");
        }
        if (g.contains("n_points")) {
            np = as_count(g["n_points"], "grid.n_points", issues);
        } else {
            issues.add("grid.n_points", "required");
        }
        if (x0 && x1 && np) {
            config.grid = {*x0, *x1, *np};
            if (!(*x1 > *x0)) issues.add("grid.x_max", "must exceed x_min");
            if (*np < 16) issues.add("grid.n_points", "must be >= 16");
            if (*np > 100'000) issues.add("grid.n_points", "capped at 10^5 points");
        }
    }

    config.mass = 1.0;
    if (document.contains("mass")) {
        if (auto m = as_number(document["mass"], "mass", issues)) {
            config.mass = *m;
            if (!(*m > 0.0)) issues.add("mass", "must be positive");
        }
    }

    config.n_states = 1;
    if (document.contains("n_states")) {
        if (auto n = as_count(document["n_states"], "n_states", issues)) {
            config.n_states = *n;
            if (*n < 1) issues.add("n_states", "must be >= 1");
        }
    }
    if (config.grid.n_points >= 16 && config.n_states >= config.grid.n_points - 2) {
        issues.add("n_states", "needs n_states < n_points - 2");
    }

    if (!document.contains("potential") || !document["potential"].is_object()) {
        issues.add("potential", "object with a potential kind required");
    } else {
        const json& p = document["potential"];
        const auto kind_it = p.find("kind");
        if (kind_it == p.end() || !kind_it->is_string()) {
            issues.add("potential.kind", "required");
        } else {
            const std::string kind = kind_it->get<std::string>();
            if (kind == "harmonic") {
                check_keys(p, "potential", {"kind", "omega"}, issues);
                double omega = 1.0;
                if (p.contains("omega")) {
                    if (auto w = as_number(p["omega"], "potential.omega", issues)) {
                        omega = *w;
                        if (!(*w > 0.0)) issues.add("potential.omega", "must be positive");
                    }
                }
                config.potential = exciton1d::PotentialSpec::harmonic(omega);
            } else if (kind == "square_well") {
                check_keys(p, "potential", {"kind", "depth", "width"}, issues);
                double depth = 1.0, width = 1.0;
                if (p.contains("depth")) {
                    if (auto v = as_number(p["depth"], "potential.depth", issues)) {
                        depth = *v;
                    }
                }
                if (p.contains("width")) {
                    if (auto v = as_number(p["width"], "potential.width", issues)) {
                        width = *v;
                        if (!(*v > 0.0)) issues.add("potential.width", "must be positive");
                    }
                }
                config.potential = exciton1d::PotentialSpec::square_well(depth, width);
            } else if (kind == "tabulated") {
                check_keys(p, "potential", {"kind", "samples", "file"}, issues);
                const bool has_samples = p.contains("samples");
                const bool has_file = p.contains("file");
                if (has_samples == has_file) {
                    issues.add("potential",
                               "tabulated potential needs exactly one of 'samples' or "
                               "'file'");
                } else if (has_samples) {
                    if (!p["samples"].is_array()) {
                        issues.add("potential.samples", "expected an array of numbers");
                    } else {
                        std::vector<double> samples;
                        for (std::size_t i = 0; i < p["samples"].size(); ++i) {
                            if (auto v = as_number(p["samples"][i],
                                                   "potential.samples[" +
                                                       std::to_string(i) + "]",
                                                   issues)) {
                                samples.push_back(*v);
                            }
                        }
                        if (config.grid.n_points > 0 &&
                            samples.size() != config.grid.n_points) {
                            issues.add("potential.samples",
                                       "expected one sample per grid point (" +
                                           std::to_string(config.grid.n_points) + ")");
                        }
                        config.potential =
                            exciton1d::PotentialSpec::tabulated(std::move(samples));
                    }
                } else {
                    if (!p["file"].is_string()) {
                        issues.add("potential.file", "expected a path string");
                    } else {
                        config.potential_file = p["file"].get<std::string>();
                        config.potential = exciton1d::PotentialSpec::tabulated({});
                    }
                }
            } else {
                issues.add("potential.kind",
                           "unknown potential '" + kind +
                               "' (valid: harmonic, square_well, tabulated)");
            }
        }
    }

    if (document.contains("wavefunction_csv")) {
        if (auto path = as_string(document["wavefunction_csv"], "wavefunction_csv",
                                  issues)) {
            config.wavefunction_csv = std::move(*path);
        }
    }

    if (issues.any()) return outcome;
    outcome.config = std::move(config);
    return outcome;
}

std::vector<double> read_tabulated_potential(const std::string& text,
                                             const exciton1d::GridSpec& grid) {
    std::vector<double> values;
    std::istringstream stream(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        double x = 0.0, v = 0.0;
        if (!(fields >> x >> v)) {
            fail(errc::parse_error,
                 "potential table line " + std::to_string(row + 1) +
                     " is not 'x, V(x)'");
        }
        if (row >= grid.n_points) {
            fail(errc::dimension_mismatch, "potential table has more rows than grid points");
        }
        if (std::abs(x - grid.x_at(row)) > 1e-6 * std::max(1.0, std::abs(grid.spacing()))) {
            fail(errc::dimension_mismatch,
                 "potential table x at row " + std::to_string(row + 1) +
                     " does not match the grid");
        }
        values.push_back(v);
        ++row;
    }
    if (values.size() != grid.n_points) {
        fail(errc::dimension_mismatch,
             "potential table has " + std::to_string(values.size()) + " rows for " +
                 std::to_string(grid.n_points) + " grid points");
    }
    return values;
}

std::string wavefunctions_csv(const exciton1d::GridSpec& grid,
                              const exciton1d::EigenResult& result) {
    char buf[40];
    std::string out = "x";
    for (std::size_t s = 0; s < result.wavefunctions.size(); ++s) {
        out += ",psi_" + std::to_string(s);
    }
    out += "\n";
    for (std::size_t i = 0; i < grid.n_points; ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", grid.x_at(i));
        out += buf;
        for (const auto& psi : result.wavefunctions) {
            std::snprintf(buf, sizeof(buf), "%.17g", psi[i]);
            out += ",";
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace econofock
