// Copyright 2026 The qfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfp/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "qfp/absorbing.hpp"
#include "qfp/amplifier_fock.hpp"
#include "qfp/dielectrics.hpp"
#include "qfp/entanglement.hpp"
#include "qfp/errors.hpp"
#include "qfp/fourport.hpp"
#include "qfp/gaussian.hpp"
#include "qfp/seeding.hpp"

namespace qfp::scenarios {

namespace {

using Row = std::vector<Cell>;
using PointFn = std::function<Row(double x, std::size_t index)>;

const std::set<std::string> kKnownKeys = {
    "material.kind", "material.eps_s", "material.gamma_rel", "material.eps_re", "material.eps_im",
    "slab.thickness", "channel.eta", "channel.kappa", "channel.length",
    "eit.n_strength", "eit.gamma1", "eit.gamma0", "eit.gamma_perp", "eit.rabi", "eit.delta1",
    "ent.m_terms", "ent.restarts", "ent.max_iter", "ent.tol", "ent.seed", "ent.warm_start",
    "amp.zeta", "amp.t2", "amp.r2", "amp.cutoff", "amp.p", "amp.q",
    "mzi.t3", "mzi.t4", "mzi.theta",
};

struct Schema {
    std::string variable;
    Range range;
    std::vector<std::string> columns;
};

const std::map<std::string, Schema> &schemas() {
    static const std::map<std::string, Schema> s = {
        {"fig-slab", {"omega_rel", {0.5, 1.5, 201}, {"omega_rel", "R2", "T2", "absorption"}}},
        {"fig-lossless", {"t2", {0.0, 1.0, 201}, {"t2", "E", "entropy_mode1", "status"}}},
        {"fig-creation10", {"omega_rel", {0.5, 1.5, 201}, {"omega_rel", "E", "I_c", "R2", "T2", "absorption", "status"}}},
        {"fig-creation11", {"omega_rel", {0.5, 1.5, 201}, {"omega_rel", "E", "I_c", "R2", "T2", "absorption", "status"}}},
        {"fig-gamma01", {"omega_rel", {0.5, 1.5, 201}, {"omega_rel", "E", "I_c", "R2", "T2", "absorption", "status"}}},
        {"fig-zweifaser", {"length_rel", {0.0, 1.5, 61}, {"l_over_L", "E_n1", "bound_n1", "E_n2", "bound_n2"}}},
        {"fig-vergleich", {"length_rel", {0.0, 1.5, 61}, {"l_over_L", "E_psi", "bound_psi", "E_phi", "bound_phi"}}},
        {"fig-eit", {"delta", {-3.0, 3.0, 241}, {"delta", "kappa", "E_one", "E_both", "T_abs"}}},
        {"amp-boundary", {"t2", {1.0, 2.0, 101}, {"t2", "margin", "separable", "boundary_t2"}}},
        {"mzi-visibility", {"omega_rel", {0.5, 1.5, 201}, {"omega_rel", "V1", "V2", "n1", "n2"}}},
        {"amp-fock", {"t2", {1.0, 1.5, 11}, {"t2", "trace", "mean_n1", "mean_n2", "p0_mode1", "entropy_mode1"}}},
    };
    return s;
}

const Schema &schema(const std::string &id) {
    const auto it = schemas().find(id);
    if (it == schemas().end()) {
        std::string known;
        for (const auto &k : scenario_ids()) known += " " + k;
        throw Error(ErrorCode::UnknownScenario, "'" + id + "'; known:" + known);
    }
    return it->second;
}

std::string status_text(entanglement::Status s) {
    return s == entanglement::Status::Converged ? "converged" : "max_iter";
}

entanglement::ReeConfig ree_config(const Config &c) {
    entanglement::ReeConfig r;
    r.m_terms = static_cast<int>(c.get_int("ent.m_terms", r.m_terms));
    r.restarts = static_cast<int>(c.get_int("ent.restarts", r.restarts));
    r.max_iter = static_cast<int>(c.get_int("ent.max_iter", r.max_iter));
    r.tol = c.get_double("ent.tol", r.tol);
    r.warm_start = c.get_int("ent.warm_start", 1) != 0;
    return r;
}

// Permittivity of the slab material as a function of omega / omega0.
std::function<cplx(double)> slab_material(const Config &c, double default_gamma) {
    const std::string kind = c.get_string("material.kind", "lorentz");
    if (kind == "lorentz") {
        dielectrics::LorentzModel m;
        m.eps_s = c.get_double("material.eps_s", 1.5);
        m.gamma_rel = c.get_double("material.gamma_rel", default_gamma);
        dielectrics::validate(m);
        return [m](double w) { return dielectrics::lorentz_permittivity(m, w); };
    }
    if (kind == "fixed") {
        const cplx eps(c.get_double("material.eps_re", 1.5), c.get_double("material.eps_im", 0.0));
        if (eps.imag() < 0.0) {
            throw Error(ErrorCode::BadArgument, "material.eps_im must be non-negative");
        }
        return [eps](double) { return eps; };
    }
    throw Error(ErrorCode::BadArgument, "material.kind '" + kind + "' is not a slab material");
}

dielectrics::EitModel eit_model(const Config &c) {
    dielectrics::EitModel m;
    m.n_strength = c.get_double("eit.n_strength", m.n_strength);
    m.gamma1 = c.get_double("eit.gamma1", m.gamma1);
    m.gamma0 = c.get_double("eit.gamma0", m.gamma0);
    m.gamma_perp = c.get_double("eit.gamma_perp", m.gamma_perp);
    m.rabi = c.get_double("eit.rabi", m.rabi);
    m.delta1 = c.get_double("eit.delta1", m.delta1);
    dielectrics::validate(m);
    return m;
}

double ree(const fock::TwoModeDensityMatrix &rho, entanglement::ReeConfig cfg, std::uint64_t seed,
           std::string *status = nullptr) {
    cfg.seed = seed;
    const auto rep = entanglement::relative_entropy_of_entanglement(rho.trimmed(), cfg);
    if (status) *status = status_text(rep.status);
    return rep.value;
}

PointFn make_point_fn(const std::string &id, const std::string &variable, const Config &c,
                      std::uint64_t seed) {
    const entanglement::ReeConfig ent = ree_config(c);
    auto sub = [seed](std::size_t i, std::uint64_t k) { return derive_seed(derive_seed(seed, i), k); };

    if (id == "fig-slab" || id == "fig-creation10" || id == "fig-creation11" || id == "fig-gamma01" ||
        id == "mzi-visibility") {
        const auto eps = slab_material(c, id == "fig-gamma01" ? 0.01 : 0.001);
        const double d = c.get_double("slab.thickness", 2.0);
        if (d < 0.0) throw Error(ErrorCode::BadArgument, "slab.thickness must be non-negative");
        if (id == "fig-slab") {
            return [eps, d](double w, std::size_t) -> Row {
                const auto s = dielectrics::slab_response(eps(w), d, w);
                return {w, std::norm(s.r), std::norm(s.t), s.absorption};
            };
        }
        if (id == "mzi-visibility") {
            const cplx t3 = c.get_double("mzi.t3", 0.9), t4 = c.get_double("mzi.t4", 0.8);
            const double theta = c.get_double("mzi.theta", 0.0);
            if (std::abs(t3) > 1.0 || std::abs(t4) > 1.0) {
                throw Error(ErrorCode::BadArgument, "mzi.t3 and mzi.t4 must not exceed 1 in magnitude");
            }
            return [eps, d, t3, t4, theta](double w, std::size_t) -> Row {
                const auto s = dielectrics::slab_response(eps(w), d, w);
                fourport::MziSpec spec;
                spec.bs1 = spec.bs2 = fourport::make_beamsplitter(s.r, s.t, 1);
                spec.t3 = t3;
                spec.t4 = t4;
                spec.theta = theta;
                const auto [v1, v2] = fourport::mzi_visibility(spec);
                const auto [n1, n2] = fourport::mzi_mean_photon_numbers(spec);
                return {w, v1, v2, n1, n2};
            };
        }
        const auto input = id == "fig-creation11" ? fock::TwoModePureState::fock(1, 1)
                                                  : fock::TwoModePureState::fock(1, 0);
        return [eps, d, input, ent, sub](double w, std::size_t i) -> Row {
            const auto s = dielectrics::slab_response(eps(w), d, w);
            const auto dev = fourport::make_beamsplitter(s.r, s.t, 1);
            const auto rho = absorbing::transform_fock_input(dev, input).trimmed();
            std::string status;
            const double e = ree(rho, ent, sub(i, 0), &status);
            return {w, e, fock::mutual_information(rho), std::norm(s.r), std::norm(s.t), s.absorption, status};
        };
    }
    if (id == "fig-lossless") {
        return [ent, sub](double t2, std::size_t i) -> Row {
            const double tt = std::clamp(t2, 0.0, 1.0);
            const auto dev = fourport::make_beamsplitter(cplx(0.0, std::sqrt(1.0 - tt)), std::sqrt(tt), 1);
            const auto rho = absorbing::transform_fock_input(dev, fock::TwoModePureState::fock(1, 1));
            std::string status;
            const double e = ree(rho, ent, sub(i, 0), &status);
            return {t2, e, fock::von_neumann_entropy(fock::partial_trace(rho, 1)), status};
        };
    }
    if (id == "fig-zweifaser" || id == "fig-vergleich") {
        dielectrics::ChannelSpec ch;
        ch.refractive_index = cplx(c.get_double("channel.eta", 1.45), c.get_double("channel.kappa", 1e-3));
        if (!(ch.refractive_index.imag() > 0.0)) {
            throw Error(ErrorCode::BadArgument, "channel.kappa must be positive for a length sweep");
        }
        const bool psi_only = id == "fig-zweifaser";
        return [ch, ent, sub, psi_only](double x, std::size_t i) -> Row {
            dielectrics::ChannelSpec spec = ch;
            spec.length = x * dielectrics::absorption_length(ch);
            const cplx t = dielectrics::channel_transmission(spec);
            const absorbing::BellPsiSpec p1{1, -1, t, t};
            const double e1 = ree(absorbing::bell_psi_output(p1), ent, sub(i, 0));
            if (psi_only) {
                const absorbing::BellPsiSpec p2{2, -1, t, t};
                const double e2 = ree(absorbing::bell_psi_output(p2), ent, sub(i, 1));
                return {x, e1, absorbing::upper_bound_psi(p1), e2, absorbing::upper_bound_psi(p2)};
            }
            const absorbing::BellPhiSpec f1{1, 1.0, t, t};
            const double ef = ree(absorbing::bell_phi_output(f1), ent, sub(i, 1));
            return {x, e1, absorbing::upper_bound_psi(p1), ef, absorbing::upper_bound_phi(f1)};
        };
    }
    if (id == "fig-eit") {
        const auto model = eit_model(c);
        const double length = c.get_double("channel.length", 30.0);
        if (length < 0.0) throw Error(ErrorCode::BadArgument, "channel.length must be non-negative");
        return [model, length, ent, sub](double delta, std::size_t i) -> Row {
            const cplx chi = dielectrics::eit_susceptibility(model, delta);
            dielectrics::ChannelSpec spec;
            spec.refractive_index = dielectrics::refractive_index(1.0 + chi);
            spec.length = length;
            const cplx t = dielectrics::channel_transmission(spec);
            const double e_one = ree(absorbing::bell_psi_output({1, -1, t, 1.0}), ent, sub(i, 0));
            const double e_both = ree(absorbing::bell_psi_output({1, -1, t, t}), ent, sub(i, 1));
            return {delta, spec.refractive_index.imag(), e_one, e_both, std::abs(t)};
        };
    }
    if (id == "amp-boundary") {
        const double r2 = c.get_double("amp.r2", 0.0);
        const double zeta = c.get_double("amp.zeta", 0.5);
        const double t2_fixed = c.get_double("amp.t2", 1.3);
        const bool sweep_zeta = variable == "zeta";
        return [r2, zeta, t2_fixed, sweep_zeta](double x, std::size_t) -> Row {
            const double t2 = sweep_zeta ? t2_fixed : x;
            const double z = sweep_zeta ? x : zeta;
            const auto dev = amplifying::make_amplifier(t2, r2);
            const auto out = amplifying::propagate_gaussian(amplifying::two_mode_squeezed_vacuum(z), dev, dev);
            const auto v = amplifying::ph_criterion(out);
            return {x, v.margin, v.separable ? 1.0 : 0.0, amplifying::separability_boundary(std::sqrt(r2), z).t2};
        };
    }
    if (id == "amp-fock") {
        const double r2 = c.get_double("amp.r2", 0.0);
        const int p = static_cast<int>(c.get_int("amp.p", 1));
        const int q = static_cast<int>(c.get_int("amp.q", 0));
        const int cutoff = static_cast<int>(c.get_int("amp.cutoff", -1));
        return [r2, p, q, cutoff](double t2, std::size_t) -> Row {
            amplifying::AmplifierFockSpec spec;
            spec.p = p;
            spec.q = q;
            spec.dev = amplifying::make_amplifier(t2, r2);
            spec.cutoff = cutoff;
            const auto rho = amplifying::amplifier_fock_output(spec);
            const MatX r1 = fock::partial_trace(rho, 1);
            const MatX r2m = fock::partial_trace(rho, 2);
            double n1 = 0.0, n2 = 0.0;
            for (Eigen::Index n = 0; n < r1.rows(); ++n) {
                n1 += n * r1(n, n).real();
                n2 += n * r2m(n, n).real();
            }
            return {t2, rho.trace(), n1, n2, r1(0, 0).real(), fock::von_neumann_entropy(r1)};
        };
    }
    throw Error(ErrorCode::UnknownScenario, id);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::IoFailure, "cannot write " + path);
    }
    f << text;
    if (!f) {
        throw Error(ErrorCode::IoFailure, "write to " + path + " failed");
    }
}

}  // namespace

std::size_t Table::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw Error(ErrorCode::BadArgument, "no column " + name);
}

double Table::number(std::size_t row, const std::string &name) const {
    return std::get<double>(rows.at(row).at(column(name)));
}

std::vector<double> Table::numbers(const std::string &name) const {
    std::vector<double> out;
    for (std::size_t r = 0; r < rows.size(); ++r) out.push_back(number(r, name));
    return out;
}

const std::vector<std::string> &scenario_ids() {
    static const std::vector<std::string> ids = {
        "fig-slab", "fig-lossless", "fig-creation10", "fig-creation11", "fig-gamma01", "fig-zweifaser",
        "fig-vergleich", "fig-eit", "amp-boundary", "mzi-visibility", "amp-fock",
    };
    return ids;
}

std::vector<std::string> columns_for(const std::string &scenario) {
    return schema(scenario).columns;
}

std::string default_variable(const std::string &scenario) {
    return schema(scenario).variable;
}

Range default_range(const std::string &scenario, const std::string &variable) {
    if (scenario == "amp-boundary" && variable == "zeta") {
        return {0.0, 1.0, 101};
    }
    return schema(scenario).range;
}

std::pair<std::string, Range> parse_range(const std::string &text) {
    std::string name, body = text;
    if (const auto eq = text.find('='); eq != std::string::npos) {
        name = text.substr(0, eq);
        body = text.substr(eq + 1);
    }
    Range r;
    char c1 = 0, c2 = 0, extra = 0;
    std::istringstream in(body);
    if (!(in >> r.start >> c1 >> r.stop >> c2 >> r.points) || c1 != ':' || c2 != ':' || (in >> extra)) {
        throw Error(ErrorCode::BadArgument, "range must look like start:stop:points, got '" + text + "'");
    }
    if (r.points < 2 || !(r.start < r.stop)) {
        throw Error(ErrorCode::BadArgument, "range needs points >= 2 and start < stop");
    }
    return {name, r};
}

std::vector<double> grid(const Range &r) {
    std::vector<double> out;
    for (int i = 0; i < r.points; ++i) {
        out.push_back(i == r.points - 1 ? r.stop : r.start + (r.stop - r.start) * i / (r.points - 1));
    }
    return out;
}

Table run_scenario(const SweepSpec &spec) {
    const Schema &s = schema(spec.scenario);
    spec.config.require_known(kKnownKeys);
    std::string variable = spec.variable.empty() ? s.variable : spec.variable;
    const bool alt = spec.scenario == "amp-boundary" && variable == "zeta";
    if (variable != s.variable && !alt) {
        throw Error(ErrorCode::BadArgument, "scenario " + spec.scenario + " sweeps " + s.variable);
    }
    const Range range = spec.range.value_or(default_range(spec.scenario, variable));
    if (range.points < 2 || !(range.start < range.stop)) {
        throw Error(ErrorCode::BadArgument, "range needs points >= 2 and start < stop");
    }
    const std::uint64_t seed =
        spec.seed.value_or(static_cast<std::uint64_t>(spec.config.get_int("ent.seed", 0)));
    const PointFn fn = make_point_fn(spec.scenario, variable, spec.config, seed);

    const std::vector<double> xs = grid(range);
    Table table;
    table.scenario = spec.scenario;
    table.columns = s.columns;
    if (alt) table.columns[0] = "zeta";
    table.rows.resize(xs.size());

    std::vector<std::exception_ptr> errors(xs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < xs.size(); i = next++) {
            try {
                table.rows[i] = fn(xs[i], i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = std::min<unsigned>(spec.threads > 0 ? spec.threads : hw,
                                                  static_cast<unsigned>(xs.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!errors[i]) continue;
        const std::string where = "row " + std::to_string(i) + " (" + variable + "=" + format_number(xs[i]) + ")";
        try {
            std::rethrow_exception(errors[i]);
        } catch (const Error &e) {
            throw Error(e.code(), where + ": " + e.what());
        }
    }
    return table;
}

std::string format_csv(const Table &table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out += (i ? "," : "") + table.columns[i];
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ",";
            out += std::holds_alternative<double>(row[i]) ? format_number(std::get<double>(row[i]))
                                                          : std::get<std::string>(row[i]);
        }
        out += "\n";
    }
    return out;
}

Table parse_csv(const std::string &text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    auto split = [](const std::string &l) {
        std::vector<std::string> f;
        std::stringstream ss(l);
        std::string cell;
        while (std::getline(ss, cell, ',')) f.push_back(cell);
        return f;
    };
    if (!std::getline(in, line)) return t;
    t.columns = split(line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Row row;
        for (const auto &cell : split(line)) {
            char *end = nullptr;
            const double v = std::strtod(cell.c_str(), &end);
            if (!cell.empty() && end == cell.c_str() + cell.size()) {
                row.emplace_back(v);
            } else {
                row.emplace_back(cell);
            }
        }
        if (row.size() != t.columns.size()) {
            throw Error(ErrorCode::BadArgument, "CSV row width does not match header");
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

nlohmann::json to_json(const Table &table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : table.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::holds_alternative<double>(row[i])) {
                obj[table.columns[i]] = std::get<double>(row[i]);
            } else {
                obj[table.columns[i]] = std::get<std::string>(row[i]);
            }
        }
        rows.push_back(obj);
    }
    return {{"scenario", table.scenario}, {"columns", table.columns}, {"rows", rows}};
}

void emit_csv(const Table &table, const std::string &path) {
    write_file(path, format_csv(table));
}

void emit_json(const Table &table, const std::string &path) {
    write_file(path, to_json(table).dump(2) + "\n");
}

}  // namespace qfp::scenarios
