#include "fraclab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>

#include "fraclab/csv.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/solitons.hpp"

namespace fraclab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

double parse_number(const std::string& value, int lineno) {
    double v = 0.0;
    const char* first = value.c_str();
    const char* last = first + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ConfigError("config line " + std::to_string(lineno) + ": cannot parse number '" +
                          value + "'");
    return v;
}

long parse_integer(const std::string& value, int lineno) {
    const double v = parse_number(value, lineno);
    const long l = std::lround(v);
    if (v != static_cast<double>(l))
        throw ConfigError("config line " + std::to_string(lineno) + ": expected an integer, got '" +
                          value + "'");
    return l;
}

bool parse_bool(const std::string& value, int lineno) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("config line " + std::to_string(lineno) + ": expected a boolean, got '" +
                      value + "'");
}

std::vector<double> parse_list(const std::string& value, int lineno) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell = trim(cell);
        if (!cell.empty()) out.push_back(parse_number(cell, lineno));
    }
    return out;
}

bool same(double a, double b) {
    if (std::isnan(a) && std::isnan(b)) return true;
    return a == b;
}

}  // namespace

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
    return name == o.name && model == o.model && same(alpha, o.alpha) && same(beta, o.beta) &&
           u0 == o.u0 && same(u0_speed, o.u0_speed) && same(beta_st, o.beta_st) &&
           same(eps_nl, o.eps_nl) && same(eps_disp, o.eps_disp) && same(bbm_eps, o.bbm_eps) &&
           same(transport, o.transport) && n == o.n && same(w, o.w) && same(dt, o.dt) &&
           same(t_end, o.t_end) && diag_stride == o.diag_stride && dealias == o.dealias &&
           same(newton_tol, o.newton_tol) && newton_max_iter == o.newton_max_iter &&
           same(energy_stop, o.energy_stop) && track_delta == o.track_delta &&
           same(delta_stop, o.delta_stop) && snapshot_times == o.snapshot_times &&
           same(fit_t_lo, o.fit_t_lo) && same(fit_t_hi, o.fit_t_hi);
}

void ExperimentConfig::validate() const {
    if (n <= 0) throw ConfigError("config: n must be set and positive");
    if (!(w > 0.0)) throw ConfigError("config: w must be positive");
    if (!(dt > 0.0)) throw ConfigError("config: dt must be positive");
    if (!(t_end > 0.0)) throw ConfigError("config: t_end must be positive");
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw ConfigError("config: alpha and beta must be finite");
    if (u0 != "sech2" && u0 != "bo_soliton" && u0 != "fbbm_soliton")
        throw ConfigError("config: unknown initial data kind '" + u0 + "'");
    to_model();  // throws std::invalid_argument on bad model parameters
}

ModelSpec ExperimentConfig::to_model() const {
    ModelSpec m;
    m.kind = model;
    m.alpha = alpha;
    m.beta_st = beta_st;
    m.eps_nl = eps_nl;
    m.eps_disp = eps_disp;
    m.bbm_eps = bbm_eps;
    m.transport = transport;
    m.validate();
    return m;
}

long ExperimentConfig::n_steps() const {
    const double steps = t_end / dt;
    const long rounded = std::lround(steps);
    if (rounded <= 0 || std::abs(steps - rounded) > 1e-6 * steps + 1e-9)
        throw ConfigError("config: t_end must be an integer multiple of dt");
    return rounded;
}

EvolveConfig ExperimentConfig::to_evolve_config() const {
    EvolveConfig ec;
    ec.dt = dt;
    ec.n_steps = n_steps();
    ec.diag_stride = diag_stride;
    ec.snapshot_times = snapshot_times;
    ec.newton_tol = newton_tol;
    ec.newton_max_iter = newton_max_iter;
    ec.energy_stop = energy_stop;
    ec.dealias = dealias;
    ec.track_delta = track_delta;
    ec.delta_stop = delta_stop;
    return ec;
}

SpectralField ExperimentConfig::initial_data() const {
    const Grid grid(n, w);
    if (u0 == "bo_soliton") return bo_soliton(u0_speed, grid);
    if (u0 == "fbbm_soliton") return fbbm_bo_soliton(u0_speed, grid);
    const double b = beta;
    return SpectralField::from_function(grid, [b](double x) {
        const double s = 1.0 / std::cosh(x);
        return b * s * s;
    });
}

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, bool> seen;
    std::map<std::string, std::function<void(const std::string&, int)>> handlers = {
        {"name", [&](const std::string& v, int) { cfg.name = v; }},
        {"model", [&](const std::string& v, int lineno) {
             try {
                 cfg.model = model_kind_from_string(v);
             } catch (const std::invalid_argument& e) {
                 throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
             }
         }},
        {"alpha", [&](const std::string& v, int l) { cfg.alpha = parse_number(v, l); }},
        {"beta", [&](const std::string& v, int l) { cfg.beta = parse_number(v, l); }},
        {"u0", [&](const std::string& v, int) { cfg.u0 = v; }},
        {"u0_speed", [&](const std::string& v, int l) { cfg.u0_speed = parse_number(v, l); }},
        {"beta_st", [&](const std::string& v, int l) { cfg.beta_st = parse_number(v, l); }},
        {"eps_nl", [&](const std::string& v, int l) { cfg.eps_nl = parse_number(v, l); }},
        {"eps_disp", [&](const std::string& v, int l) { cfg.eps_disp = parse_number(v, l); }},
        {"bbm_eps", [&](const std::string& v, int l) { cfg.bbm_eps = parse_number(v, l); }},
        {"transport", [&](const std::string& v, int l) { cfg.transport = parse_number(v, l); }},
        {"n", [&](const std::string& v, int l) { cfg.n = static_cast<int>(parse_integer(v, l)); }},
        {"w", [&](const std::string& v, int l) { cfg.w = parse_number(v, l); }},
        {"dt", [&](const std::string& v, int l) { cfg.dt = parse_number(v, l); }},
        {"t_end", [&](const std::string& v, int l) { cfg.t_end = parse_number(v, l); }},
        {"diag_stride", [&](const std::string& v, int l) { cfg.diag_stride = parse_integer(v, l); }},
        {"dealias", [&](const std::string& v, int l) { cfg.dealias = parse_bool(v, l); }},
        {"newton_tol", [&](const std::string& v, int l) { cfg.newton_tol = parse_number(v, l); }},
        {"newton_max_iter",
         [&](const std::string& v, int l) { cfg.newton_max_iter = static_cast<int>(parse_integer(v, l)); }},
        {"energy_stop", [&](const std::string& v, int l) { cfg.energy_stop = parse_number(v, l); }},
        {"track_delta", [&](const std::string& v, int l) { cfg.track_delta = parse_bool(v, l); }},
        {"delta_stop", [&](const std::string& v, int l) { cfg.delta_stop = parse_number(v, l); }},
        {"snapshot_times", [&](const std::string& v, int l) { cfg.snapshot_times = parse_list(v, l); }},
        {"fit_t_lo", [&](const std::string& v, int l) { cfg.fit_t_lo = parse_number(v, l); }},
        {"fit_t_hi", [&](const std::string& v, int l) { cfg.fit_t_hi = parse_number(v, l); }},
    };

    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = handlers.find(key);
        if (it == handlers.end())
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key +
                              "'");
        it->second(value, lineno);
        seen[key] = true;
    }

    for (const char* required : {"model", "alpha", "beta", "n", "w", "dt", "t_end"})
        if (!seen.count(required))
            throw ConfigError(std::string("config: missing required key '") + required + "'");

    cfg.validate();
    return cfg;
}

std::string render_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "name = " << cfg.name << "\n";
    os << "model = " << to_string(cfg.model) << "\n";
    os << "alpha = " << format_double(cfg.alpha) << "\n";
    os << "beta = " << format_double(cfg.beta) << "\n";
    os << "u0 = " << cfg.u0 << "\n";
    os << "u0_speed = " << format_double(cfg.u0_speed) << "\n";
    os << "beta_st = " << format_double(cfg.beta_st) << "\n";
    os << "eps_nl = " << format_double(cfg.eps_nl) << "\n";
    os << "eps_disp = " << format_double(cfg.eps_disp) << "\n";
    os << "bbm_eps = " << format_double(cfg.bbm_eps) << "\n";
    os << "transport = " << format_double(cfg.transport) << "\n";
    os << "n = " << cfg.n << "\n";
    os << "w = " << format_double(cfg.w) << "\n";
    os << "dt = " << format_double(cfg.dt) << "\n";
    os << "t_end = " << format_double(cfg.t_end) << "\n";
    os << "diag_stride = " << cfg.diag_stride << "\n";
    os << "dealias = " << (cfg.dealias ? "true" : "false") << "\n";
    os << "newton_tol = " << format_double(cfg.newton_tol) << "\n";
    os << "newton_max_iter = " << cfg.newton_max_iter << "\n";
    os << "energy_stop = " << format_double(cfg.energy_stop) << "\n";
    os << "track_delta = " << (cfg.track_delta ? "true" : "false") << "\n";
    if (!std::isnan(cfg.delta_stop)) os << "delta_stop = " << format_double(cfg.delta_stop) << "\n";
    if (!cfg.snapshot_times.empty()) {
        os << "snapshot_times = ";
        for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i)
            os << (i ? "," : "") << format_double(cfg.snapshot_times[i]);
        os << "\n";
    }
    if (!std::isnan(cfg.fit_t_lo)) os << "fit_t_lo = " << format_double(cfg.fit_t_lo) << "\n";
    if (!std::isnan(cfg.fit_t_hi)) os << "fit_t_hi = " << format_double(cfg.fit_t_hi) << "\n";
    return os.str();
}

}  // namespace fraclab
