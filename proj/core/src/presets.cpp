#include "fraclab/presets.hpp"

#include <cmath>

#include "fraclab/errors.hpp"

namespace fraclab {

Scale scale_from_string(const std::string& s) {
    if (s == "full") return Scale::full;
    if (s == "desk") return Scale::desk;
    throw ConfigError("unknown scale '" + s + "' (expected full or desk)");
}

const char* to_string(Scale s) { return s == Scale::full ? "full" : "desk"; }

namespace {

ExperimentConfig base_config(const std::string& name, ModelKind model, double alpha, double beta,
                             int n, double w, long n_steps, double t_end, long stride) {
    ExperimentConfig c;
    c.name = name;
    c.model = model;
    c.alpha = alpha;
    c.beta = beta;
    c.n = n;
    c.w = w;
    c.t_end = t_end;
    c.dt = t_end / static_cast<double>(n_steps);
    c.diag_stride = stride;
    return c;
}

std::map<std::string, Preset> build_registry() {
    std::map<std::string, Preset> reg;

    {
        Preset p;
        p.label = "BO soliton propagation test: alpha=1, u0 = Q_c with c=2, run to t=1";
        p.config = base_config("fkdv-soliton-test", ModelKind::fkdv, 1.0, 0.0, 1 << 14, 100.0,
                               10000, 1.0, 20);
        p.config.u0 = "bo_soliton";
        p.config.u0_speed = 2.0;
        p.config.snapshot_times = {1.0};
        reg["fkdv-soliton-test"] = p;
    }
    {
        Preset p;
        p.label = "fBBM soliton propagation test: alpha=1, travelling wave with c=2, run to t=1";
        p.config = base_config("fbbm-soliton-test", ModelKind::fbbm, 1.0, 0.0, 1 << 14, 100.0,
                               10000, 1.0, 20);
        p.config.u0 = "fbbm_soliton";
        p.config.u0_speed = 2.0;
        p.config.snapshot_times = {1.0};
        reg["fbbm-soliton-test"] = p;
    }
    {
        Preset p;
        p.label = "decomposition into solitons: fkdv alpha=0.6, u0 = 5 sech^2(x)";
        p.config = base_config("fkdv-decompose-a06", ModelKind::fkdv, 0.6, 5.0, 1 << 16, 7.0,
                               256000, 5.0, 1000);
        p.config.snapshot_times = {5.0};
        reg["fkdv-decompose-a06"] = p;
    }
    {
        Preset p;
        p.label = "sub-threshold radiation: fkdv alpha=0.5, u0 = sech^2(x)";
        p.config = base_config("fkdv-radiation-a05", ModelKind::fkdv, 0.5, 1.0, 1 << 14, 10.0,
                               4000, 5.0, 8);
        reg["fkdv-radiation-a05"] = p;
    }
    {
        Preset p;
        p.label = "L2-critical blow-up: fkdv alpha=0.5, u0 = 3 sech^2(x)";
        p.config = base_config("fkdv-critical-blowup", ModelKind::fkdv, 0.5, 3.0, 1 << 16, 20.0,
                               10000, 8.0, 4);
        p.config.snapshot_times = {7.0};
        p.config.fit_t_lo = 4.1993;
        p.fits.norm_fits = true;
        p.fits.fourier_at_end = true;
        reg["fkdv-critical-blowup"] = p;
    }
    {
        Preset p;
        p.label = "L2-supercritical blow-up: fkdv alpha=0.45, u0 = 3 sech^2(x)";
        p.config = base_config("fkdv-super-blowup-a045", ModelKind::fkdv, 0.45, 3.0, 1 << 16, 20.0,
                               10000, 2.0, 4);
        p.fits.norm_fits = true;
        p.fits.fourier_at_end = true;
        p.fits.tail_window = 0.2;
        reg["fkdv-super-blowup-a045"] = p;
    }
    {
        Preset p;
        p.label = "energy-supercritical blow-up: fkdv alpha=0.2, u0 = sech^2(x)";
        p.config = base_config("fkdv-esuper-blowup-a02", ModelKind::fkdv, 0.2, 1.0, 1 << 16, 20.0,
                               10000, 3.2, 4);
        p.config.fit_t_lo = 2.4497;
        p.fits.norm_fits = true;
        p.fits.fourier_at_end = true;
        reg["fkdv-esuper-blowup-a02"] = p;
    }
    {
        Preset p;
        p.label = "small-data global run: fkdv alpha=0.2, u0 = 0.1 sech^2(x)";
        p.config = base_config("fkdv-small-a02", ModelKind::fkdv, 0.2, 0.1, 1 << 14, 20.0,
                               10000, 20.0, 20);
        reg["fkdv-small-a02"] = p;
    }
    {
        Preset p;
        p.label = "solitonic decomposition: fbbm alpha=0.5, u0 = 10 sech^2(x)";
        p.config = base_config("fbbm-solitons-a05", ModelKind::fbbm, 0.5, 10.0, 1 << 15, 20.0,
                               80000, 10.0, 160);
        p.config.snapshot_times = {10.0};
        reg["fbbm-solitons-a05"] = p;
    }
    {
        Preset p;
        p.label = "cusp formation: fbbm alpha=0.2, u0 = sech^2(x)";
        p.config = base_config("fbbm-cusp-a02", ModelKind::fbbm, 0.2, 1.0, 1 << 16, 3.0,
                               20000, 6.0, 20);
        p.config.track_delta = true;
        p.fits.fourier_at_end = true;
        p.fits.delta_time = true;
        reg["fbbm-cusp-a02"] = p;
    }
    {
        Preset p;
        p.label = "small-data long run: fbbm alpha=0.2, u0 = 0.1 sech^2(x)";
        p.config = base_config("fbbm-small-a02", ModelKind::fbbm, 0.2, 0.1, 1 << 14, 20.0,
                               20000, 100.0, 40);
        reg["fbbm-small-a02"] = p;
    }
    {
        Preset p;
        p.label = "small negative data radiated away: whitham, u0 = -0.1 sech^2(x)";
        p.config = base_config("whitham-neg-small", ModelKind::whitham, 0.0, -0.1, 1 << 14, 20.0,
                               10000, 20.0, 20);
        reg["whitham-neg-small"] = p;
    }
    {
        Preset p;
        p.label = "cubic-root cusp after t_c: whitham, u0 = -sech^2(x)";
        p.config = base_config("whitham-neg-cusp", ModelKind::whitham, 0.0, -1.0, 1 << 16, 5.0,
                               20000, 2.1, 20);
        p.config.track_delta = true;
        p.config.delta_stop = 1e-6;
        p.fits.fourier_at_end = true;
        p.fits.delta_time = true;
        reg["whitham-neg-cusp"] = p;
    }
    {
        Preset p;
        p.label = "square-root cusp before t_c: whitham, u0 = +sech^2(x), dealiased";
        p.config = base_config("whitham-pos-cusp", ModelKind::whitham, 0.0, 1.0, 1 << 16, 5.0,
                               20000, 1.3, 20);
        p.config.dealias = true;
        p.config.track_delta = true;
        p.config.delta_stop = 1e-6;
        p.fits.fourier_at_end = true;
        p.fits.delta_time = true;
        reg["whitham-pos-cusp"] = p;
    }
    {
        Preset p;
        p.label = "negative-dispersion cusp: fkdv alpha=-0.5, u0 = -sech^2(x)";
        p.config = base_config("fkdv-neg-alpha-cusp", ModelKind::fkdv, -0.5, -1.0, 1 << 16, 5.0,
                               20000, 2.5, 20);
        p.config.track_delta = true;
        p.config.delta_stop = 1e-6;
        p.fits.fourier_at_end = true;
        p.fits.delta_time = true;
        reg["fkdv-neg-alpha-cusp"] = p;
    }
    {
        Preset p;
        p.kind = PresetKind::soliton_family;
        p.label = "mass/energy curve of the c=1 soliton family over alpha";
        p.family_alphas = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.45};
        p.family_n = 1 << 16;
        p.family_w = 100.0;
        reg["soliton-family"] = p;
    }
    {
        Preset p;
        p.kind = PresetKind::sweep_fkdv;
        p.label = "blow-up time vs eps: fkdv alpha=0.2, u0 = eps sech^2(x)";
        p.config = base_config("eps-sweep-fkdv", ModelKind::fkdv, 0.2, 1.0, 1 << 16, 20.0,
                               10000, 1.0, 20);
        p.eps_values = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1};
        p.sweep_t_end_coef = 4.0;
        reg["eps-sweep-fkdv"] = p;
    }
    {
        Preset p;
        p.kind = PresetKind::sweep_fbbm;
        p.label = "blow-up time vs eps: fbbm alpha=0.2 in the commoving frame";
        p.config = base_config("eps-sweep-fbbm", ModelKind::fbbm, 0.2, 1.0, 1 << 15, 10.0,
                               20000, 1.0, 20);
        p.config.track_delta = true;
        p.config.delta_stop = 1e-6;
        p.eps_values = {0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09, 0.1};
        p.sweep_t_end_coef = 4.5;
        reg["eps-sweep-fbbm"] = p;
    }

    for (auto& [name, preset] : reg)
        if (preset.kind != PresetKind::soliton_family) preset.config.name = name;
    return reg;
}

}  // namespace

const std::map<std::string, Preset>& preset_registry() {
    static const std::map<std::string, Preset> registry = build_registry();
    return registry;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, preset] : preset_registry()) names.push_back(name);
    return names;
}

const Preset& find_preset(const std::string& name) {
    const auto& reg = preset_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw ConfigError("unknown preset '" + name + "'");
    return it->second;
}

ExperimentConfig scaled_config(const ExperimentConfig& config, Scale scale) {
    if (scale == Scale::full) return config;
    ExperimentConfig c = config;
    c.n = std::max(8, config.n / 4);
    c.dt = config.dt * 4.0;
    c.diag_stride = std::max<long>(1, config.diag_stride / 4);
    while (c.n_steps() % c.diag_stride != 0) --c.diag_stride;
    return c;
}

}  // namespace fraclab
