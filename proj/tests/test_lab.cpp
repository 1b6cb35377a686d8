#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fraclab/csv.hpp"
#include "fraclab/errors.hpp"
#include "fraclab/runner.hpp"

using namespace fraclab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

fs::path test_out() {
    const fs::path dir = fs::temp_directory_path() / "fraclab_unit_out";
    return dir;
}

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.name = "tiny";
    cfg.model = ModelKind::fkdv;
    cfg.alpha = 0.6;
    cfg.beta = 1.0;
    cfg.n = 256;
    cfg.w = 10.0;
    cfg.dt = 1e-2;
    cfg.t_end = 0.5;
    cfg.diag_stride = 10;
    return cfg;
}

}  // namespace

TEST_CASE("parse_config accepts the documented run description") {
    const ExperimentConfig cfg =
        parse_config("model=fkdv\nalpha=0.6\nbeta=5\nn=16384\nw=7\ndt=5e-4\nt_end=5");
    CHECK(cfg.model == ModelKind::fkdv);
    CHECK(cfg.alpha == 0.6);
    CHECK(cfg.beta == 5.0);
    CHECK(cfg.n == 16384);
    CHECK(cfg.w == 7.0);
    CHECK(cfg.dt == 5e-4);
    CHECK(cfg.t_end == 5.0);
    // defaults
    CHECK(cfg.newton_tol == 1e-12);
    CHECK(cfg.energy_stop == 1e-3);
    CHECK(cfg.dealias == false);
    CHECK(cfg.n_steps() == 10000);
}

TEST_CASE("parse_config error paths") {
    CHECK_THROWS_AS(parse_config(""), ConfigError);

    try {
        parse_config("alpha=abc\nmodel=fkdv\nbeta=1\nn=64\nw=1\ndt=0.1\nt_end=1");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }

    try {
        parse_config("model=fkdv\nalpha=1\nbeta=1\nn=64\nw=1\ndt=0.1\nt_end=1\nbogus=3");
        CHECK(false);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
        CHECK(std::string(e.what()).find("line 8") != std::string::npos);
    }

    // zero-length runs are rejected
    CHECK_THROWS_AS(parse_config("model=fkdv\nalpha=1\nbeta=1\nn=64\nw=1\ndt=0.1\nt_end=0"),
                    ConfigError);
    // comments and blank lines are fine
    CHECK_NOTHROW(parse_config(
        "# a run\nmodel=fkdv\nalpha=1\nbeta=1\n\nn=64\nw=1\ndt=0.1\nt_end=1 # trailing"));
}

TEST_CASE("registry holds every documented preset") {
    const char* expected[] = {
        "fkdv-soliton-test", "fbbm-soliton-test", "fkdv-decompose-a06", "fkdv-radiation-a05",
        "fkdv-critical-blowup", "fkdv-super-blowup-a045", "fkdv-esuper-blowup-a02",
        "fkdv-small-a02", "fbbm-solitons-a05", "fbbm-cusp-a02", "fbbm-small-a02",
        "whitham-neg-small", "whitham-neg-cusp", "whitham-pos-cusp", "fkdv-neg-alpha-cusp",
        "soliton-family", "eps-sweep-fkdv", "eps-sweep-fbbm"};
    const auto& reg = preset_registry();
    CHECK(reg.size() == 18);
    for (const char* name : expected) CHECK(reg.count(name) == 1);
    CHECK_THROWS_AS(find_preset("no-such-preset"), ConfigError);
}

TEST_CASE("render/parse round-trip for every preset configuration") {
    for (const auto& [name, preset] : preset_registry()) {
        if (preset.kind == PresetKind::soliton_family) continue;
        const ExperimentConfig parsed = parse_config(render_config(preset.config));
        CHECK(parsed == preset.config);
        // and at desk scale
        const ExperimentConfig desk = scaled_config(preset.config, Scale::desk);
        CHECK(parse_config(render_config(desk)) == desk);
    }
}

TEST_CASE("desk scaling halves n and the step count twice") {
    const ExperimentConfig full = find_preset("fkdv-critical-blowup").config;
    const ExperimentConfig desk = scaled_config(full, Scale::desk);
    CHECK(desk.n == full.n / 4);
    CHECK(desk.dt == doctest::Approx(full.dt * 4.0));
    CHECK(desk.n_steps() == full.n_steps() / 4);
    CHECK(desk.n_steps() % desk.diag_stride == 0);
}

TEST_CASE("run_experiment writes the documented artifacts") {
    const fs::path out = test_out();
    fs::remove_all(out);

    ExperimentConfig cfg = tiny_config();
    cfg.snapshot_times = {0.25};
    FitPlan plan;  // no fits for a smooth run
    const RunOutcome run = run_experiment(cfg, plan, "tiny smooth run", out);

    CHECK(run.diagnostics.stop_reason == StopReason::completed);
    CHECK(fs::exists(run.dir / "manifest.txt"));
    CHECK(fs::exists(run.dir / "diagnostics.csv"));
    CHECK(fs::exists(run.dir / "final_state.csv"));
    CHECK(fs::exists(run.dir / "snapshot_t0.25.csv"));

    const Table diag = read_table_file((run.dir / "diagnostics.csv").string());
    CHECK(diag.header == std::vector<std::string>{"t", "sup_norm", "grad_l2", "mass",
                                                  "hamiltonian", "energy_drift", "floor"});
    CHECK(diag.rows() == 1 + cfg.n_steps() / cfg.diag_stride);
    CHECK(diag.column("t").front() == 0.0);
    CHECK(diag.column("energy_drift").front() == 0.0);

    const Table snap = read_table_file((run.dir / "snapshot_t0.25.csv").string());
    CHECK(snap.header == std::vector<std::string>{"x", "u"});
    CHECK(static_cast<int>(snap.rows()) == cfg.n);

    // the manifest echoes the exact configuration (comments carry run metadata)
    const std::string manifest = slurp(run.dir / "manifest.txt");
    CHECK(parse_config(manifest) == cfg);
    CHECK(manifest.find("stop_reason = completed") != std::string::npos);
    CHECK(manifest.find("version") != std::string::npos);
}

TEST_CASE("identical configurations produce byte-identical diagnostics") {
    const fs::path out = test_out() / "det";
    fs::remove_all(out);
    ExperimentConfig cfg = tiny_config();

    cfg.name = "det_a";
    const RunOutcome a = run_experiment(cfg, FitPlan{}, "determinism A", out);
    cfg.name = "det_b";
    const RunOutcome b = run_experiment(cfg, FitPlan{}, "determinism B", out);
    CHECK(slurp(a.dir / "diagnostics.csv") == slurp(b.dir / "diagnostics.csv"));
}

TEST_CASE("run_experiment rejects non-evolve presets and bad names") {
    const fs::path out = test_out() / "reject";
    CHECK_THROWS_AS(run_experiment("eps-sweep-fkdv", Scale::desk, out), ConfigError);
    CHECK_THROWS_AS(run_experiment("nope", Scale::desk, out), ConfigError);
}

TEST_CASE("sweeps need at least three eps values") {
    const fs::path out = test_out() / "sweep2";
    fs::remove_all(out);
    CHECK_THROWS_AS(run_sweep("eps-sweep-fkdv", Scale::desk, {0.05, 0.1}, 1, out),
                    NumericalError);
    CHECK_THROWS_AS(run_sweep("eps-sweep-fkdv", Scale::desk, {0.05, -0.1, 0.2}, 1, out),
                    ConfigError);
    CHECK_THROWS_AS(run_sweep("fkdv-small-a02", Scale::desk, {}, 1, out), ConfigError);
}

TEST_CASE("csv numbers survive a write/read cycle at full precision") {
    Table t;
    t.header = {"a", "b"};
    t.columns = {{1.0 / 3.0, 6.02214076e23, -1e-300}, {0.0, -2.5, 3.14159265358979312}};
    std::stringstream ss;
    write_table(ss, t);
    const Table back = read_table(ss);
    for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t r = 0; r < 3; ++r) CHECK(back.columns[c][r] == t.columns[c][r]);
}
