#include "fraclab/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fraclab {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::fkdv: return "fkdv";
        case ModelKind::fbbm: return "fbbm";
        case ModelKind::whitham: return "whitham";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string& name) {
    if (name == "fkdv") return ModelKind::fkdv;
    if (name == "fbbm") return ModelKind::fbbm;
    if (name == "whitham") return ModelKind::whitham;
    throw std::invalid_argument("unknown model kind: " + name);
}

void ModelSpec::validate() const {
    switch (kind) {
        case ModelKind::fkdv:
            if (!(alpha > -1.0) || !(alpha <= 2.0))
                throw std::invalid_argument("fkdv: alpha must lie in (-1, 2]");
            break;
        case ModelKind::fbbm:
            if (!(alpha > 0.0) || !(alpha <= 2.0))
                throw std::invalid_argument("fbbm: alpha must lie in (0, 2]");
            if (!(bbm_eps > 0.0))
                throw std::invalid_argument("fbbm: bbm_eps must be positive");
            if (transport != 0.0 && transport != 1.0)
                throw std::invalid_argument("fbbm: transport must be 0 or 1");
            break;
        case ModelKind::whitham:
            if (beta_st < 0.0)
                throw std::invalid_argument("whitham: surface tension must be >= 0");
            break;
    }
}

ModelSpec ModelSpec::fkdv(double alpha, double eps_disp, double eps_nl) {
    ModelSpec m;
    m.kind = ModelKind::fkdv;
    m.alpha = alpha;
    m.eps_disp = eps_disp;
    m.eps_nl = eps_nl;
    m.validate();
    return m;
}

ModelSpec ModelSpec::fbbm(double alpha, double bbm_eps, double eps_nl, double transport) {
    ModelSpec m;
    m.kind = ModelKind::fbbm;
    m.alpha = alpha;
    m.bbm_eps = bbm_eps;
    m.eps_nl = eps_nl;
    m.transport = transport;
    m.validate();
    return m;
}

ModelSpec ModelSpec::whitham(double beta_st) {
    ModelSpec m;
    m.kind = ModelKind::whitham;
    m.beta_st = beta_st;
    m.validate();
    return m;
}

FourierSymbol linear_multiplier(const ModelSpec& model) {
    model.validate();
    switch (model.kind) {
        case ModelKind::fkdv: {
            const double eps = model.eps_disp;
            const double alpha = model.alpha;
            return FourierSymbol(SymbolParity::odd, [eps, alpha](double xi) -> std::complex<double> {
                if (xi == 0.0) return {0.0, 0.0};
                return eps * I * xi * std::pow(std::abs(xi), alpha);
            });
        }
        case ModelKind::whitham: {
            const double beta = model.beta_st;
            return FourierSymbol(SymbolParity::odd, [beta](double xi) -> std::complex<double> {
                return I * xi * whitham_phase_speed(xi, beta);
            });
        }
        case ModelKind::fbbm: {
            const double tr = model.transport;
            const double eps = model.bbm_eps;
            const double alpha = model.alpha;
            return FourierSymbol(SymbolParity::odd, [tr, eps, alpha](double xi) -> std::complex<double> {
                return -I * xi * tr / (1.0 + eps * std::pow(std::abs(xi), alpha));
            });
        }
    }
    throw std::logic_error("linear_multiplier: unreachable");
}

FourierSymbol flux_multiplier(const ModelSpec& model) {
    model.validate();
    const double eps_nl = model.eps_nl;
    if (model.kind == ModelKind::fbbm) {
        const double eps = model.bbm_eps;
        const double alpha = model.alpha;
        return FourierSymbol(SymbolParity::odd, [eps_nl, eps, alpha](double xi) -> std::complex<double> {
            return -eps_nl * I * xi / (1.0 + eps * std::pow(std::abs(xi), alpha));
        });
    }
    return FourierSymbol(SymbolParity::odd, [eps_nl](double xi) -> std::complex<double> {
        return -eps_nl * I * xi;
    });
}

SpectralField nonlinear_term(const ModelSpec& model, const SpectralField& u, bool dealias) {
    const Grid& grid = u.grid();
    std::vector<double> sq(grid.size());
    for (int j = 0; j < grid.size(); ++j) {
        const double v = u.physical()[j];
        sq[j] = 0.5 * v * v;
    }
    SpectralField half_sq = SpectralField::from_samples(grid, std::move(sq));
    if (dealias) half_sq = dealias_two_thirds(half_sq);
    return apply_symbol(half_sq, flux_multiplier(model));
}

double hamiltonian(const ModelSpec& model, const SpectralField& u) {
    model.validate();
    switch (model.kind) {
        case ModelKind::fkdv: {
            const double semi = h_alpha_seminorm(u, model.alpha);
            return 0.5 * semi * semi - integral_cubed(u) / 6.0;
        }
        case ModelKind::whitham: {
            const double beta = model.beta_st;
            const double semi =
                weighted_l2_norm(u, [beta](double xi) { return whitham_phase_speed(xi, beta); });
            return 0.5 * semi * semi - integral_cubed(u) / 6.0;
        }
        case ModelKind::fbbm: {
            const double l2 = l2_norm(u);
            return 0.5 * (l2 * l2 + integral_cubed(u) / 3.0);
        }
    }
    throw std::logic_error("hamiltonian: unreachable");
}

double fbbm_energy(const SpectralField& u, double alpha) {
    const double l2 = l2_norm(u);
    const double semi = h_alpha_seminorm(u, alpha);
    return l2 * l2 + semi * semi;
}

double conserved_energy(const ModelSpec& model, const SpectralField& u) {
    if (model.kind == ModelKind::fbbm) return fbbm_energy(u, model.alpha);
    return hamiltonian(model, u);
}

double quadratic_invariant(const ModelSpec& model, const SpectralField& u) {
    if (model.kind == ModelKind::fbbm) return fbbm_energy(u, model.alpha);
    const double l2 = l2_norm(u);
    return l2 * l2;
}

double burgers_breakup_time(double beta, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("burgers_breakup_time: eps must be positive");
    if (beta == 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(3.0, 1.5) / (4.0 * std::abs(beta) * eps);
}

}  // namespace fraclab
