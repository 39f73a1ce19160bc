#include "qfc/spatial.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "qfc/parallel.hpp"

namespace qfc {

double bessel_j0(double x) {
    // series/asymptotic split at 8 with the Hart minimax coefficients,
    // via Boost.Math; abs error well under the 1e-10 contract
    return boost::math::cyl_bessel_j(0, x);
}

void RadialGrid::validate() const {
    std::string v;
    auto add = [&v](const char* m) {
        if (!v.empty()) v += "; ";
        v += m;
    };
    if (!(k_max > 0.0)) add("k_max must be > 0");
    if (n_k < 8) add("n_k must be >= 8");
    if (x.empty()) add("x grid must be nonempty");
    if (tau.empty()) add("tau grid must be nonempty");
    for (std::size_t i = 0; i + 1 < x.size(); ++i)
        if (!(x[i] < x[i + 1])) { add("x grid must be strictly increasing"); break; }
    for (std::size_t i = 0; i + 1 < tau.size(); ++i)
        if (!(tau[i] < tau[i + 1])) { add("tau grid must be strictly increasing"); break; }
    if (!x.empty() && x.front() < 0.0) add("x must be >= 0");
    if (!tau.empty() && tau.front() < 0.0) add("tau must be >= 0");
    if (!v.empty()) throw DomainError("invalid radial grid: " + v);
}

void FilterConfig::validate() const {
    if (!(attenuation >= 0.0 && attenuation <= 1.0))
        throw DomainError("filter attenuation must lie in [0, 1]");
}

RadialGrid make_radial_grid(const MeanFieldState& mf, double x_max, int n_x,
                            double tau_max, int n_tau) {
    if (!(x_max > 0.0) || n_x < 2 || !(tau_max >= 0.0) || n_tau < 1)
        throw DomainError("make_radial_grid: bad output sampling");
    RadialGrid grid;
    grid.k_max = 20.0 * std::sqrt(mf.mass() * std::max(mf.mu(), mf.gamma()));
    grid.n_k = 4096;
    grid.x.resize(n_x);
    for (int i = 0; i < n_x; ++i)
        grid.x[i] = x_max * static_cast<double>(i) / (n_x - 1);
    grid.tau.resize(n_tau);
    for (int j = 0; j < n_tau; ++j)
        grid.tau[j] = n_tau > 1 ? tau_max * static_cast<double>(j) / (n_tau - 1)
                                : 0.0;
    return grid;
}

namespace {

/// Composite-Simpson weights over [0, k_max] with n intervals (n forced even).
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;

    Quadrature(double k_max, int n) {
        if (n % 2) ++n;
        const double h = k_max / n;
        nodes.resize(n + 1);
        weights.resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            nodes[i] = i * h;
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            weights[i] = w * h / 3.0;
        }
    }
};

}  // namespace

std::pair<Complex, Complex> hankel_moment(const MeanFieldState& mf, double tau,
                                          double x, const RadialGrid& grid) {
    grid.validate();
    if (!(x >= 0.0) || !(tau >= 0.0))
        throw DomainError("hankel_moment: need x >= 0 and tau >= 0");
    const Quadrature quad(grid.k_max, grid.n_k);
    Complex n_acc{}, c_acc{};
    for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
        const double k = quad.nodes[i];
        const DelayedMoments dm = delayed_moments(k, mf, tau);
        const double f = quad.weights[i] * k * bessel_j0(k * x);
        n_acc += f * dm.occupation;
        c_acc += f * dm.pair;
    }
    const double norm = 1.0 / (2.0 * std::numbers::pi);
    return {norm * n_acc, norm * c_acc};
}

CorrelationField correlation_field(const MeanFieldState& mf,
                                   const RadialGrid& grid) {
    grid.validate();
    const Quadrature quad(grid.k_max, grid.n_k);
    const std::size_t nq = quad.nodes.size();
    const std::size_t nx = grid.x.size();
    const std::size_t nt = grid.tau.size();

    // delayed moments per (tau column, k node), weighted by w_i k_i / 2 pi
    std::vector<Complex> nk(nt * nq), ck(nt * nq);
    parallel_for(nt, [&](std::size_t j) {
        for (std::size_t i = 0; i < nq; ++i) {
            const DelayedMoments dm = delayed_moments(quad.nodes[i], mf, grid.tau[j]);
            const double f = quad.weights[i] * quad.nodes[i] /
                             (2.0 * std::numbers::pi);
            nk[j * nq + i] = f * dm.occupation;
            ck[j * nq + i] = f * dm.pair;
        }
    });

    // J0 table per (x row, k node); reused across all tau columns
    std::vector<double> j0(nx * nq);
    parallel_for(nx, [&](std::size_t ix) {
        for (std::size_t i = 0; i < nq; ++i)
            j0[ix * nq + i] = bessel_j0(quad.nodes[i] * grid.x[ix]);
    });

    CorrelationField field;
    field.x = grid.x;
    field.tau = grid.tau;
    field.density_corr.resize(nx * nt);
    field.pair_corr.resize(nx * nt);
    parallel_for(nx, [&](std::size_t ix) {
        for (std::size_t j = 0; j < nt; ++j) {
            Complex n_acc{}, c_acc{};
            const double* row = &j0[ix * nq];
            const Complex* nrow = &nk[j * nq];
            const Complex* crow = &ck[j * nq];
            for (std::size_t i = 0; i < nq; ++i) {
                n_acc += row[i] * nrow[i];
                c_acc += row[i] * crow[i];
            }
            field.density_corr[field.index(ix, j)] = n_acc;
            field.pair_corr[field.index(ix, j)] = c_acc;
        }
    });

    // noncondensed density: the x = 0, tau = 0 value of the same quadrature
    {
        double dn = 0.0;
        for (std::size_t i = 0; i < nq; ++i) {
            const ModeMoments mm = steady_moments(quad.nodes[i], mf);
            dn += quad.weights[i] * quad.nodes[i] * mm.occupation /
                  (2.0 * std::numbers::pi);
        }
        field.noncondensed_density = dn;
    }
    return field;
}

G2Map g2_map(const MeanFieldState& mf, const FilterConfig& filter,
             const RadialGrid& grid) {
    filter.validate();
    const CorrelationField field = correlation_field(mf, grid);
    const Complex psi_f = filter.attenuation * mf.psi0;
    const double pf2 = std::norm(psi_f);
    const Complex pf_conj2 = std::conj(psi_f) * std::conj(psi_f);
    const double dn = field.noncondensed_density;
    const double den = (pf2 + dn) * (pf2 + dn);

    G2Map map;
    map.x = grid.x;
    map.tau = grid.tau;
    map.noncondensed_density = dn;
    map.filter = filter.attenuation;
    map.origin_cutoff_dependent =
        !grid.x.empty() && grid.x.front() == 0.0 &&
        !grid.tau.empty() && grid.tau.front() == 0.0;
    map.values.assign(grid.x.size() * grid.tau.size(), 1.0);
    if (den == 0.0) return map;  // fully attenuated empty cavity: g2 = 1

    parallel_for(grid.x.size(), [&](std::size_t ix) {
        for (std::size_t j = 0; j < grid.tau.size(); ++j) {
            const Complex n_xt = field.density_corr[field.index(ix, j)];
            const Complex c_xt = field.pair_corr[field.index(ix, j)];
            const double num = std::real(pf2 * n_xt + pf_conj2 * c_xt) +
                               std::norm(n_xt) + std::norm(c_xt);
            map.values[map.index(ix, j)] = 1.0 + num / den;
        }
    });
    return map;
}

BandMetric temporal_band_metric(const G2Map& map) {
    BandMetric best;
    bool found = false;
    for (std::size_t ix = 0; ix < map.x.size(); ++ix) {
        if (map.x[ix] == 0.0) continue;  // the (0,0)-adjacent column is cutoff-laden
        for (std::size_t j = 0; j < map.tau.size(); ++j) {
            const double v = map.at(ix, j);
            if (!found || v < best.g2_min) {
                best.g2_min = v;
                best.x_min = map.x[ix];
                found = true;
            }
        }
    }
    if (!found) throw DomainError("temporal_band_metric: map has no x > 0 rows");
    best.depth = 1.0 - best.g2_min;
    return best;
}

}  // namespace qfc
