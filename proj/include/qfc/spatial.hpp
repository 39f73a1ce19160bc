#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qfc/correlations.hpp"
#include "qfc/params.hpp"

namespace qfc {

/// Bessel function J0, absolute error < 1e-10 on the full real axis.
double bessel_j0(double x);

/// Radial quadrature and output sampling for the real-space transforms.
struct RadialGrid {
    double k_max = 0.0;       ///< UV cutoff
    int n_k = 4096;           ///< composite-Simpson intervals (forced even)
    std::vector<double> x;    ///< output separations, ascending
    std::vector<double> tau;  ///< output delays, ascending

    void validate() const;
};

/// Default cutoff 20 sqrt(m * max(mu, gamma)) resolves the Bogoliubov knee
/// and the diffusive ring; 4096 Simpson intervals.
RadialGrid make_radial_grid(const MeanFieldState& mf, double x_max, int n_x,
                            double tau_max, int n_tau);

/// Radial Fourier (Hankel) transform of the delayed moments at one point:
///   f(x, tau) = (1/2pi) Int_0^kmax k f_k(tau) J0(k x) dk.
/// Returns (n(x,tau), c(x,tau)).
std::pair<Complex, Complex> hankel_moment(const MeanFieldState& mf, double tau,
                                          double x, const RadialGrid& grid);

/// n(x,tau) and c(x,tau) on the full grid, row-major [x][tau], plus the
/// noncondensed density dn = n(0,0) at this cutoff.
struct CorrelationField {
    std::vector<double> x;
    std::vector<double> tau;
    std::vector<Complex> density_corr;  ///< n(x, tau)
    std::vector<Complex> pair_corr;     ///< c(x, tau)
    double noncondensed_density = 0.0;  ///< dn = n(0, 0)

    std::size_t index(std::size_t ix, std::size_t it) const {
        return ix * tau.size() + it;
    }
};
CorrelationField correlation_field(const MeanFieldState& mf,
                                   const RadialGrid& grid);

/// SLM model: the condensate amplitude is attenuated to psi_f = F psi0;
/// fluctuation modes pass untouched.  The mask radius is metadata only.
struct FilterConfig {
    double attenuation = 1.0;  ///< F in [0, 1]
    double mask_radius = 0.0;  ///< documentation only

    void validate() const;
};

/// Density-density correlation map
///   g2(x,tau) = 1 + [Re(|psi_f|^2 n + psi_f*^2 c) + |n|^2 + |c|^2]
///                   / (|psi_f|^2 + dn)^2.
/// With F = 0 and dn = 0 (g = 0) the map is identically 1.
struct G2Map {
    std::vector<double> x;
    std::vector<double> tau;
    std::vector<double> values;  ///< row-major [x][tau]
    double noncondensed_density = 0.0;
    double filter = 0.0;
    bool origin_cutoff_dependent = false;  ///< grid contains the (0,0) point

    std::size_t index(std::size_t ix, std::size_t it) const {
        return ix * tau.size() + it;
    }
    double at(std::size_t ix, std::size_t it) const {
        return values[index(ix, it)];
    }
};
G2Map g2_map(const MeanFieldState& mf, const FilterConfig& filter,
             const RadialGrid& grid);

/// Location and depth of the deepest temporal correlation band:
/// x* = argmin over x > 0 of min over tau of g2, depth = 1 - g2_min.
struct BandMetric {
    double x_min = 0.0;
    double g2_min = 1.0;
    double depth = 0.0;
};
BandMetric temporal_band_metric(const G2Map& map);

}  // namespace qfc
