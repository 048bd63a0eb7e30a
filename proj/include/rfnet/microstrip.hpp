#pragma once

#include <cmath>

#include "rfnet/errors.hpp"
#include "rfnet/network.hpp"

// Quasi-static microstrip models: Hammerstad-Jensen closed forms for Z0 and
// eps_eff, width synthesis by bisection, and lossy transmission-line blocks.
// Dispersion is not modeled; eps_eff is taken frequency-independent, which is
// adequate for thin FR-4 in the low GHz range. Loss is dielectric only.

namespace rfnet {

inline constexpr double kC0Mm = kC0 * 1e3; // mm/s

struct Substrate {
    double eps_r = 4.6;
    double h_mm = 1.0;
    double tan_d = 0.0;
    friend bool operator==(const Substrate&, const Substrate&) = default;
};

struct LineGeometry {
    double w_mm = 0.0;
    double l_mm = 0.0;
    friend bool operator==(const LineGeometry&, const LineGeometry&) = default;
};

struct LineParams {
    double z0_ohm = 0.0;
    double eps_eff = 1.0;
};

namespace ms_detail {

inline void check_substrate(const Substrate& sub) {
    if (!(sub.eps_r >= 1.0) || !(sub.h_mm > 0.0) || !(sub.tan_d >= 0.0))
        throw ValidityError("substrate needs eps_r >= 1, h > 0, tan_d >= 0");
}

// Aspect ratio window the closed forms are trusted over.
inline constexpr double kUMin = 0.05;
inline constexpr double kUMax = 20.0;

inline double checked_u(double w_mm, const Substrate& sub) {
    check_substrate(sub);
    if (!(w_mm > 0.0))
        throw ValidityError("line width must be positive");
    const double u = w_mm / sub.h_mm;
    if (u < kUMin || u > kUMax)
        throw ValidityError("w/h outside the modeled range [0.05, 20]");
    return u;
}

// Homogeneous (air) characteristic impedance.
inline double z01_air(double u) {
    const double fu = 6.0 + (2.0 * kPi - 6.0) *
                                std::exp(-std::pow(30.666 / u, 0.7528));
    return kEta0 / (2.0 * kPi) *
           std::log(fu / u + std::sqrt(1.0 + (2.0 / u) * (2.0 / u)));
}

inline double eps_eff_of(double u, double er) {
    const double a = 1.0 +
                     std::log((std::pow(u, 4) + std::pow(u / 52.0, 2)) /
                              (std::pow(u, 4) + 0.432)) /
                         49.0 +
                     std::log(1.0 + std::pow(u / 18.1, 3)) / 18.7;
    const double b = 0.564 * std::pow((er - 0.9) / (er + 3.0), 0.053);
    return (er + 1.0) / 2.0 +
           (er - 1.0) / 2.0 * std::pow(1.0 + 10.0 / u, -a * b);
}

} // namespace ms_detail

inline LineParams analyze_line(double w_mm, const Substrate& sub) {
    const double u = ms_detail::checked_u(w_mm, sub);
    LineParams p;
    p.eps_eff = ms_detail::eps_eff_of(u, sub.eps_r);
    p.z0_ohm = ms_detail::z01_air(u) / std::sqrt(p.eps_eff);
    return p;
}

// Width whose analyzed impedance matches z0_ohm. Z0 is strictly decreasing
// in w/h, so plain bisection over the validity window converges; targets
// outside the achievable range throw.
inline double synthesize_width(double z0_ohm, const Substrate& sub) {
    ms_detail::check_substrate(sub);
    double ulo = ms_detail::kUMin, uhi = ms_detail::kUMax;
    const double zlo = analyze_line(uhi * sub.h_mm, sub).z0_ohm;
    const double zhi = analyze_line(ulo * sub.h_mm, sub).z0_ohm;
    if (!(z0_ohm >= zlo && z0_ohm <= zhi))
        throw SynthesisError("target impedance not reachable on this substrate");
    while ((uhi - ulo) * sub.h_mm > 1e-13) {
        const double um = 0.5 * (ulo + uhi);
        if (analyze_line(um * sub.h_mm, sub).z0_ohm > z0_ohm)
            ulo = um;
        else
            uhi = um;
    }
    return 0.5 * (ulo + uhi) * sub.h_mm;
}

inline double guided_wavelength_mm(double w_mm, const Substrate& sub,
                                   double f_hz) {
    if (!(f_hz > 0.0))
        throw ValidityError("frequency must be positive");
    return kC0Mm / (f_hz * std::sqrt(analyze_line(w_mm, sub).eps_eff));
}

inline double quarter_wave_mm(double w_mm, const Substrate& sub, double f_hz) {
    return 0.25 * guided_wavelength_mm(w_mm, sub, f_hz);
}

inline double dielectric_loss_np_per_mm(double w_mm, const Substrate& sub,
                                        double f_hz) {
    if (sub.tan_d == 0.0 || sub.eps_r <= 1.0 + 1e-12)
        return 0.0;
    const double ee = analyze_line(w_mm, sub).eps_eff;
    return kPi * f_hz / kC0Mm * sub.eps_r * (ee - 1.0) * sub.tan_d /
           (std::sqrt(ee) * (sub.eps_r - 1.0));
}

inline Abcd line_abcd(const LineGeometry& geom, const Substrate& sub,
                      double f_hz) {
    if (!(geom.l_mm > 0.0))
        throw ValidityError("line length must be positive");
    const LineParams p = analyze_line(geom.w_mm, sub);
    const double beta =
        2.0 * kPi * f_hz * std::sqrt(p.eps_eff) / kC0Mm; // rad/mm
    const double alpha = dielectric_loss_np_per_mm(geom.w_mm, sub, f_hz);
    const cxd gl = cxd(alpha, beta) * geom.l_mm;
    Abcd m;
    m.a = std::cosh(gl);
    m.b = p.z0_ohm * std::sinh(gl);
    m.c = std::sinh(gl) / p.z0_ohm;
    m.d = m.a;
    return m;
}

inline NetworkBlock microstrip_line(const LineGeometry& geom,
                                    const Substrate& sub,
                                    const FrequencyGrid& grid) {
    return build_block(
        grid, [&](double f) { return abcd_to_s(line_abcd(geom, sub, f)); },
        "microstrip_line");
}

} // namespace rfnet
