#pragma once

#include <cmath>
#include <complex>

#include "rfnet/errors.hpp"
#include "rfnet/microstrip.hpp"
#include "rfnet/network.hpp"

// Dual-fed square patch reduced to circuit level: a cavity resonance
// estimate with the Hammerstad edge extension, one parallel-RLC-style mode
// resonator per feed, and the feed/matching line sections in front of it.
// The two feeds drive orthogonal, identical modes; coupling between the two
// feed ports is neglected, so the patch load is a diagonal two-port.

namespace rfnet {

struct PatchSpec {
    double edge_mm = 27.0;     // square patch edge
    double r_peak_ohm = 200.0; // mode resistance at resonance, per feed
    double q_total = 5.1;      // loaded Q of the fed mode
    LineGeometry approach{1.84, 36.0}; // feed line from the coupler plane
    LineGeometry match{0.26, 18.0};    // high-impedance matching section
    friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

// Open-end edge extension (Hammerstad form) at the patch aspect ratio.
inline double patch_edge_extension_mm(const PatchSpec& p, const Substrate& sub) {
    ms_detail::check_substrate(sub);
    if (!(p.edge_mm > 0.0))
        throw ValidityError("patch edge must be positive");
    const double u = p.edge_mm / sub.h_mm;
    // the patch is far wider than any feed line, so this evaluates the
    // eps_eff closed form beyond the line-model window on purpose
    const double ee = ms_detail::eps_eff_of(u, sub.eps_r);
    return 0.412 * sub.h_mm * (ee + 0.3) * (u + 0.264) /
           ((ee - 0.258) * (u + 0.8));
}

// Fundamental resonance of the square cavity, edge-extended. The cavity under
// a wide patch is dielectric-filled, so the wave speed uses eps_r itself.
inline double patch_resonance_hz(const PatchSpec& p, const Substrate& sub) {
    const double dl = patch_edge_extension_mm(p, sub);
    return kC0Mm / (2.0 * (p.edge_mm + 2.0 * dl) * std::sqrt(sub.eps_r));
}

// One radiating mode seen from its feed point.
inline cxd patch_mode_impedance(const PatchSpec& p, const Substrate& sub,
                                double f_hz) {
    const double fr = patch_resonance_hz(p, sub);
    return p.r_peak_ohm / cxd(1.0, p.q_total * (f_hz / fr - fr / f_hz));
}

// Reflection at the feed-line input plane: mode impedance transformed back
// through the matching section and the approach line.
inline cxd patch_feed_gamma(const PatchSpec& p, const Substrate& sub,
                            double f_hz) {
    cxd z = patch_mode_impedance(p, sub, f_hz);
    for (const LineGeometry* g : {&p.match, &p.approach}) {
        const Abcd m = line_abcd(*g, sub, f_hz);
        z = (m.a * z + m.b) / (m.c * z + m.d);
    }
    return (z - kZ0) / (z + kZ0);
}

// Diagonal two-port load: port 0 = x-mode feed, port 1 = y-mode feed.
inline NetworkBlock patch_load(const PatchSpec& p, const Substrate& sub,
                               const FrequencyGrid& grid) {
    return build_block(
        grid,
        [&](double f) {
            SMatrix s = SMatrix::Zero(2, 2);
            s(0, 0) = s(1, 1) = patch_feed_gamma(p, sub, f);
            return s;
        },
        "patch_load");
}

// Wave actually delivered into a radiating mode by an incident wave at the
// feed plane. Magnitude from power conservation; the (identical) feed-chain
// transmission phase is common to both modes and drops out of any
// polarization quantity, so the incident phase is kept as-is.
inline cxd mode_wave(const cxd& incident, const cxd& gamma) {
    const double refl = std::norm(gamma);
    return incident * std::sqrt(std::max(0.0, 1.0 - refl));
}

} // namespace rfnet
