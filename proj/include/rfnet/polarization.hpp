#pragma once

#include <cmath>
#include <complex>

#include "rfnet/errors.hpp"
#include "rfnet/network.hpp"

// Far-field polarization state of two orthogonal linear modes excited with
// complex amplitudes (a_x, a_y): axial ratio, ellipse tilt and rotation
// sense. Conventions: time factor exp(+jwt), wave leaving the patch toward
// the observer, so Im(conj(a_x)*a_y) > 0 rotates E from +x toward +y (left
// hand) and < 0 is right hand.

namespace rfnet {

enum class Sense { kLinear, kRhcp, kLhcp };

inline const char* to_string(Sense s) {
    switch (s) {
    case Sense::kLinear:
        return "LINEAR";
    case Sense::kRhcp:
        return "RHCP";
    case Sense::kLhcp:
        return "LHCP";
    }
    return "?";
}

struct ExcitationPair {
    cxd a_x{0.0};
    cxd a_y{0.0};
};

struct PolarizationState {
    double ar_db = 0.0;   // axial ratio, capped at kArCapDb
    double tilt_deg = 0.0; // major-axis tilt from +x, in [-90, 90)
    Sense sense = Sense::kLinear;
};

// Axial ratios above this are reported as linear polarization.
inline constexpr double kArCapDb = 60.0;

inline PolarizationState polarization_state(const ExcitationPair& e) {
    const double px = std::norm(e.a_x);
    const double py = std::norm(e.a_y);
    if (px == 0.0 && py == 0.0)
        throw PolarizationError("both mode amplitudes are zero");

    const double delta = std::arg(e.a_y) - std::arg(e.a_x);
    const double cross = std::sqrt(
        std::max(0.0, px * px + py * py + 2.0 * px * py * std::cos(2.0 * delta)));

    PolarizationState st;
    // |major|^2 / |minor|^2 = (p + cross) / (p - cross), p = px + py
    const double p = px + py;
    double ar_db = kArCapDb;
    if (p - cross > 0.0)
        ar_db = 10.0 * std::log10((p + cross) / (p - cross));
    st.ar_db = std::min(ar_db, kArCapDb);

    const double spin = std::imag(std::conj(e.a_x) * e.a_y);
    if (st.ar_db >= kArCapDb)
        st.sense = Sense::kLinear;
    else
        st.sense = spin > 0.0 ? Sense::kLhcp : Sense::kRhcp;

    const double mx = std::abs(e.a_x), my = std::abs(e.a_y);
    double tilt =
        0.5 * std::atan2(2.0 * mx * my * std::cos(delta), px - py);
    tilt = deg(tilt);
    if (tilt >= 90.0)
        tilt -= 180.0;
    if (tilt < -90.0)
        tilt += 180.0;
    st.tilt_deg = tilt;
    return st;
}

} // namespace rfnet
