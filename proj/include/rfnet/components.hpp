#pragma once

#include <cmath>
#include <complex>

#include "rfnet/assembly.hpp"
#include "rfnet/errors.hpp"
#include "rfnet/microstrip.hpp"
#include "rfnet/network.hpp"

// Feed-network building blocks: lumped elements, the shunt PIN switch unit,
// the Wilkinson divider and the branch-line quadrature coupler, each in an
// ideal textbook form and a realized microstrip form.

namespace rfnet {

// ---- lumped elements ----

enum class LumpedKind { kSeriesR, kSeriesL, kSeriesC, kShuntR, kShuntL, kShuntC };

inline Abcd series_z_abcd(const cxd& z) { return {1.0, z, 0.0, 1.0}; }

inline Abcd shunt_z_abcd(const cxd& z) {
    if (std::abs(z) < 1e-12)
        throw ValidityError("shunt element is a dead short");
    return {1.0, 0.0, 1.0 / z, 1.0};
}

inline cxd lumped_z(LumpedKind kind, double value, double f_hz) {
    const double w = 2.0 * kPi * f_hz;
    switch (kind) {
    case LumpedKind::kSeriesR:
    case LumpedKind::kShuntR:
        if (value < 0.0)
            throw ValidityError("resistance must be >= 0");
        return cxd(value, 0.0);
    case LumpedKind::kSeriesL:
    case LumpedKind::kShuntL:
        if (!(value > 0.0))
            throw ValidityError("inductance must be > 0");
        return cxd(0.0, w * value);
    case LumpedKind::kSeriesC:
    case LumpedKind::kShuntC:
        if (!(value > 0.0))
            throw ValidityError("capacitance must be > 0");
        return cxd(0.0, -1.0 / (w * value));
    }
    throw ValidityError("unknown lumped kind");
}

inline NetworkBlock lumped_element(LumpedKind kind, double value,
                                   const FrequencyGrid& grid) {
    const bool series = kind == LumpedKind::kSeriesR ||
                        kind == LumpedKind::kSeriesL ||
                        kind == LumpedKind::kSeriesC;
    return build_block(
        grid,
        [&](double f) {
            const cxd z = lumped_z(kind, value, f);
            return abcd_to_s(series ? series_z_abcd(z) : shunt_z_abcd(z));
        },
        "lumped");
}

// ---- PIN switch unit ----

// State names follow the bias, not the RF path: kOn means the diode conducts,
// shorts the line to ground and blocks the signal; kOff lets it pass.
enum class SwitchState { kOff, kOn };

struct DiodeModel {
    double r_on_ohm = 2.1;
    double r_off_ohm = 3000.0;
    double c_j_f = 0.17e-12;
    double l_s_h = 0.15e-9;
    friend bool operator==(const DiodeModel&, const DiodeModel&) = default;
};

inline cxd diode_impedance(const DiodeModel& d, SwitchState state,
                           double f_hz) {
    const double w = 2.0 * kPi * f_hz;
    const cxd jwl = cxd(0.0, w * d.l_s_h);
    if (state == SwitchState::kOn)
        return d.r_on_ohm + jwl;
    const cxd zc = cxd(0.0, -1.0 / (w * d.c_j_f));
    return jwl + d.r_off_ohm * zc / (d.r_off_ohm + zc);
}

struct SwitchCircuit {
    double series_r_ohm = 45.0;
    double dc_block_f = 47e-9;
    double choke_l_h = 22e-9;
    bool include_dc_blocks = true;
    bool include_choke = true;
    DiodeModel diode;
    friend bool operator==(const SwitchCircuit&, const SwitchCircuit&) = default;
};

// Input-side pad resistor, DC block, shunt diode (with its bias choke in
// parallel), DC block. Asymmetric on purpose: port 0 faces the divider.
inline Abcd switch_abcd(const SwitchCircuit& sw, SwitchState state,
                        double f_hz) {
    const double w = 2.0 * kPi * f_hz;
    Abcd m = series_z_abcd(cxd(sw.series_r_ohm, 0.0));
    const cxd z_block = cxd(0.0, -1.0 / (w * sw.dc_block_f));
    if (sw.include_dc_blocks)
        m = m * series_z_abcd(z_block);
    cxd z_sh = diode_impedance(sw.diode, state, f_hz);
    if (sw.include_choke) {
        const cxd z_ch = cxd(0.0, w * sw.choke_l_h);
        z_sh = z_sh * z_ch / (z_sh + z_ch);
    }
    m = m * shunt_z_abcd(z_sh);
    if (sw.include_dc_blocks)
        m = m * series_z_abcd(z_block);
    return m;
}

inline NetworkBlock switch_unit(const SwitchCircuit& sw, SwitchState state,
                                const FrequencyGrid& grid) {
    return build_block(
        grid, [&](double f) { return abcd_to_s(switch_abcd(sw, state, f)); },
        state == SwitchState::kOn ? "switch(on)" : "switch(off)");
}

// Idealization used by the ideal system mode: a passing switch is a thru, a
// blocking switch absorbs both sides (matched, zero transmission).
inline NetworkBlock ideal_switch(SwitchState state, const FrequencyGrid& grid) {
    if (state == SwitchState::kOff)
        return thru(grid);
    return build_block(
        grid, [](double) { return SMatrix::Zero(2, 2).eval(); },
        "ideal_switch(on)");
}

// ---- Wilkinson divider ----
// Ports: 0 = common, 1 and 2 = the split pair.

inline NetworkBlock wilkinson_ideal(const FrequencyGrid& grid) {
    const cxd t = cxd(0.0, -1.0) / std::sqrt(2.0);
    return build_block(
        grid,
        [&](double) {
            SMatrix s = SMatrix::Zero(3, 3);
            s(0, 1) = s(1, 0) = t;
            s(0, 2) = s(2, 0) = t;
            return s;
        },
        "wilkinson(ideal)");
}

struct WilkinsonSpec {
    double f0_hz = 2.45e9;
    double iso_r_ohm = 100.0;
    // use the published arm width instead of synthesizing sqrt(2)*Z0
    bool published_dims = false;
    friend bool operator==(const WilkinsonSpec&, const WilkinsonSpec&) = default;
};

inline NetworkBlock wilkinson(const WilkinsonSpec& spec, const Substrate& sub,
                              const FrequencyGrid& grid) {
    const double w_arm = spec.published_dims
                             ? 0.96
                             : synthesize_width(kZ0 * std::sqrt(2.0), sub);
    // arm length is quarter-wave either way; the published table gives only
    // an arc radius for the arms, which is a layout detail
    const LineGeometry arm{w_arm, quarter_wave_mm(w_arm, sub, spec.f0_hz)};

    Assembly a;
    const auto j_in = a.add(junction(3, grid));
    const auto arm1 = a.add(microstrip_line(arm, sub, grid));
    const auto arm2 = a.add(microstrip_line(arm, sub, grid));
    const auto j_o1 = a.add(junction(3, grid));
    const auto j_o2 = a.add(junction(3, grid));
    const auto iso =
        a.add(lumped_element(LumpedKind::kSeriesR, spec.iso_r_ohm, grid));
    a.connect(j_in, 1, arm1, 0);
    a.connect(j_in, 2, arm2, 0);
    a.connect(arm1, 1, j_o1, 0);
    a.connect(arm2, 1, j_o2, 0);
    a.connect(j_o1, 1, iso, 0);
    a.connect(j_o2, 1, iso, 1);
    a.expose(j_in, 0);
    a.expose(j_o1, 2);
    a.expose(j_o2, 2);
    return a.build();
}

// ---- branch-line coupler ----
// Ports: 0 = input, 1 = through (-90 deg), 2 = coupled (-180 deg),
// 3 = isolated. Feeding 1 and 2 together with equal amplitude makes the
// quadrature pair used by the dual-fed patch.

inline NetworkBlock branchline_ideal(const FrequencyGrid& grid) {
    const cxd mj = cxd(0.0, -1.0) / std::sqrt(2.0); // through
    const cxd mr = cxd(-1.0, 0.0) / std::sqrt(2.0); // coupled
    return build_block(
        grid,
        [&](double) {
            SMatrix s = SMatrix::Zero(4, 4);
            s(0, 1) = s(1, 0) = mj;
            s(0, 2) = s(2, 0) = mr;
            s(1, 3) = s(3, 1) = mr;
            s(2, 3) = s(3, 2) = mj;
            return s;
        },
        "branchline(ideal)");
}

struct BranchLineSpec {
    double f0_hz = 2.45e9;
    // take all four ring arms at the published width/length instead of the
    // textbook Z0/sqrt(2) series and Z0 shunt quarter-wave arms
    bool published_dims = false;
    friend bool operator==(const BranchLineSpec&, const BranchLineSpec&) = default;
};

inline NetworkBlock branchline(const BranchLineSpec& spec, const Substrate& sub,
                               const FrequencyGrid& grid) {
    LineGeometry series_arm, shunt_arm;
    if (spec.published_dims) {
        series_arm = shunt_arm = LineGeometry{0.96, 16.16};
    } else {
        series_arm.w_mm = synthesize_width(kZ0 / std::sqrt(2.0), sub);
        series_arm.l_mm = quarter_wave_mm(series_arm.w_mm, sub, spec.f0_hz);
        shunt_arm.w_mm = synthesize_width(kZ0, sub);
        shunt_arm.l_mm = quarter_wave_mm(shunt_arm.w_mm, sub, spec.f0_hz);
    }

    Assembly a;
    const auto n_in = a.add(junction(3, grid));
    const auto n_thr = a.add(junction(3, grid));
    const auto n_cpl = a.add(junction(3, grid));
    const auto n_iso = a.add(junction(3, grid));
    const auto top = a.add(microstrip_line(series_arm, sub, grid));
    const auto bot = a.add(microstrip_line(series_arm, sub, grid));
    const auto left = a.add(microstrip_line(shunt_arm, sub, grid));
    const auto right = a.add(microstrip_line(shunt_arm, sub, grid));
    a.connect(n_in, 1, top, 0);
    a.connect(top, 1, n_thr, 0);
    a.connect(n_iso, 1, bot, 0);
    a.connect(bot, 1, n_cpl, 0);
    a.connect(n_in, 2, left, 0);
    a.connect(left, 1, n_iso, 2);
    a.connect(n_thr, 2, right, 0);
    a.connect(right, 1, n_cpl, 2);
    a.expose(n_in, 0);
    a.expose(n_thr, 1);
    a.expose(n_cpl, 1);
    a.expose(n_iso, 0);
    return a.build();
}

} // namespace rfnet
