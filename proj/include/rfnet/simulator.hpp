#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "rfnet/antenna.hpp"
#include "rfnet/assembly.hpp"
#include "rfnet/bands.hpp"
#include "rfnet/components.hpp"
#include "rfnet/netlist.hpp"
#include "rfnet/network.hpp"
#include "rfnet/polarization.hpp"
#include "rfnet/scenario.hpp"

// End-to-end sweep: assemble the feed three-port for a scenario, close its
// two output ports with the patch-mode reflections, and solve for the input
// match and the pair of waves delivered into the orthogonal patch modes.

namespace rfnet {

// Substrate actually used for line sections: ideal mode drops loss.
inline Substrate effective_substrate(const SystemNetlist& n) {
    Substrate sub = n.substrate;
    if (n.mode == SystemMode::kIdeal)
        sub.tan_d = 0.0;
    return sub;
}

// Feed network from the common input to the two patch feed planes.
// Ports: 0 = feed, 1 = x-mode plane (coupler through), 2 = y-mode plane
// (coupler coupled).
inline NetworkBlock assemble_feed(const SystemNetlist& n, Scenario scn,
                                  const FrequencyGrid& grid) {
    const ScenarioInfo& si = scenario_info(scn);
    const Substrate sub = effective_substrate(n);

    Assembly a;
    Assembly::BlockId wilk, sw1, sw2, coup;
    if (n.mode == SystemMode::kIdeal) {
        wilk = a.add(wilkinson_ideal(grid));
        sw1 = a.add(ideal_switch(si.diode1, grid));
        sw2 = a.add(ideal_switch(si.diode2, grid));
        coup = a.add(branchline_ideal(grid));
    } else {
        WilkinsonSpec ws = n.wilkinson;
        ws.published_dims = n.dims_as_published;
        BranchLineSpec bs = n.branchline;
        bs.published_dims = n.dims_as_published;
        wilk = a.add(wilkinson(ws, sub, grid));
        sw1 = a.add(switch_unit(n.switch1, si.diode1, grid));
        sw2 = a.add(switch_unit(n.switch2, si.diode2, grid));
        coup = a.add(branchline(bs, sub, grid));
    }
    a.connect(wilk, 1, sw1, 0);
    a.connect(wilk, 2, sw2, 0);
    a.connect(sw1, 1, coup, 0); // coupler input
    a.connect(sw2, 1, coup, 3); // coupler isolated port
    a.expose(wilk, 0);
    a.expose(coup, 1);
    a.expose(coup, 2);
    return a.build();
}

// Whole antenna folded to its input: the feed three-port with both patch
// planes reduced away. Exists mainly to cross-check the sweep solver.
inline NetworkBlock assemble_reflection(const SystemNetlist& n, Scenario scn,
                                        const FrequencyGrid& grid) {
    const NetworkBlock feed = assemble_feed(n, scn, grid);
    const NetworkBlock patch =
        patch_load(n.patch, effective_substrate(n), grid);
    NetworkBlock sys = merge(feed, patch); // feed, x, y, patch0, patch1
    sys = connect_ports(sys, 1, 3);
    return connect_ports(sys, 1, 2); // former (2, 4)
}

struct SweepRow {
    double f_hz = 0.0;
    cxd s11{0.0};
    double s11_db = 0.0;
    ExcitationPair waves;
    double ar_db = 0.0;
    Sense sense = Sense::kLinear;
};

struct SweepSummary {
    double min_s11_db = 0.0;
    double min_s11_hz = 0.0;
    double min_ar_db = 0.0;
    double min_ar_hz = 0.0;
    Sense sense_at_min_ar = Sense::kLinear;
    BandScan return_loss_10db;
    BandScan axial_ratio_3db;
};

struct SweepResult {
    Scenario scenario = Scenario::kAnt1;
    SystemMode mode = SystemMode::kRealized;
    std::vector<SweepRow> rows;
    SweepSummary summary;
};

inline SweepResult run_sweep(const SystemNetlist& n, Scenario scn,
                             unsigned n_threads = 1) {
    const FrequencyGrid grid =
        FrequencyGrid::range(n.grid.start_hz, n.grid.stop_hz, n.grid.step_hz);
    const NetworkBlock feed = assemble_feed(n, scn, grid);
    const Substrate sub = effective_substrate(n);

    SweepResult res;
    res.scenario = scn;
    res.mode = n.mode;
    res.rows.resize(grid.size());

    auto solve_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const double f = grid[i];
            const SMatrix& N = feed.at(i);
            const cxd g = patch_feed_gamma(n.patch, sub, f);

            // waves incident on the two patch planes under unit feed drive:
            // b = N_c1 + N_cc * (g * b)
            Eigen::Matrix2cd a22;
            a22 << 1.0 - N(1, 1) * g, -N(1, 2) * g,
                   -N(2, 1) * g, 1.0 - N(2, 2) * g;
            Eigen::Vector2cd rhs(N(1, 0), N(2, 0));
            const Eigen::Vector2cd b = a22.fullPivLu().solve(rhs);

            SweepRow& row = res.rows[i];
            row.f_hz = f;
            row.s11 = N(0, 0) + N(0, 1) * g * b(0) + N(0, 2) * g * b(1);
            row.s11_db = db20(row.s11);
            row.waves.a_x = mode_wave(b(0), g);
            row.waves.a_y = mode_wave(b(1), g);
            const PolarizationState st = polarization_state(row.waves);
            row.ar_db = st.ar_db;
            row.sense = st.sense;
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(n_threads, grid.size()));
    if (workers == 1) {
        solve_range(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(grid.size(), lo + chunk);
            if (lo < hi)
                pool.emplace_back(solve_range, lo, hi);
        }
        for (auto& t : pool)
            t.join();
    }

    std::vector<double> fv(grid.begin(), grid.end()), sv, av;
    sv.reserve(fv.size());
    av.reserve(fv.size());
    for (const SweepRow& r : res.rows) {
        sv.push_back(r.s11_db);
        av.push_back(r.ar_db);
    }
    SweepSummary& sm = res.summary;
    const auto imin_s =
        std::min_element(sv.begin(), sv.end()) - sv.begin();
    const auto imin_a =
        std::min_element(av.begin(), av.end()) - av.begin();
    sm.min_s11_db = sv[imin_s];
    sm.min_s11_hz = fv[imin_s];
    sm.min_ar_db = av[imin_a];
    sm.min_ar_hz = fv[imin_a];
    sm.sense_at_min_ar = res.rows[imin_a].sense;
    sm.return_loss_10db = bands_below(fv, sv, -10.0);
    sm.axial_ratio_3db = bands_below(fv, av, 3.0);
    return res;
}

inline void write_sweep_csv(std::ostream& os, const SweepResult& res) {
    os << "freq_hz,s11_db,ar_db,sense\n";
    char buf[128];
    for (const SweepRow& r : res.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%s\n", r.f_hz,
                      r.s11_db, r.ar_db, to_string(r.sense));
        os << buf;
    }
}

inline std::string summary_text(const SweepResult& res) {
    const ScenarioInfo& si = scenario_info(res.scenario);
    std::ostringstream os;
    char buf[160];
    os << "scenario = " << si.name << " ("
       << to_string(si.expected) << " target, diode1 "
       << (si.diode1 == SwitchState::kOn ? "on" : "off") << ", diode2 "
       << (si.diode2 == SwitchState::kOn ? "on" : "off") << ")\n";
    os << "mode = "
       << (res.mode == SystemMode::kIdeal ? "ideal" : "realized") << "\n";
    os << "points = " << res.rows.size() << "\n";
    const SweepSummary& sm = res.summary;
    std::snprintf(buf, sizeof buf, "min_s11_db = %.4f at %.6g GHz\n",
                  sm.min_s11_db, sm.min_s11_hz / 1e9);
    os << buf;
    std::snprintf(buf, sizeof buf, "min_ar_db = %.4f at %.6g GHz (%s)\n",
                  sm.min_ar_db, sm.min_ar_hz / 1e9,
                  to_string(sm.sense_at_min_ar));
    os << buf;
    auto band_line = [&](const char* name, const BandScan& scan) {
        if (const Band* b = scan.widest()) {
            std::snprintf(buf, sizeof buf,
                          "%s = %.6g..%.6g GHz (%.3f%%)\n", name,
                          b->lo_hz / 1e9, b->hi_hz / 1e9,
                          b->fractional_percent());
            os << buf;
        } else {
            os << name << " = none\n";
        }
    };
    band_line("band_s11_below_-10db", sm.return_loss_10db);
    band_line("band_ar_below_3db", sm.axial_ratio_3db);
    return os.str();
}

} // namespace rfnet
