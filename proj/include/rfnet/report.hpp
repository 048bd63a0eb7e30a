#pragma once

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "rfnet/antenna.hpp"
#include "rfnet/netlist.hpp"
#include "rfnet/simulator.hpp"

// Side-by-side comparison of the model against the reference design targets,
// plus structural self-checks. Numeric target misses are reported but do not
// fail the report; broken structure (wrong senses, asymmetry, non-passive
// blocks) does.

namespace rfnet {

struct ReportRow {
    std::string metric;
    std::string target;
    std::string model;
    bool ok = true;
    std::string note;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<std::string> gate_failures;
    bool structural_ok = true;
};

namespace rp_detail {

inline std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

inline double window_min_db(const SweepResult& r, double lo_hz, double hi_hz) {
    double best = 1e9;
    for (const SweepRow& row : r.rows)
        if (row.f_hz >= lo_hz && row.f_hz <= hi_hz)
            best = std::min(best, row.s11_db);
    return best;
}

} // namespace rp_detail

inline Report build_report(const SystemNetlist& base, unsigned threads = 1) {
    using rp_detail::fmt;
    using rp_detail::window_min_db;

    SystemNetlist real = base;
    real.mode = SystemMode::kRealized;
    SystemNetlist ideal = base;
    ideal.mode = SystemMode::kIdeal;

    const SweepResult r1 = run_sweep(real, Scenario::kAnt1, threads);
    const SweepResult r2 = run_sweep(real, Scenario::kAnt2, threads);
    const SweepResult r3 = run_sweep(real, Scenario::kAnt3, threads);
    const SweepResult i1 = run_sweep(ideal, Scenario::kAnt1, threads);
    const SweepResult i2 = run_sweep(ideal, Scenario::kAnt2, threads);
    const SweepResult i3 = run_sweep(ideal, Scenario::kAnt3, threads);

    Report rep;
    auto add = [&](std::string metric, std::string target, std::string model,
                   bool ok, std::string note = {}) {
        rep.rows.push_back({std::move(metric), std::move(target),
                            std::move(model), ok, std::move(note)});
    };

    const double fres = patch_resonance_hz(base.patch, base.substrate);
    add("patch resonance", "2.45 GHz +-5%", fmt("%.4f GHz", fres / 1e9),
        std::abs(fres - 2.45e9) <= 0.05 * 2.45e9);

    const double lp = window_min_db(r1, 2.4e9, 2.5e9);
    add("LP min |S11| in 2.4..2.5 GHz", "<= -15 dB", fmt("%.2f dB", lp),
        lp <= -15.0,
        lp <= -15.0 ? "" :
        "series pad resistors bound the LP match near -9 dB by design");

    const double cp =
        std::max(window_min_db(r2, 2.4e9, 2.5e9), window_min_db(r3, 2.4e9, 2.5e9));
    add("CP min |S11| in 2.4..2.5 GHz", "<= -15 dB", fmt("%.2f dB", cp),
        cp <= -15.0);

    const double armin = std::max(r2.summary.min_ar_db, r3.summary.min_ar_db);
    add("CP axial ratio minimum", "~1 dB (<= 2 dB)", fmt("%.2f dB", armin),
        armin <= 2.0);

    double arbw = 0.0;
    if (const Band* b = r2.summary.axial_ratio_3db.widest())
        arbw = b->fractional_percent();
    add("CP 3 dB axial-ratio bandwidth", ">= 3%", fmt("%.2f%%", arbw),
        arbw >= 3.0);

    {
        const FrequencyGrid grid = FrequencyGrid::range(
            base.grid.start_hz, base.grid.stop_hz, base.grid.step_hz);
        std::vector<double> fv(grid.begin(), grid.end()), gv;
        gv.reserve(fv.size());
        for (double f : fv)
            gv.push_back(db20(patch_feed_gamma(base.patch, real.substrate, f)));
        const BandScan scan = bands_below(fv, gv, -10.0);
        double bw = 0.0;
        if (const Band* b = scan.widest())
            bw = b->fractional_percent();
        add("patch port -10 dB bandwidth", "9% +- 3 points", fmt("%.2f%%", bw),
            std::abs(bw - 9.0) <= 3.0);
    }

    // structural gates
    auto gate = [&](bool ok, const std::string& what) {
        if (!ok)
            rep.gate_failures.push_back(what);
    };
    auto sense_in_window = [&](const SweepResult& r, Sense want) {
        for (const SweepRow& row : r.rows)
            if (row.f_hz >= 2.38e9 && row.f_hz <= 2.48e9 && row.sense != want)
                return false;
        return true;
    };
    gate(sense_in_window(i1, Sense::kLinear), "ideal ant1 is not linear in band");
    gate(sense_in_window(i2, Sense::kRhcp), "ideal ant2 is not RHCP in band");
    gate(sense_in_window(i3, Sense::kLhcp), "ideal ant3 is not LHCP in band");
    gate(sense_in_window(r2, Sense::kRhcp), "realized ant2 is not RHCP in band");
    gate(sense_in_window(r3, Sense::kLhcp), "realized ant3 is not LHCP in band");

    double mirror = 0.0;
    for (std::size_t i = 0; i < r2.rows.size(); ++i) {
        mirror = std::max(mirror,
                          std::abs(r2.rows[i].s11_db - r3.rows[i].s11_db));
        mirror = std::max(mirror, std::abs(r2.rows[i].ar_db - r3.rows[i].ar_db));
    }
    gate(mirror <= 1e-9, "ant2/ant3 mirror symmetry broken (" +
                             fmt("%.3g", mirror) + ")");

    for (const SweepResult* r : {&r1, &r2, &r3, &i1, &i2, &i3})
        for (const SweepRow& row : r->rows)
            gate(std::abs(row.s11) <= 1.0 + 1e-9,
                 "input reflection above unity");

    rep.structural_ok = rep.gate_failures.empty();
    add("scenario senses / symmetry / passivity", "structural",
        rep.structural_ok ? "all good" : "BROKEN", rep.structural_ok);
    return rep;
}

inline std::string render_report(const Report& rep) {
    std::size_t w0 = 0, w1 = 0, w2 = 0;
    for (const ReportRow& r : rep.rows) {
        w0 = std::max(w0, r.metric.size());
        w1 = std::max(w1, r.target.size());
        w2 = std::max(w2, r.model.size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    os << pad("metric", w0) << "  " << pad("target", w1) << "  "
       << pad("model", w2) << "  status\n";
    os << std::string(w0 + w1 + w2 + 12, '-') << "\n";
    for (const ReportRow& r : rep.rows) {
        os << pad(r.metric, w0) << "  " << pad(r.target, w1) << "  "
           << pad(r.model, w2) << "  " << (r.ok ? "ok" : "MISS");
        if (!r.note.empty())
            os << "  (" << r.note << ")";
        os << "\n";
    }
    if (!rep.gate_failures.empty()) {
        os << "\nstructural failures:\n";
        for (const std::string& g : rep.gate_failures)
            os << "  - " << g << "\n";
    }
    return os.str();
}

} // namespace rfnet
