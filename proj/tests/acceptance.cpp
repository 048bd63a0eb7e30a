// Release gate for the feed-network simulator. Each numbered criterion prints
// one [PASS]/[FAIL] line per check; the exit code is nonzero when any check
// in the selected set fails. Run with --criterion N to run one criterion.
//
// Criterion 6's linear-polarization match check is expected to fail: with a
// resistive pad in each switch branch, the waves reflected off the two pads
// recombine in phase at the divider input and pin the model's best in-band
// |S11| near -9 dB. The check stays red on purpose rather than bending the
// model; see the line it prints for the measured number.

#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rfnet/rfnet.hpp"

using namespace rfnet;

namespace {

int g_criterion = 0;
int g_failures = 0;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void check(bool ok, const std::string& what) {
    std::printf("[%s] c%d: %s\n", ok ? "PASS" : "FAIL", g_criterion,
                what.c_str());
    if (!ok)
        ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void budget(const Timer& t, double limit_s) {
    const double s = t.seconds();
    check(s < limit_s, fmt("runtime %.3f s within %.0f s budget", s, limit_s));
}

const Substrate kBoard{4.6, 1.0, 0.02};
const Substrate kBoardLossless{4.6, 1.0, 0.0};

double window_min_db(const SweepResult& r, double lo, double hi) {
    double best = 1e9;
    for (const SweepRow& row : r.rows)
        if (row.f_hz >= lo && row.f_hz <= hi)
            best = std::min(best, row.s11_db);
    return best;
}

const SweepRow& row_at(const SweepResult& r, double f_hz) {
    for (const SweepRow& row : r.rows)
        if (std::abs(row.f_hz - f_hz) < 0.5)
            return row;
    std::fprintf(stderr, "no sweep row at %g Hz\n", f_hz);
    std::exit(2);
}

// 1: line synthesis hits the reference design widths
void criterion1() {
    Timer t;
    const double w50 = synthesize_width(50.0, kBoardLossless);
    const double w70 = synthesize_width(kZ0 * std::sqrt(2.0), kBoardLossless);
    check(std::abs(w50 - 1.84) <= 0.1 * 1.84,
          fmt("50.0 ohm synthesis %.4f mm within 10%% of 1.84 mm", w50));
    check(std::abs(w70 - 0.96) <= 0.1 * 0.96,
          fmt("70.7 ohm synthesis %.4f mm within 10%% of 0.96 mm", w70));
    budget(t, 1.0);
}

// 2: patch cavity resonance lands inside the design window
void criterion2() {
    Timer t;
    const double fr = patch_resonance_hz(PatchSpec{}, kBoard);
    check(fr >= 2.33e9 && fr <= 2.57e9,
          fmt("patch resonance %.4f GHz inside [2.33, 2.57]", fr / 1e9));
    budget(t, 1.0);
}

// 3: textbook behavior of the ideal divider and coupler, tolerance 1e-6
void criterion3() {
    Timer t;
    const double tol = 1e-6;
    const FrequencyGrid g = FrequencyGrid::single(2.45e9);
    {
        const NetworkBlock blk = wilkinson_ideal(g);
        const SMatrix& s = blk.at(0);
        const double split = 1.0 / std::sqrt(2.0);
        check(std::abs(std::abs(s(1, 0)) - split) < tol &&
                  std::abs(std::abs(s(2, 0)) - split) < tol,
              fmt("divider split %.4f / %.4f dB",
                  db20(s(1, 0)), db20(s(2, 0))));
        check(std::abs(s(1, 0) - s(2, 0)) < tol,
              "divider outputs in phase");
        check(std::abs(s(1, 2)) < tol && std::abs(s(2, 1)) < tol,
              "divider output ports isolated");
        check(std::abs(s(0, 0)) < tol, "divider input matched");
    }
    {
        const NetworkBlock blk = branchline_ideal(g);
        const SMatrix& s = blk.at(0);
        const double split = 1.0 / std::sqrt(2.0);
        check(std::abs(std::abs(s(1, 0)) - split) < tol &&
                  std::abs(std::abs(s(2, 0)) - split) < tol,
              fmt("coupler split %.4f / %.4f dB",
                  db20(s(1, 0)), db20(s(2, 0))));
        const double diff = deg(std::arg(s(2, 0) / s(1, 0)));
        check(std::abs(diff + 90.0) < 1e-4,
              fmt("coupler quadrature, through-to-coupled %.6f deg", diff));
        check(std::abs(s(3, 0)) < tol, "coupler isolated port dark");
        check(std::abs(s(0, 0)) < tol, "coupler input matched");
        // both feeds driven equally: the two outputs come out in phase,
        // which is what makes the both-diodes-off state linearly polarized
        const cxd amp = 1.0 / std::sqrt(2.0);
        const cxd out1 = s(1, 0) * amp + s(1, 3) * amp;
        const cxd out2 = s(2, 0) * amp + s(2, 3) * amp;
        check(std::abs(out1 - out2) < tol,
              fmt("dual drive outputs equal, phase difference %.2e deg",
                  deg(std::arg(out2 / out1))));
    }
    budget(t, 1.0);
}

// 4: shunt-diode switch hits its pass / block figures at 2.45 GHz
void criterion4() {
    Timer t;
    const FrequencyGrid g = FrequencyGrid::single(2.45e9);
    const SwitchCircuit sw;
    const double off = db20(switch_unit(sw, SwitchState::kOff, g).at(0)(1, 0));
    const double on = db20(switch_unit(sw, SwitchState::kOn, g).at(0)(1, 0));
    check(off >= -4.0 && off <= -2.8,
          fmt("off-state insertion %.3f dB inside [-4.0, -2.8]", off));
    check(on <= -14.0, fmt("on-state isolation %.3f dB at or under -14", on));
    budget(t, 1.0);
}

// 5: ideal-mode truth table over the full default grid
void criterion5() {
    Timer t;
    SystemNetlist n = default_netlist();
    n.mode = SystemMode::kIdeal;
    const SweepResult r1 = run_sweep(n, Scenario::kAnt1);
    const SweepResult r2 = run_sweep(n, Scenario::kAnt2);
    const SweepResult r3 = run_sweep(n, Scenario::kAnt3);

    double ar_floor = 1e9;
    for (const SweepRow& row : r1.rows)
        if (row.f_hz >= 2.38e9 && row.f_hz <= 2.48e9)
            ar_floor = std::min(ar_floor, row.ar_db);
    check(ar_floor >= 20.0,
          fmt("state 1 linear: in-band axial ratio floor %.1f dB >= 20",
              ar_floor));

    const SweepRow& p2 = row_at(r2, 2.45e9);
    const SweepRow& p3 = row_at(r3, 2.45e9);
    check(p2.sense == Sense::kRhcp && p2.ar_db <= 0.5,
          fmt("state 2 %s with %.2e dB axial ratio at 2.45 GHz",
              to_string(p2.sense), p2.ar_db));
    check(p3.sense == Sense::kLhcp && p3.ar_db <= 0.5,
          fmt("state 3 %s with %.2e dB axial ratio at 2.45 GHz",
              to_string(p3.sense), p3.ar_db));

    // mirror symmetry on the raw traces (reflection compared linearly;
    // a dB scale is meaningless on the ideal states' 1e-16 floor)
    double worst = 0.0;
    for (std::size_t i = 0; i < r2.rows.size(); ++i) {
        worst = std::max(worst, std::abs(r2.rows[i].s11 - r3.rows[i].s11));
        worst = std::max(worst,
                         std::abs(r2.rows[i].ar_db - r3.rows[i].ar_db));
    }
    check(worst <= 1e-9, fmt("states 2/3 mirror within %.2e", worst));
    budget(t, 10.0);
}

// 6: realized-mode headline numbers against the reference design
void criterion6() {
    Timer t;
    const SystemNetlist n = default_netlist();
    const SweepResult r1 = run_sweep(n, Scenario::kAnt1, 4);
    const SweepResult r2 = run_sweep(n, Scenario::kAnt2, 4);
    const SweepResult r3 = run_sweep(n, Scenario::kAnt3, 4);

    const double m1 = window_min_db(r1, 2.4e9, 2.5e9);
    const double m2 = window_min_db(r2, 2.4e9, 2.5e9);
    const double m3 = window_min_db(r3, 2.4e9, 2.5e9);
    check(m1 <= -15.0,
          fmt("state 1 min |S11| %.2f dB vs -15 target (reference design "
              "-27.7; the in-phase returns off the two branch pad resistors "
              "recombine at the divider and cap this model near -9 dB)",
              m1));
    check(m2 <= -15.0,
          fmt("state 2 min |S11| %.2f dB at or under -15 (reference -27.7)",
              m2));
    check(m3 <= -15.0,
          fmt("state 3 min |S11| %.2f dB at or under -15 (reference -30.4)",
              m3));

    double ar_near = 1e9;
    for (const SweepRow& row : r2.rows)
        if (row.f_hz >= 2.43e9 && row.f_hz <= 2.45e9)
            ar_near = std::min(ar_near, row.ar_db);
    check(ar_near <= 2.0,
          fmt("axial ratio %.2f dB near 2.43-2.45 GHz at or under 2 "
              "(reference 1.0)",
              ar_near));

    double arbw = 0.0;
    if (const Band* b = r2.summary.axial_ratio_3db.widest())
        arbw = b->fractional_percent();
    check(arbw >= 3.0,
          fmt("3 dB axial-ratio bandwidth %.2f%% at least 3%% (reference "
              "4.5%%)",
              arbw));

    const FrequencyGrid grid =
        FrequencyGrid::range(n.grid.start_hz, n.grid.stop_hz, n.grid.step_hz);
    std::vector<double> fv(grid.begin(), grid.end()), gv;
    for (double f : fv)
        gv.push_back(db20(patch_feed_gamma(n.patch, n.substrate, f)));
    const BandScan scan = bands_below(fv, gv, -10.0);
    double bw = 0.0;
    if (const Band* b = scan.widest())
        bw = b->fractional_percent();
    check(std::abs(bw - 9.0) <= 3.0,
          fmt("patch port -10 dB bandwidth %.2f%% within 9 +- 3 points", bw));
    budget(t, 60.0);
}

// 7: property suites on every block family
void criterion7() {
    Timer t;
    std::mt19937 rng(2025);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> uph(-kPi, kPi);

    const FrequencyGrid g = FrequencyGrid::range(2.0e9, 3.0e9, 20e6);
    const SwitchCircuit sw;
    const std::vector<std::pair<const char*, NetworkBlock>> blocks = {
        {"divider", wilkinson(WilkinsonSpec{}, kBoard, g)},
        {"coupler", branchline(BranchLineSpec{}, kBoard, g)},
        {"switch off", switch_unit(sw, SwitchState::kOff, g)},
        {"switch on", switch_unit(sw, SwitchState::kOn, g)},
        {"feed line", microstrip_line({1.84, 17.0}, kBoard, g)},
        {"patch load", patch_load(PatchSpec{}, kBoard, g)},
        {"divider ideal", wilkinson_ideal(g)},
        {"coupler ideal", branchline_ideal(g)},
        {"junction", junction(3, g)},
    };
    bool all_passive = true, all_reciprocal = true;
    std::string worst_p, worst_r;
    for (const auto& [name, blk] : blocks) {
        if (!is_passive(blk)) {
            all_passive = false;
            worst_p = name;
        }
        if (!is_reciprocal(blk)) {
            all_reciprocal = false;
            worst_r = name;
        }
    }
    check(all_passive, all_passive
                           ? fmt("all %zu block families passive at every "
                                 "frequency",
                                 blocks.size())
                           : "non-passive block: " + worst_p);
    check(all_reciprocal,
          all_reciprocal ? "all block families reciprocal"
                         : "non-reciprocal block: " + worst_r);

    // representation round trip on random realizable two-ports
    double worst_rt = 0.0;
    for (int k = 0; k < 200; ++k) {
        SMatrix s(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                s(i, j) = std::polar(0.1 + 0.6 * u01(rng), uph(rng));
        const SMatrix back = abcd_to_s(s_to_abcd(s));
        worst_rt = std::max(worst_rt, (back - s).cwiseAbs().maxCoeff());
    }
    check(worst_rt < 1e-12,
          fmt("S <-> chain round trip worst %.2e under 1e-12", worst_rt));

    // serialization round trip through the interchange text format
    {
        const NetworkBlock coup = branchline(BranchLineSpec{}, kBoard, g);
        std::ostringstream os;
        write_touchstone(os, coup);
        std::istringstream is(os.str());
        const NetworkBlock back = read_touchstone(is, 4);
        double worst = 0.0;
        for (std::size_t i = 0; i < coup.size(); ++i)
            worst = std::max(
                worst, (back.at(i) - coup.at(i)).cwiseAbs().maxCoeff());
        check(worst < 1e-8,
              fmt("serialization round trip worst %.2e under 1e-8", worst));
    }

    // cascade algebra: associativity and equivalence with port reduction
    {
        const NetworkBlock a = microstrip_line({1.84, 5.0}, kBoard, g);
        const NetworkBlock b = switch_unit(sw, SwitchState::kOff, g);
        const NetworkBlock c = microstrip_line({0.96, 11.0}, kBoard, g);
        const NetworkBlock left = cascade(cascade(a, b), c);
        const NetworkBlock right = cascade(a, cascade(b, c));
        double worst = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            worst = std::max(
                worst, (left.at(i) - right.at(i)).cwiseAbs().maxCoeff());
        check(worst < 1e-12,
              fmt("cascade associativity worst %.2e", worst));
        const NetworkBlock joined = connect_ports(merge(a, b), 1, 2);
        const NetworkBlock direct = cascade(a, b);
        worst = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
            worst = std::max(
                worst, (joined.at(i) - direct.at(i)).cwiseAbs().maxCoeff());
        check(worst < 1e-12,
              fmt("connect/cascade equivalence worst %.2e", worst));
    }

    // polarization invariances on randomized excitations
    {
        bool ok = true;
        for (int k = 0; k < 1000 && ok; ++k) {
            const ExcitationPair e{
                std::polar(0.05 + 2.0 * u01(rng), uph(rng)),
                std::polar(0.05 + 2.0 * u01(rng), uph(rng))};
            const auto ref = polarization_state(e);
            const cxd sc = std::polar(0.3 + 2.0 * u01(rng), uph(rng));
            const auto scaled =
                polarization_state({e.a_x * sc, e.a_y * sc});
            ok = ok && std::abs(scaled.ar_db - ref.ar_db) < 1e-9 &&
                 std::abs(scaled.tilt_deg - ref.tilt_deg) < 1e-9 &&
                 scaled.sense == ref.sense;
            const auto conj = polarization_state(
                {std::conj(e.a_x), std::conj(e.a_y)});
            ok = ok && std::abs(conj.ar_db - ref.ar_db) < 1e-9;
            if (ref.sense == Sense::kRhcp)
                ok = ok && conj.sense == Sense::kLhcp;
            else if (ref.sense == Sense::kLhcp)
                ok = ok && conj.sense == Sense::kRhcp;
            const auto swap = polarization_state({e.a_y, e.a_x});
            ok = ok && std::abs(swap.ar_db - ref.ar_db) < 1e-9;
        }
        check(ok, "scale / conjugation / swap invariances on 1000 random "
                  "pairs");
    }

    // band edges must not move under grid refinement
    {
        SystemNetlist coarse = default_netlist();
        coarse.grid.step_hz = 4e6;
        const SweepResult rc = run_sweep(coarse, Scenario::kAnt2, 4);
        const SweepResult rf =
            run_sweep(default_netlist(), Scenario::kAnt2, 4);
        const Band* bc = rc.summary.axial_ratio_3db.widest();
        const Band* bf = rf.summary.axial_ratio_3db.widest();
        const bool have = bc && bf;
        const double dlo = have ? std::abs(bc->lo_hz - bf->lo_hz) : 1e12;
        const double dhi = have ? std::abs(bc->hi_hz - bf->hi_hz) : 1e12;
        check(have && dlo <= 1e6 && dhi <= 1e6,
              fmt("band edges move %.0f / %.0f Hz under 4x grid refinement",
                  dlo, dhi));
    }
    budget(t, 60.0);
}

// 8: sweeps are bit-stable run to run and across thread counts
void criterion8() {
    Timer t;
    const SystemNetlist n = default_netlist();
    auto csv_of = [&](unsigned threads) {
        std::ostringstream os;
        write_sweep_csv(os, run_sweep(n, Scenario::kAnt2, threads));
        return os.str();
    };
    const std::string first = csv_of(1);
    check(csv_of(1) == first, "repeat run produces byte-identical CSV");
    check(csv_of(4) == first && csv_of(8) == first,
          "threaded sweeps produce byte-identical CSV");
    budget(t, 60.0);
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > 8) {
        std::fprintf(stderr, "criterion must be 1..8\n");
        return 2;
    }
    void (*const runners[8])() = {criterion1, criterion2, criterion3,
                                   criterion4, criterion5, criterion6,
                                   criterion7, criterion8};
    try {
        for (int c = 1; c <= 8; ++c) {
            if (only && c != only)
                continue;
            g_criterion = c;
            runners[c - 1]();
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "unexpected exception: %s\n", e.what());
        return 2;
    }
    return g_failures ? 1 : 0;
}
