// Command-line front end: line calculator, component export, system sweeps
// and the design comparison report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfnet/rfnet.hpp"

using namespace rfnet;

namespace {

struct NetOpts {
    std::string netlist_path;
    std::string grid;         // "start:stop:step" in Hz
    std::string mode;         // ideal | realized
    bool published = false;   // use the published line dims
};

void add_net_opts(CLI::App* cmd, NetOpts& o) {
    cmd->add_option("--netlist", o.netlist_path,
                    "system description file (defaults built in)");
    cmd->add_option("--grid", o.grid, "sweep grid start:stop:step in Hz");
    cmd->add_option("--mode", o.mode, "ideal or realized")
        ->check(CLI::IsMember({"ideal", "realized"}));
    cmd->add_flag("--dims-as-published", o.published,
                  "use the published line dimensions instead of synthesis");
}

SystemNetlist load_netlist(const NetOpts& o) {
    SystemNetlist n;
    if (!o.netlist_path.empty()) {
        std::ifstream is(o.netlist_path);
        if (!is)
            throw Error("cannot open netlist '" + o.netlist_path + "'");
        n = parse_netlist(is);
    }
    if (!o.grid.empty()) {
        double a = 0, b = 0, c = 0;
        if (std::sscanf(o.grid.c_str(), "%lf:%lf:%lf", &a, &b, &c) != 3)
            throw Error("grid must be start:stop:step, e.g. 2e9:3e9:1e6");
        n.grid = {a, b, c};
    }
    if (o.mode == "ideal")
        n.mode = SystemMode::kIdeal;
    else if (o.mode == "realized")
        n.mode = SystemMode::kRealized;
    if (o.published)
        n.dims_as_published = true;
    return n;
}

FrequencyGrid grid_of(const SystemNetlist& n) {
    return FrequencyGrid::range(n.grid.start_hz, n.grid.stop_hz,
                                n.grid.step_hz);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os)
        throw Error("cannot write '" + path + "'");
    os << text;
}

// sweep.csv + ant2 -> sweep_ant2.csv
std::string with_scenario(const std::string& path, const char* scenario) {
    const auto dot = path.find_last_of('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos ||
        (slash != std::string::npos && dot < slash))
        return path + "_" + scenario;
    return path.substr(0, dot) + "_" + scenario + path.substr(dot);
}

int cmd_synth(double z0, double er, double h, double f_hz) {
    const Substrate sub{er, h, 0.0};
    const double w = synthesize_width(z0, sub);
    const LineParams lp = analyze_line(w, sub);
    std::printf("width          = %.6f mm\n", w);
    std::printf("eps_eff        = %.6f\n", lp.eps_eff);
    std::printf("quarter_wave   = %.6f mm at %.6g GHz\n",
                quarter_wave_mm(w, sub, f_hz), f_hz / 1e9);
    return 0;
}

int cmd_analyze(double w, double er, double h, double tand, double f_hz) {
    const Substrate sub{er, h, tand};
    const LineParams lp = analyze_line(w, sub);
    std::printf("z0             = %.6f ohm\n", lp.z0_ohm);
    std::printf("eps_eff        = %.6f\n", lp.eps_eff);
    std::printf("guided_wave    = %.6f mm at %.6g GHz\n",
                guided_wavelength_mm(w, sub, f_hz), f_hz / 1e9);
    std::printf("diel_loss      = %.6g dB/mm at %.6g GHz\n",
                dielectric_loss_np_per_mm(w, sub, f_hz) * 20.0 / std::log(10.0),
                f_hz / 1e9);
    return 0;
}

int cmd_component(const NetOpts& net, const std::string& type,
                  const std::string& state, double line_w, double line_l,
                  const std::string& out) {
    const SystemNetlist n = load_netlist(net);
    const FrequencyGrid grid = grid_of(n);
    const Substrate sub = effective_substrate(n);
    const bool ideal = n.mode == SystemMode::kIdeal;
    const SwitchState st =
        state == "on" ? SwitchState::kOn : SwitchState::kOff;

    NetworkBlock blk = [&]() -> NetworkBlock {
        if (type == "wilkinson") {
            WilkinsonSpec ws = n.wilkinson;
            ws.published_dims = n.dims_as_published;
            return ideal ? wilkinson_ideal(grid) : wilkinson(ws, sub, grid);
        }
        if (type == "branchline") {
            BranchLineSpec bs = n.branchline;
            bs.published_dims = n.dims_as_published;
            return ideal ? branchline_ideal(grid) : branchline(bs, sub, grid);
        }
        if (type == "switch")
            return ideal ? ideal_switch(st, grid)
                         : switch_unit(n.switch1, st, grid);
        if (type == "patch")
            return patch_load(n.patch, sub, grid);
        if (type == "line")
            return microstrip_line({line_w, line_l}, sub, grid);
        throw Error("unknown component type '" + type + "'");
    }();

    write_touchstone(out, blk);
    std::printf("wrote %s (%zu ports, %zu points)\n", out.c_str(),
                blk.n_ports(), blk.size());
    return 0;
}

int cmd_simulate(const NetOpts& net, const std::string& scenario, bool all,
                 bool print_default, const std::string& out,
                 const std::string& format, unsigned threads) {
    if (print_default) {
        std::fputs(print_netlist(default_netlist()).c_str(), stdout);
        return 0;
    }
    if (scenario.empty() && !all)
        throw Error("pick --scenario ant1|ant2|ant3 or --all");

    const SystemNetlist n = load_netlist(net);
    std::vector<Scenario> todo;
    if (all)
        todo = {Scenario::kAnt1, Scenario::kAnt2, Scenario::kAnt3};
    else
        todo = {scenario_from_name(scenario)};

    bool first = true;
    for (Scenario scn : todo) {
        const SweepResult res = run_sweep(n, scn, threads);
        if (!first)
            std::printf("\n");
        first = false;
        std::fputs(summary_text(res).c_str(), stdout);
        if (out.empty())
            continue;
        const std::string path =
            all ? with_scenario(out, scenario_info(scn).name) : out;
        if (format == "touchstone") {
            const NetworkBlock refl = assemble_reflection(n, scn, grid_of(n));
            write_touchstone(path, refl);
        } else {
            std::ostringstream os;
            write_sweep_csv(os, res);
            write_text_file(path, os.str());
        }
        std::printf("wrote %s\n", path.c_str());
    }
    return 0;
}

int cmd_report(const NetOpts& net, const std::string& out, unsigned threads) {
    const Report rep = build_report(load_netlist(net), threads);
    const std::string text = render_report(rep);
    std::fputs(text.c_str(), stdout);
    if (!out.empty()) {
        write_text_file(out, text);
        std::printf("wrote %s\n", out.c_str());
    }
    return rep.structural_ok ? 0 : 1;
}

int cmd_scenarios() {
    std::printf("%-6s %-7s %-7s %-7s %s\n", "name", "diode1", "diode2",
                "sense", "description");
    for (const ScenarioInfo& si : kScenarios)
        std::printf("%-6s %-7s %-7s %-7s %s\n", si.name,
                    si.diode1 == SwitchState::kOn ? "on" : "off",
                    si.diode2 == SwitchState::kOn ? "on" : "off",
                    to_string(si.expected), si.description);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circuit-level simulator for a polarization-reconfigurable "
                 "patch antenna feed"};
    app.require_subcommand(1);

    // synth
    double z0 = 50.0, er = 4.6, h = 1.0, tand = 0.0, f_hz = 2.45e9, w = 1.84;
    auto* synth = app.add_subcommand("synth", "line width for an impedance");
    synth->add_option("--z0", z0, "target impedance, ohm")->required();
    synth->add_option("--er", er, "relative permittivity");
    synth->add_option("--height", h, "substrate height, mm");
    synth->add_option("--f", f_hz, "frequency for the quarter-wave length");

    // analyze
    auto* analyze =
        app.add_subcommand("analyze", "impedance of a given line width");
    analyze->add_option("--w", w, "line width, mm")->required();
    analyze->add_option("--er", er, "relative permittivity");
    analyze->add_option("--height", h, "substrate height, mm");
    analyze->add_option("--tand", tand, "loss tangent");
    analyze->add_option("--f", f_hz, "frequency, Hz");

    // component
    NetOpts comp_net;
    std::string type, state = "off", comp_out;
    double line_w = 1.84, line_l = 17.0;
    auto* component =
        app.add_subcommand("component", "export one block as Touchstone");
    component->add_option("--type", type, "wilkinson|branchline|switch|patch|line")
        ->required()
        ->check(CLI::IsMember({"wilkinson", "branchline", "switch", "patch",
                               "line"}));
    component->add_option("--state", state, "switch state")
        ->check(CLI::IsMember({"off", "on"}));
    component->add_option("--w", line_w, "line width, mm (type line)");
    component->add_option("--l", line_l, "line length, mm (type line)");
    component->add_option("--out", comp_out, "output .sNp path")->required();
    add_net_opts(component, comp_net);

    // simulate
    NetOpts sim_net;
    std::string scenario, sim_out, format = "csv";
    bool all = false, print_default = false;
    unsigned threads = 1;
    auto* simulate =
        app.add_subcommand("simulate", "sweep a diode state end to end");
    simulate->add_option("--scenario", scenario, "ant1, ant2 or ant3");
    simulate->add_flag("--all", all, "run all three states");
    simulate->add_flag("--print-default", print_default,
                       "print the built-in netlist and exit");
    simulate->add_option("--out", sim_out, "CSV (or .s1p) output path");
    simulate->add_option("--format", format, "csv or touchstone")
        ->check(CLI::IsMember({"csv", "touchstone"}));
    simulate->add_option("--threads", threads, "worker threads");
    add_net_opts(simulate, sim_net);

    // report
    NetOpts rep_net;
    std::string rep_out;
    unsigned rep_threads = 1;
    auto* report =
        app.add_subcommand("report", "compare the model to the design targets");
    report->add_option("--out", rep_out, "also write the table here");
    report->add_option("--threads", rep_threads, "worker threads");
    add_net_opts(report, rep_net);

    // scenarios
    app.add_subcommand("scenarios", "list the three operating states");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed())
            return cmd_synth(z0, er, h, f_hz);
        if (analyze->parsed())
            return cmd_analyze(w, er, h, tand, f_hz);
        if (component->parsed())
            return cmd_component(comp_net, type, state, line_w, line_l,
                                 comp_out);
        if (simulate->parsed())
            return cmd_simulate(sim_net, scenario, all, print_default,
                                sim_out, format, threads);
        if (report->parsed())
            return cmd_report(rep_net, rep_out, rep_threads);
        return cmd_scenarios();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
