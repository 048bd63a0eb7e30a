#pragma once

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <string>

#include "rfnet/antenna.hpp"
#include "rfnet/components.hpp"
#include "rfnet/errors.hpp"
#include "rfnet/microstrip.hpp"

// System description: everything needed to build the three-port feed network
// and the patch load, with an INI-style text form. parse_netlist(print_netlist
// (n)) reproduces n exactly; parsing is strict, unknown sections or keys are
// errors with a line number.

namespace rfnet {

struct GridSpec {
    double start_hz = 2.0e9;
    double stop_hz = 3.0e9;
    double step_hz = 1e6;
    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

enum class SystemMode { kIdeal, kRealized };

struct SystemNetlist {
    GridSpec grid;
    Substrate substrate{4.6, 1.0, 0.02};
    SystemMode mode = SystemMode::kRealized;
    bool dims_as_published = false;
    WilkinsonSpec wilkinson;
    SwitchCircuit switch1, switch2;
    BranchLineSpec branchline;
    PatchSpec patch;
    friend bool operator==(const SystemNetlist&, const SystemNetlist&) = default;
};

inline SystemNetlist default_netlist() { return SystemNetlist{}; }

namespace nl_detail {

inline std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double to_double(const std::string& v, std::size_t line) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (!end || *end != '\0' || end == v.c_str())
        throw NetlistError("expected a number, got '" + v + "'", line);
    return x;
}

inline bool to_bool(const std::string& v, std::size_t line) {
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    throw NetlistError("expected true/false, got '" + v + "'", line);
}

} // namespace nl_detail

inline std::string print_netlist(const SystemNetlist& n) {
    using nl_detail::g17;
    std::ostringstream os;
    os << "# reconfigurable feed network + dual-fed patch, system description\n"
       << "# units: hz, mm, ohm, farad, henry\n\n";
    os << "[grid]\n"
       << "start_hz = " << g17(n.grid.start_hz) << "\n"
       << "stop_hz = " << g17(n.grid.stop_hz) << "\n"
       << "step_hz = " << g17(n.grid.step_hz) << "\n\n";
    os << "[substrate]\n"
       << "eps_r = " << g17(n.substrate.eps_r) << "\n"
       << "h_mm = " << g17(n.substrate.h_mm) << "\n"
       << "tan_d = " << g17(n.substrate.tan_d) << "\n\n";
    os << "[options]\n"
       << "# ideal swaps every block for its textbook S-matrix (and drops loss)\n"
       << "mode = " << (n.mode == SystemMode::kIdeal ? "ideal" : "realized")
       << "\n"
       << "# use the published line dims instead of synthesized ones\n"
       << "dims_as_published = " << (n.dims_as_published ? "true" : "false")
       << "\n\n";
    os << "[wilkinson]\n"
       << "f0_hz = " << g17(n.wilkinson.f0_hz) << "\n"
       << "iso_r_ohm = " << g17(n.wilkinson.iso_r_ohm) << "\n\n";
    for (int i = 0; i < 2; ++i) {
        const SwitchCircuit& sw = i == 0 ? n.switch1 : n.switch2;
        os << "[switch" << (i + 1) << "]\n"
           << "series_r_ohm = " << g17(sw.series_r_ohm) << "\n"
           << "dc_block_f = " << g17(sw.dc_block_f) << "\n"
           << "choke_l_h = " << g17(sw.choke_l_h) << "\n"
           << "include_dc_blocks = " << (sw.include_dc_blocks ? "true" : "false")
           << "\n"
           << "include_choke = " << (sw.include_choke ? "true" : "false") << "\n"
           << "diode_r_on_ohm = " << g17(sw.diode.r_on_ohm) << "\n"
           << "diode_r_off_ohm = " << g17(sw.diode.r_off_ohm) << "\n"
           << "diode_c_j_f = " << g17(sw.diode.c_j_f) << "\n"
           << "diode_l_s_h = " << g17(sw.diode.l_s_h) << "\n\n";
    }
    os << "[branchline]\n"
       << "f0_hz = " << g17(n.branchline.f0_hz) << "\n\n";
    os << "[patch]\n"
       << "edge_mm = " << g17(n.patch.edge_mm) << "\n"
       << "r_peak_ohm = " << g17(n.patch.r_peak_ohm) << "\n"
       << "q_total = " << g17(n.patch.q_total) << "\n"
       << "approach_w_mm = " << g17(n.patch.approach.w_mm) << "\n"
       << "approach_l_mm = " << g17(n.patch.approach.l_mm) << "\n"
       << "match_w_mm = " << g17(n.patch.match.w_mm) << "\n"
       << "match_l_mm = " << g17(n.patch.match.l_mm) << "\n";
    return os.str();
}

inline SystemNetlist parse_netlist(std::istream& is) {
    using nl_detail::to_bool;
    using nl_detail::to_double;
    SystemNetlist n;
    std::string section;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string line = nl_detail::trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw NetlistError("unterminated section header", lineno);
            section = line.substr(1, line.size() - 2);
            if (section != "grid" && section != "substrate" &&
                section != "options" && section != "wilkinson" &&
                section != "switch1" && section != "switch2" &&
                section != "branchline" && section != "patch")
                throw NetlistError("unknown section [" + section + "]", lineno);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw NetlistError("expected 'key = value'", lineno);
        const std::string key = nl_detail::trim(line.substr(0, eq));
        const std::string val = nl_detail::trim(line.substr(eq + 1));
        if (section.empty())
            throw NetlistError("assignment before any section", lineno);
        if (key.empty() || val.empty())
            throw NetlistError("expected 'key = value'", lineno);

        auto unknown = [&]() -> NetlistError {
            return NetlistError("unknown key '" + key + "' in [" + section + "]",
                                lineno);
        };
        if (section == "grid") {
            if (key == "start_hz")
                n.grid.start_hz = to_double(val, lineno);
            else if (key == "stop_hz")
                n.grid.stop_hz = to_double(val, lineno);
            else if (key == "step_hz")
                n.grid.step_hz = to_double(val, lineno);
            else
                throw unknown();
        } else if (section == "substrate") {
            if (key == "eps_r")
                n.substrate.eps_r = to_double(val, lineno);
            else if (key == "h_mm")
                n.substrate.h_mm = to_double(val, lineno);
            else if (key == "tan_d")
                n.substrate.tan_d = to_double(val, lineno);
            else
                throw unknown();
        } else if (section == "options") {
            if (key == "mode") {
                if (val == "ideal")
                    n.mode = SystemMode::kIdeal;
                else if (val == "realized")
                    n.mode = SystemMode::kRealized;
                else
                    throw NetlistError("mode must be ideal or realized", lineno);
            } else if (key == "dims_as_published") {
                n.dims_as_published = to_bool(val, lineno);
            } else {
                throw unknown();
            }
        } else if (section == "wilkinson") {
            if (key == "f0_hz")
                n.wilkinson.f0_hz = to_double(val, lineno);
            else if (key == "iso_r_ohm")
                n.wilkinson.iso_r_ohm = to_double(val, lineno);
            else
                throw unknown();
        } else if (section == "switch1" || section == "switch2") {
            SwitchCircuit& sw = section == "switch1" ? n.switch1 : n.switch2;
            if (key == "series_r_ohm")
                sw.series_r_ohm = to_double(val, lineno);
            else if (key == "dc_block_f")
                sw.dc_block_f = to_double(val, lineno);
            else if (key == "choke_l_h")
                sw.choke_l_h = to_double(val, lineno);
            else if (key == "include_dc_blocks")
                sw.include_dc_blocks = to_bool(val, lineno);
            else if (key == "include_choke")
                sw.include_choke = to_bool(val, lineno);
            else if (key == "diode_r_on_ohm")
                sw.diode.r_on_ohm = to_double(val, lineno);
            else if (key == "diode_r_off_ohm")
                sw.diode.r_off_ohm = to_double(val, lineno);
            else if (key == "diode_c_j_f")
                sw.diode.c_j_f = to_double(val, lineno);
            else if (key == "diode_l_s_h")
                sw.diode.l_s_h = to_double(val, lineno);
            else
                throw unknown();
        } else if (section == "branchline") {
            if (key == "f0_hz")
                n.branchline.f0_hz = to_double(val, lineno);
            else
                throw unknown();
        } else { // patch
            if (key == "edge_mm")
                n.patch.edge_mm = to_double(val, lineno);
            else if (key == "r_peak_ohm")
                n.patch.r_peak_ohm = to_double(val, lineno);
            else if (key == "q_total")
                n.patch.q_total = to_double(val, lineno);
            else if (key == "approach_w_mm")
                n.patch.approach.w_mm = to_double(val, lineno);
            else if (key == "approach_l_mm")
                n.patch.approach.l_mm = to_double(val, lineno);
            else if (key == "match_w_mm")
                n.patch.match.w_mm = to_double(val, lineno);
            else if (key == "match_l_mm")
                n.patch.match.l_mm = to_double(val, lineno);
            else
                throw unknown();
        }
    }
    return n;
}

inline SystemNetlist parse_netlist(const std::string& text) {
    std::istringstream is(text);
    return parse_netlist(is);
}

} // namespace rfnet
