#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rfnet/errors.hpp"
#include "rfnet/network.hpp"

// Touchstone v1 S-parameter files, one to four ports. The writer always
// emits "# GHz S MA R 50" and nine significant digits, which keeps a
// write/read/write cycle byte-identical. The reader accepts any frequency
// unit and MA/RI/DB triplet formats, but only S-parameters at 50 ohm.
//
// v1 data layout, as published: a two-port row holds S11 S21 S12 S22 on one
// line; three ports and up are row-major with at most four value pairs per
// line and the frequency leading the first line of each block.

namespace rfnet {

namespace ts_detail {

inline std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

// (row, col) sequence in file order for an n-port block.
inline std::vector<std::pair<std::size_t, std::size_t>> file_order(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    if (n == 2) {
        order = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                order.emplace_back(i, j);
    }
    return order;
}

inline bool parse_double(const std::string& tok, double& out) {
    char* end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    return end && *end == '\0' && end != tok.c_str();
}

inline std::string lower(std::string s) {
    for (char& c : s)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace ts_detail

inline void write_touchstone(std::ostream& os, const NetworkBlock& blk) {
    const std::size_t n = blk.n_ports();
    if (n > 4)
        throw TouchstoneError("more than four ports needs Touchstone v2");
    using ts_detail::fmt9;
    os << "# GHz S MA R 50\n";
    const auto order = ts_detail::file_order(n);
    for (std::size_t fi = 0; fi < blk.size(); ++fi) {
        const SMatrix& s = blk.at(fi);
        std::string line = fmt9(blk.grid()[fi] / 1e9);
        std::size_t pairs_on_line = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const cxd v = s(static_cast<Eigen::Index>(order[k].first),
                            static_cast<Eigen::Index>(order[k].second));
            // wrap: new line at each row for n >= 3, never for n <= 2
            const bool row_break =
                n >= 3 && k > 0 && order[k].second == 0;
            if (row_break || pairs_on_line == 4) {
                os << line << "\n";
                line = " ";
                pairs_on_line = 0;
            }
            line += " " + fmt9(std::abs(v)) + " " + fmt9(deg(std::arg(v)));
            ++pairs_on_line;
        }
        os << line << "\n";
    }
}

inline NetworkBlock read_touchstone(std::istream& is, std::size_t n_ports) {
    if (n_ports < 1 || n_ports > 4)
        throw TouchstoneError("port count must be between 1 and 4");

    double unit_hz = 1e9;
    std::string fmt = "ma";
    bool have_option = false;

    struct Tok {
        double value;
        std::size_t line;
    };
    std::vector<Tok> data;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto bang = line.find('!'); bang != std::string::npos)
            line.erase(bang);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first))
            continue;
        if (first[0] == '#') {
            if (have_option)
                throw TouchstoneError("multiple option lines", lineno);
            have_option = true;
            std::vector<std::string> toks;
            if (first.size() > 1)
                toks.push_back(ts_detail::lower(first.substr(1)));
            std::string t;
            while (ls >> t)
                toks.push_back(ts_detail::lower(t));
            for (std::size_t i = 0; i < toks.size(); ++i) {
                const std::string& tk = toks[i];
                if (tk == "hz")
                    unit_hz = 1.0;
                else if (tk == "khz")
                    unit_hz = 1e3;
                else if (tk == "mhz")
                    unit_hz = 1e6;
                else if (tk == "ghz")
                    unit_hz = 1e9;
                else if (tk == "ma" || tk == "ri" || tk == "db")
                    fmt = tk;
                else if (tk == "s")
                    ; // only parameter type we take
                else if (tk == "y" || tk == "z" || tk == "h" || tk == "g")
                    throw TouchstoneError(
                        "unsupported parameter type '" + tk + "'", lineno);
                else if (tk == "r") {
                    if (i + 1 >= toks.size())
                        throw TouchstoneError("option 'R' needs a value", lineno);
                    double r = 0.0;
                    if (!ts_detail::parse_double(toks[++i], r))
                        throw TouchstoneError("bad reference resistance", lineno);
                    if (std::abs(r - 50.0) > 1e-6)
                        throw TouchstoneError(
                            "only a 50 ohm reference is supported", lineno);
                } else {
                    throw TouchstoneError("unrecognized option '" + tk + "'",
                                          lineno);
                }
            }
            continue;
        }
        if (first.substr(0, 2) == "[v" || first.substr(0, 2) == "[V")
            throw TouchstoneError("Touchstone v2 keywords not supported", lineno);
        if (!have_option)
            throw TouchstoneError("data before the option line", lineno);
        std::string tok = first;
        do {
            double v = 0.0;
            if (!ts_detail::parse_double(tok, v))
                throw TouchstoneError("unexpected token '" + tok + "'", lineno);
            data.push_back({v, lineno});
        } while (ls >> tok);
    }
    if (!have_option)
        throw TouchstoneError("missing option line");
    if (data.empty())
        throw TouchstoneError("no data");

    const std::size_t per_block = 1 + 2 * n_ports * n_ports;
    if (data.size() % per_block != 0)
        throw TouchstoneError("incomplete data block", data.back().line);

    const auto order = ts_detail::file_order(n_ports);
    std::vector<double> freqs;
    std::vector<SMatrix> frames;
    for (std::size_t off = 0; off < data.size(); off += per_block) {
        freqs.push_back(data[off].value * unit_hz);
        SMatrix s(n_ports, n_ports);
        for (std::size_t k = 0; k < order.size(); ++k) {
            const double x = data[off + 1 + 2 * k].value;
            const double y = data[off + 2 + 2 * k].value;
            cxd v;
            if (fmt == "ma")
                v = std::polar(x, rad(y));
            else if (fmt == "db")
                v = std::polar(std::pow(10.0, x / 20.0), rad(y));
            else
                v = cxd(x, y);
            s(static_cast<Eigen::Index>(order[k].first),
              static_cast<Eigen::Index>(order[k].second)) = v;
        }
        frames.push_back(std::move(s));
    }
    try {
        return NetworkBlock(FrequencyGrid(std::move(freqs)), std::move(frames));
    } catch (const GridError& e) {
        throw TouchstoneError(e.what());
    }
}

// Port count inferred from the .sNp suffix, or 0 when there is none.
inline std::size_t ports_from_filename(const std::string& path) {
    const std::string low = ts_detail::lower(path);
    const std::size_t len = low.size();
    if (len >= 4 && low[len - 4] == '.' && low[len - 3] == 's' &&
        low[len - 1] == 'p' && low[len - 2] >= '1' && low[len - 2] <= '9')
        return static_cast<std::size_t>(low[len - 2] - '0');
    return 0;
}

inline NetworkBlock read_touchstone(const std::string& path) {
    const std::size_t n = ports_from_filename(path);
    if (n == 0)
        throw TouchstoneError("cannot infer port count from '" + path +
                              "' (want .s1p..s4p)");
    std::ifstream f(path);
    if (!f)
        throw TouchstoneError("cannot open '" + path + "'");
    return read_touchstone(f, n);
}

inline void write_touchstone(const std::string& path, const NetworkBlock& blk) {
    const std::size_t n = ports_from_filename(path);
    if (n != 0 && n != blk.n_ports())
        throw TouchstoneError("suffix of '" + path +
                              "' does not match the port count");
    std::ofstream f(path);
    if (!f)
        throw TouchstoneError("cannot open '" + path + "' for writing");
    write_touchstone(f, blk);
}

} // namespace rfnet
