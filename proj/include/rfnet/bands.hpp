#pragma once

#include <cstddef>
#include <vector>

#include "rfnet/errors.hpp"

// Threshold-band extraction on sampled traces (return-loss bandwidth, axial
// ratio bandwidth). Edges are linearly interpolated between samples and
// clipped to the sweep span.

namespace rfnet {

struct Band {
    double lo_hz = 0.0;
    double hi_hz = 0.0;
    double center_hz() const { return 0.5 * (lo_hz + hi_hz); }
    double width_hz() const { return hi_hz - lo_hz; }
    double fractional_percent() const {
        return 100.0 * width_hz() / center_hz();
    }
};

struct BandScan {
    std::vector<Band> bands;
    bool empty() const { return bands.empty(); }
    // widest band, the headline number when several sub-bands exist
    const Band* widest() const {
        const Band* best = nullptr;
        for (const Band& b : bands)
            if (!best || b.width_hz() > best->width_hz())
                best = &b;
        return best;
    }
};

// Intervals where v <= threshold. f must be ascending (a FrequencyGrid's
// values qualify).
inline BandScan bands_below(const std::vector<double>& f,
                            const std::vector<double>& v, double threshold) {
    if (f.size() != v.size() || f.empty())
        throw GridError("trace and grid sizes differ");
    BandScan scan;
    bool inside = v[0] <= threshold;
    double lo = f[0];
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        const bool next_inside = v[i + 1] <= threshold;
        if (inside == next_inside)
            continue;
        const double t = (threshold - v[i]) / (v[i + 1] - v[i]);
        const double fc = f[i] + t * (f[i + 1] - f[i]);
        if (next_inside)
            lo = fc;
        else
            scan.bands.push_back({lo, fc});
        inside = next_inside;
    }
    if (inside)
        scan.bands.push_back({lo, f.back()});
    return scan;
}

} // namespace rfnet
