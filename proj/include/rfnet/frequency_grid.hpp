#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "rfnet/errors.hpp"

namespace rfnet {

// Strictly increasing list of positive frequencies in Hz. Every network
// block carries one; combining blocks requires identical grids.
class FrequencyGrid {
public:
    explicit FrequencyGrid(std::vector<double> f_hz) : f_hz_(std::move(f_hz)) {
        if (f_hz_.empty())
            throw GridError("frequency grid is empty");
        double prev = 0.0;
        for (double f : f_hz_) {
            if (!(f > 0.0) || !std::isfinite(f))
                throw GridError("frequencies must be finite and positive");
            if (f <= prev)
                throw GridError("frequencies must be strictly increasing");
            prev = f;
        }
    }

    // Inclusive start..stop with the given step. Points are start + i*step so
    // the grid is bit-reproducible; a stop that is not a whole number of steps
    // away is simply not reached.
    static FrequencyGrid range(double start_hz, double stop_hz, double step_hz) {
        if (!(step_hz > 0.0) || !(stop_hz >= start_hz))
            throw GridError("bad range: need stop >= start and step > 0");
        const auto n =
            static_cast<std::size_t>(std::floor((stop_hz - start_hz) / step_hz + 1e-9)) + 1;
        std::vector<double> f(n);
        for (std::size_t i = 0; i < n; ++i)
            f[i] = start_hz + static_cast<double>(i) * step_hz;
        return FrequencyGrid(std::move(f));
    }

    static FrequencyGrid single(double f_hz) { return FrequencyGrid({f_hz}); }

    std::size_t size() const { return f_hz_.size(); }
    double operator[](std::size_t i) const { return f_hz_[i]; }
    const std::vector<double>& values() const { return f_hz_; }

    auto begin() const { return f_hz_.begin(); }
    auto end() const { return f_hz_.end(); }

    // Index of the grid point closest to f.
    std::size_t nearest(double f_hz) const {
        std::size_t best = 0;
        double d = std::abs(f_hz_[0] - f_hz);
        for (std::size_t i = 1; i < f_hz_.size(); ++i) {
            const double di = std::abs(f_hz_[i] - f_hz);
            if (di < d) {
                d = di;
                best = i;
            }
        }
        return best;
    }

    friend bool operator==(const FrequencyGrid& a, const FrequencyGrid& b) {
        return a.f_hz_ == b.f_hz_;
    }
    friend bool operator!=(const FrequencyGrid& a, const FrequencyGrid& b) {
        return !(a == b);
    }

private:
    std::vector<double> f_hz_;
};

} // namespace rfnet
