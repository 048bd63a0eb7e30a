#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "rfnet/errors.hpp"
#include "rfnet/frequency_grid.hpp"

// Scattering-parameter core: frequency-sampled n-port blocks, chain/scattering
// representation changes, block combination and port-join reduction.
// Ports are 0-based throughout the library; file formats and the CLI print
// them 1-based as usual.

namespace rfnet {

using cxd = std::complex<double>;
using SMatrix = Eigen::MatrixXcd;

inline constexpr double kZ0 = 50.0;          // single-ended reference, ohm
inline constexpr double kC0 = 299792458.0;   // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEta0 = 376.730313668; // free-space impedance, ohm

inline double db20(double mag) { return 20.0 * std::log10(mag); }
inline double db20(const cxd& x) { return 20.0 * std::log10(std::abs(x)); }
inline double deg(double rad) { return rad * 180.0 / kPi; }
inline double rad(double d) { return d * kPi / 180.0; }

// Chain (ABCD) matrix of a two-port.
struct Abcd {
    cxd a{1.0}, b{0.0}, c{0.0}, d{1.0};

    Abcd operator*(const Abcd& r) const {
        return {a * r.a + b * r.c, a * r.b + b * r.d,
                c * r.a + d * r.c, c * r.b + d * r.d};
    }
};

// An n-port sampled on a frequency grid: one S-matrix per grid point,
// all referenced to kZ0.
class NetworkBlock {
public:
    NetworkBlock(FrequencyGrid grid, std::vector<SMatrix> frames,
                 std::string label = {})
        : grid_(std::move(grid)), frames_(std::move(frames)),
          label_(std::move(label)) {
        if (frames_.size() != grid_.size())
            throw GridError("frame count does not match grid size");
        const Eigen::Index n = frames_.front().rows();
        if (n < 1)
            throw GridError("network needs at least one port");
        for (const auto& s : frames_)
            if (s.rows() != n || s.cols() != n)
                throw GridError("inconsistent S-matrix dimensions across grid");
    }

    std::size_t n_ports() const {
        return static_cast<std::size_t>(frames_.front().rows());
    }
    std::size_t size() const { return frames_.size(); }
    const FrequencyGrid& grid() const { return grid_; }
    const SMatrix& at(std::size_t i) const { return frames_[i]; }
    const std::string& label() const { return label_; }

private:
    FrequencyGrid grid_;
    std::vector<SMatrix> frames_;
    std::string label_;
};

// Builds a block by evaluating fn(f_hz) -> SMatrix at every grid point.
template <typename Fn>
NetworkBlock build_block(const FrequencyGrid& grid, Fn&& fn,
                         std::string label = {}) {
    std::vector<SMatrix> frames;
    frames.reserve(grid.size());
    for (double f : grid)
        frames.push_back(fn(f));
    return NetworkBlock(grid, std::move(frames), std::move(label));
}

inline SMatrix abcd_to_s(const Abcd& m, double z0 = kZ0) {
    const cxd den = m.a + m.b / z0 + m.c * z0 + m.d;
    if (std::abs(den) < 1e-300)
        throw ConversionError("chain matrix has no scattering representation");
    SMatrix s(2, 2);
    s(0, 0) = (m.a + m.b / z0 - m.c * z0 - m.d) / den;
    s(0, 1) = 2.0 * (m.a * m.d - m.b * m.c) / den;
    s(1, 0) = 2.0 / den;
    s(1, 1) = (-m.a + m.b / z0 - m.c * z0 + m.d) / den;
    return s;
}

inline Abcd s_to_abcd(const SMatrix& s, double z0 = kZ0) {
    if (s.rows() != 2 || s.cols() != 2)
        throw ConversionError("chain form exists only for two-ports");
    const cxd s21 = s(1, 0);
    if (std::abs(s21) < 1e-15)
        throw ConversionError("|S21| ~ 0: block does not transmit, no chain form");
    const cxd den = 2.0 * s21;
    Abcd m;
    m.a = ((1.0 + s(0, 0)) * (1.0 - s(1, 1)) + s(0, 1) * s21) / den;
    m.b = z0 * ((1.0 + s(0, 0)) * (1.0 + s(1, 1)) - s(0, 1) * s21) / den;
    m.c = ((1.0 - s(0, 0)) * (1.0 - s(1, 1)) - s(0, 1) * s21) / (den * z0);
    m.d = ((1.0 - s(0, 0)) * (1.0 + s(1, 1)) + s(0, 1) * s21) / den;
    return m;
}

namespace detail {

inline void require_same_grid(const NetworkBlock& a, const NetworkBlock& b) {
    if (a.grid() != b.grid())
        throw GridError("blocks live on different frequency grids");
}

} // namespace detail

// Chains two two-ports: port 0 of the result is port 0 of a, port 1 is
// port 1 of b. Goes through the chain representation, so both blocks must
// transmit (|S21| > 0); use merge + connect_ports for blocking elements.
inline NetworkBlock cascade(const NetworkBlock& a, const NetworkBlock& b) {
    detail::require_same_grid(a, b);
    if (a.n_ports() != 2 || b.n_ports() != 2)
        throw ConversionError("cascade is defined for two-ports");
    std::vector<SMatrix> frames;
    frames.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        frames.push_back(abcd_to_s(s_to_abcd(a.at(i)) * s_to_abcd(b.at(i))));
    return NetworkBlock(a.grid(), std::move(frames));
}

// Places two blocks side by side with no connection: ports of a first,
// then ports of b.
inline NetworkBlock merge(const NetworkBlock& a, const NetworkBlock& b) {
    detail::require_same_grid(a, b);
    const auto na = static_cast<Eigen::Index>(a.n_ports());
    const auto nb = static_cast<Eigen::Index>(b.n_ports());
    std::vector<SMatrix> frames;
    frames.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        SMatrix s = SMatrix::Zero(na + nb, na + nb);
        s.topLeftCorner(na, na) = a.at(i);
        s.bottomRightCorner(nb, nb) = b.at(i);
        frames.push_back(std::move(s));
    }
    return NetworkBlock(a.grid(), std::move(frames));
}

// Joins ports k and l of one block to each other and removes them
// (Filipsson's reduction). Remaining ports keep their relative order.
inline NetworkBlock connect_ports(const NetworkBlock& blk, std::size_t k,
                                  std::size_t l) {
    const std::size_t n = blk.n_ports();
    if (k >= n || l >= n || k == l)
        throw JunctionError("connect_ports: bad port pair");
    std::vector<std::size_t> keep;
    keep.reserve(n - 2);
    for (std::size_t p = 0; p < n; ++p)
        if (p != k && p != l)
            keep.push_back(p);
    if (keep.empty())
        throw JunctionError("connect_ports would leave a zero-port network");

    std::vector<SMatrix> frames;
    frames.reserve(blk.size());
    for (std::size_t fi = 0; fi < blk.size(); ++fi) {
        const SMatrix& s = blk.at(fi);
        const cxd den =
            (1.0 - s(k, l)) * (1.0 - s(l, k)) - s(k, k) * s(l, l);
        if (std::abs(den) < 1e-12)
            throw JunctionError("ill-conditioned junction at " +
                                std::to_string(blk.grid()[fi]) + " Hz");
        SMatrix r(keep.size(), keep.size());
        for (std::size_t ii = 0; ii < keep.size(); ++ii) {
            const std::size_t i = keep[ii];
            for (std::size_t jj = 0; jj < keep.size(); ++jj) {
                const std::size_t j = keep[jj];
                r(ii, jj) =
                    s(i, j) +
                    (s(k, j) * s(i, l) * (1.0 - s(l, k)) +
                     s(l, j) * s(i, k) * (1.0 - s(k, l)) +
                     s(k, j) * s(l, l) * s(i, k) +
                     s(l, j) * s(k, k) * s(i, l)) /
                        den;
            }
        }
        frames.push_back(std::move(r));
    }
    return NetworkBlock(blk.grid(), std::move(frames));
}

// Reorders ports: port i of the result is port perm[i] of the input.
inline NetworkBlock permute_ports(const NetworkBlock& blk,
                                  const std::vector<std::size_t>& perm) {
    const std::size_t n = blk.n_ports();
    std::vector<bool> seen(n, false);
    if (perm.size() != n)
        throw JunctionError("permutation size does not match port count");
    for (std::size_t p : perm) {
        if (p >= n || seen[p])
            throw JunctionError("not a permutation of the ports");
        seen[p] = true;
    }
    std::vector<SMatrix> frames;
    frames.reserve(blk.size());
    for (std::size_t fi = 0; fi < blk.size(); ++fi) {
        const SMatrix& s = blk.at(fi);
        SMatrix r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) = s(perm[i], perm[j]);
        frames.push_back(std::move(r));
    }
    return NetworkBlock(blk.grid(), std::move(frames));
}

// Attaches a one-port load to the given port and reduces it away.
inline NetworkBlock terminate(const NetworkBlock& blk, std::size_t port,
                              const NetworkBlock& load) {
    if (load.n_ports() != 1)
        throw JunctionError("terminate expects a one-port load");
    const std::size_t n = blk.n_ports();
    if (port >= n)
        throw JunctionError("terminate: port out of range");
    return connect_ports(merge(blk, load), port, n);
}

// ---- ideal elements ----

inline NetworkBlock matched_load(const FrequencyGrid& g) {
    return build_block(g, [](double) { return SMatrix::Zero(1, 1).eval(); });
}

inline NetworkBlock open_circuit(const FrequencyGrid& g) {
    return build_block(g, [](double) {
        SMatrix s(1, 1);
        s(0, 0) = 1.0;
        return s;
    });
}

inline NetworkBlock short_circuit(const FrequencyGrid& g) {
    return build_block(g, [](double) {
        SMatrix s(1, 1);
        s(0, 0) = -1.0;
        return s;
    });
}

// One-port with a prescribed reflection at every grid point.
template <typename Fn>
NetworkBlock reflection_load(const FrequencyGrid& g, Fn&& gamma_of_f) {
    return build_block(g, [&](double f) {
        SMatrix s(1, 1);
        s(0, 0) = gamma_of_f(f);
        return s;
    });
}

inline NetworkBlock thru(const FrequencyGrid& g) {
    return build_block(g, [](double) {
        SMatrix s(2, 2);
        s << 0.0, 1.0, 1.0, 0.0;
        return s;
    });
}

// Ideal n-way parallel node: all ports tied to one electrical point.
inline NetworkBlock junction(std::size_t n, const FrequencyGrid& g) {
    if (n < 2)
        throw JunctionError("junction needs at least two ports");
    const double nd = static_cast<double>(n);
    return build_block(g, [&](double) {
        SMatrix s = SMatrix::Constant(n, n, cxd(2.0 / nd, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            s(i, i) = cxd((2.0 - nd) / nd, 0.0);
        return s;
    });
}

// ---- sanity measures ----

inline double max_singular_value(const SMatrix& s) {
    Eigen::JacobiSVD<SMatrix> svd(s);
    return svd.singularValues()(0);
}

// Largest singular value over the whole grid (<= 1 for a passive network).
inline double max_singular_value(const NetworkBlock& blk) {
    double worst = 0.0;
    for (std::size_t i = 0; i < blk.size(); ++i)
        worst = std::max(worst, max_singular_value(blk.at(i)));
    return worst;
}

inline double max_nonreciprocity(const NetworkBlock& blk) {
    double worst = 0.0;
    for (std::size_t i = 0; i < blk.size(); ++i) {
        const SMatrix& s = blk.at(i);
        worst = std::max(
            worst, (s - SMatrix(s.transpose())).cwiseAbs().maxCoeff());
    }
    return worst;
}

inline bool is_passive(const NetworkBlock& blk, double tol = 1e-9) {
    return max_singular_value(blk) <= 1.0 + tol;
}

inline bool is_reciprocal(const NetworkBlock& blk, double tol = 1e-9) {
    return max_nonreciprocity(blk) <= tol;
}

inline bool is_lossless(const NetworkBlock& blk, double tol = 1e-9) {
    const auto n = static_cast<Eigen::Index>(blk.n_ports());
    for (std::size_t i = 0; i < blk.size(); ++i) {
        const SMatrix& s = blk.at(i);
        const double dev =
            (SMatrix(s.adjoint() * s) - SMatrix::Identity(n, n))
                .cwiseAbs()
                .maxCoeff();
        if (dev > tol)
            return false;
    }
    return true;
}

} // namespace rfnet
