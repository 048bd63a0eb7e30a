#include <gtest/gtest.h>

#include "rfnet/antenna.hpp"
#include "rfnet/bands.hpp"

using namespace rfnet;

namespace {

const Substrate kFr4Lossy{4.6, 1.0, 0.02};
const Substrate kFr4{4.6, 1.0, 0.0};

} // namespace

TEST(PatchCavity, ReferenceResonance) {
    const PatchSpec p;
    EXPECT_NEAR(patch_edge_extension_mm(p, kFr4Lossy), 0.45988036444818636,
                1e-12);
    const double fr = patch_resonance_hz(p, kFr4Lossy);
    EXPECT_NEAR(fr, 2503226220.970491, 1.0);
    EXPECT_GT(fr, 2.33e9);
    EXPECT_LT(fr, 2.57e9);
    // loss tangent plays no role in the resonance estimate
    EXPECT_DOUBLE_EQ(patch_resonance_hz(p, kFr4), fr);
}

TEST(PatchCavity, Monotonicity) {
    PatchSpec p;
    double prev = 1e12;
    for (double a = 20.0; a <= 34.0; a += 1.0) {
        p.edge_mm = a;
        const double fr = patch_resonance_hz(p, kFr4Lossy);
        EXPECT_LT(fr, prev) << "bigger patch must resonate lower";
        prev = fr;
    }
    Substrate sub = kFr4Lossy;
    p.edge_mm = 27.0;
    prev = 1e12;
    for (double er = 2.2; er <= 6.2; er += 0.5) {
        sub.eps_r = er;
        const double fr = patch_resonance_hz(p, sub);
        EXPECT_LT(fr, prev) << "denser dielectric must resonate lower";
        prev = fr;
    }
    EXPECT_THROW(patch_resonance_hz(PatchSpec{.edge_mm = -1.0}, kFr4),
                 ValidityError);
}

TEST(PatchMode, ResonatorShape) {
    const PatchSpec p;
    const double fr = patch_resonance_hz(p, kFr4);
    const cxd at_res = patch_mode_impedance(p, kFr4, fr);
    EXPECT_NEAR(at_res.real(), p.r_peak_ohm, 1e-9);
    EXPECT_NEAR(at_res.imag(), 0.0, 1e-9);
    // off resonance the parallel resonator shrinks and goes reactive
    for (double f : {0.9 * fr, 1.1 * fr}) {
        const cxd z = patch_mode_impedance(p, kFr4, f);
        EXPECT_LT(std::abs(z), p.r_peak_ohm);
        EXPECT_NE(z.imag(), 0.0);
    }
    // capacitive above resonance, inductive below, as a parallel RLC must be
    EXPECT_GT(patch_mode_impedance(p, kFr4, 0.9 * fr).imag(), 0.0);
    EXPECT_LT(patch_mode_impedance(p, kFr4, 1.1 * fr).imag(), 0.0);
}

TEST(PatchPort, ReferenceReflection) {
    const PatchSpec p; // q_total = 5.1
    const double fr = patch_resonance_hz(p, kFr4Lossy);
    {
        const cxd g = patch_feed_gamma(p, kFr4Lossy, fr);
        EXPECT_NEAR(g.real(), 0.14688276334494246, 1e-11);
        EXPECT_NEAR(g.imag(), -0.0717608557211062, 1e-11);
        EXPECT_NEAR(db20(g), -15.730958297908348, 1e-9);
        // at resonance the mode impedance is purely r_peak, so Q drops out
        PatchSpec pq = p;
        pq.q_total = 11.0;
        const cxd gq = patch_feed_gamma(pq, kFr4Lossy, fr);
        EXPECT_NEAR(std::abs(gq - g), 0.0, 1e-15);
    }
    {
        const cxd g = patch_feed_gamma(p, kFr4, fr);
        EXPECT_NEAR(g.real(), 0.1520053900595783, 1e-11);
        EXPECT_NEAR(g.imag(), -0.07014459782216918, 1e-11);
    }
    {
        const cxd g = patch_feed_gamma(p, kFr4Lossy, 2.45e9);
        EXPECT_NEAR(g.real(), 0.089240408148224579, 1e-11);
        EXPECT_NEAR(g.imag(), -0.14185365586300261, 1e-11);
    }
}

TEST(PatchPort, CalibratedBandwidth) {
    const PatchSpec p;
    const auto grid = FrequencyGrid::range(2.0e9, 3.0e9, 1e6);
    auto port_bw = [&](double q) {
        PatchSpec pq = p;
        pq.q_total = q;
        std::vector<double> f(grid.begin(), grid.end()), v;
        v.reserve(f.size());
        for (double fx : f)
            v.push_back(db20(patch_feed_gamma(pq, kFr4Lossy, fx)));
        const BandScan scan = bands_below(f, v, -10.0);
        const Band* b = scan.widest();
        return b ? b->fractional_percent() : 0.0;
    };
    // the default loaded Q is calibrated for a ~9% -10 dB port bandwidth
    const double bw = port_bw(p.q_total);
    EXPECT_NEAR(bw, 8.976506141, 1e-3);
    EXPECT_GE(bw, 6.0);
    EXPECT_LE(bw, 12.0);
    // bandwidth shrinks as the mode Q rises
    EXPECT_LT(port_bw(7.0), bw);
    EXPECT_LT(port_bw(11.0), port_bw(7.0));
}

TEST(PatchLoad, DiagonalTwoPort) {
    const PatchSpec p;
    const auto grid = FrequencyGrid::range(2.3e9, 2.7e9, 0.02e9);
    const auto blk = patch_load(p, kFr4Lossy, grid);
    ASSERT_EQ(blk.n_ports(), 2u);
    for (std::size_t i = 0; i < blk.size(); ++i) {
        const SMatrix& s = blk.at(i);
        EXPECT_EQ(s(0, 1), cxd(0.0));
        EXPECT_EQ(s(1, 0), cxd(0.0));
        EXPECT_EQ(s(0, 0), s(1, 1));
        EXPECT_LT(std::abs(s(0, 0)), 1.0);
    }
    EXPECT_TRUE(is_passive(blk));
}

TEST(ModeWave, PowerConservation) {
    const cxd incident(0.3, -0.4);
    const cxd gamma(0.6, 0.3);
    const cxd delivered = mode_wave(incident, gamma);
    EXPECT_NEAR(std::norm(delivered) + std::norm(gamma) * std::norm(incident),
                std::norm(incident), 1e-15);
    EXPECT_NEAR(std::arg(delivered), std::arg(incident), 1e-15);
    // total reflection delivers nothing
    EXPECT_NEAR(std::abs(mode_wave(incident, cxd(1.0))), 0.0, 1e-15);
}
