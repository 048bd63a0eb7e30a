// Minimal library walkthrough: synthesize a branch-line coupler on FR-4,
// check its center-frequency behavior, and export it as a .s4p file.

#include <cstdio>

#include "rfnet/rfnet.hpp"

using namespace rfnet;

int main() {
    const Substrate fr4{4.6, 1.0, 0.02};
    const FrequencyGrid grid = FrequencyGrid::range(2.0e9, 3.0e9, 10e6);

    const BranchLineSpec spec; // 2.45 GHz center
    const NetworkBlock coup = branchline(spec, fr4, grid);

    const SMatrix& s = coup.at(grid.nearest(spec.f0_hz));
    std::printf("at %.2f GHz: |S21| %.2f dB, |S31| %.2f dB, "
                "S31/S21 phase %.1f deg, |S11| %.1f dB\n",
                spec.f0_hz / 1e9, db20(s(1, 0)), db20(s(2, 0)),
                deg(std::arg(s(2, 0) / s(1, 0))), db20(s(0, 0)));

    write_touchstone("coupler.s4p", coup);
    std::printf("wrote coupler.s4p (%zu points)\n", coup.size());
    return 0;
}
