#pragma once

#include <array>
#include <string>

#include "rfnet/components.hpp"
#include "rfnet/errors.hpp"
#include "rfnet/polarization.hpp"

// The three operating states of the antenna: which diode conducts and what
// polarization that buys.

namespace rfnet {

enum class Scenario { kAnt1, kAnt2, kAnt3 };

struct ScenarioInfo {
    Scenario id;
    const char* name;
    SwitchState diode1; // switch in the branch feeding the coupler input
    SwitchState diode2; // switch in the branch feeding the isolated port
    Sense expected;
    const char* description;
};

inline constexpr std::array<ScenarioInfo, 3> kScenarios{{
    {Scenario::kAnt1, "ant1", SwitchState::kOff, SwitchState::kOff,
     Sense::kLinear, "both branches drive the patch in phase"},
    {Scenario::kAnt2, "ant2", SwitchState::kOff, SwitchState::kOn,
     Sense::kRhcp, "coupler driven at its input port only"},
    {Scenario::kAnt3, "ant3", SwitchState::kOn, SwitchState::kOff,
     Sense::kLhcp, "coupler driven at its isolated port only"},
}};

inline const ScenarioInfo& scenario_info(Scenario s) {
    return kScenarios[static_cast<std::size_t>(s)];
}

inline Scenario scenario_from_name(std::string name) {
    for (char& c : name)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (const auto& si : kScenarios)
        if (name == si.name)
            return si.id;
    throw Error("unknown scenario '" + name + "' (want ant1, ant2 or ant3)");
}

} // namespace rfnet
