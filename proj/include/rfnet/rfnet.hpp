#pragma once

// Umbrella header for the whole library.

#include "rfnet/antenna.hpp"
#include "rfnet/assembly.hpp"
#include "rfnet/bands.hpp"
#include "rfnet/components.hpp"
#include "rfnet/errors.hpp"
#include "rfnet/frequency_grid.hpp"
#include "rfnet/microstrip.hpp"
#include "rfnet/netlist.hpp"
#include "rfnet/network.hpp"
#include "rfnet/polarization.hpp"
#include "rfnet/report.hpp"
#include "rfnet/scenario.hpp"
#include "rfnet/simulator.hpp"
#include "rfnet/touchstone.hpp"
