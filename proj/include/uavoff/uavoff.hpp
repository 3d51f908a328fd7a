#pragma once

// Umbrella header for the UAV edge-offloading cost library.

#include "uavoff/binary.hpp"
#include "uavoff/certify.hpp"
#include "uavoff/channel.hpp"
#include "uavoff/config.hpp"
#include "uavoff/error_model.hpp"
#include "uavoff/fleet.hpp"
#include "uavoff/format.hpp"
#include "uavoff/oracle.hpp"
#include "uavoff/partial.hpp"
#include "uavoff/rng.hpp"
#include "uavoff/sweep.hpp"
#include "uavoff/types.hpp"
