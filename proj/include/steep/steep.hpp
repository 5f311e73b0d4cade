#pragma once

// Umbrella header for the whole library.

#include "steep/coding.hpp"
#include "steep/emit.hpp"
#include "steep/feasibility.hpp"
#include "steep/montecarlo.hpp"
#include "steep/optimize.hpp"
#include "steep/params.hpp"
#include "steep/philox.hpp"
#include "steep/privacy.hpp"
#include "steep/secrecy.hpp"
#include "steep/units.hpp"
