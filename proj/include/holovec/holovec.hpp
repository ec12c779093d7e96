#pragma once

// Umbrella header for the holovec toolkit: blade-based geometric algebra,
// holographic reduced representations, binary spatter codes, the Cartan
// matrix cross-check, and role-filler records over all three backends.

#include "holovec/bsc.hpp"
#include "holovec/cartan.hpp"
#include "holovec/common.hpp"
#include "holovec/experiment.hpp"
#include "holovec/ga/blade.hpp"
#include "holovec/ga/multivector.hpp"
#include "holovec/hrr.hpp"
#include "holovec/io.hpp"
#include "holovec/rng.hpp"
#include "holovec/vsa.hpp"
