#pragma once

// Exact simulator of multiple-quantum NMR preparation-period dynamics for
// small clusters of dipolar-coupled spin-1/2 nuclei: coherence-order
// intensities, Wootters concurrence, and the coherence-based entanglement
// witness, with the closed-form two-spin results available as oracles.

#include "mqnmr/coherence.hpp"
#include "mqnmr/core.hpp"
#include "mqnmr/entangle.hpp"
#include "mqnmr/evolve.hpp"
#include "mqnmr/model.hpp"
#include "mqnmr/spin_ops.hpp"
#include "mqnmr/sweep.hpp"
