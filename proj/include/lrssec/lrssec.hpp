#pragma once

// Umbrella header for the lrssec library: closed-form, asymptotic and Monte
// Carlo physical-layer-security metrics for large-reflecting-surface links
// with residual phase errors.

#include "lrssec/channel.hpp"
#include "lrssec/common.hpp"
#include "lrssec/laplace.hpp"
#include "lrssec/metrics.hpp"
#include "lrssec/montecarlo.hpp"
#include "lrssec/quadrature.hpp"
#include "lrssec/rng.hpp"
#include "lrssec/special_functions.hpp"
#include "lrssec/stats.hpp"
#include "lrssec/sweep.hpp"
#include "lrssec/transform.hpp"
#include "lrssec/validation.hpp"
