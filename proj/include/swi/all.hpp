// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "swi/benchmarks.hpp"
#include "swi/chebyshev.hpp"
#include "swi/csv.hpp"
#include "swi/harness.hpp"
#include "swi/interpolant.hpp"
#include "swi/lagrange.hpp"
#include "swi/metrics.hpp"
#include "swi/nodes.hpp"
#include "swi/symmetric_wave.hpp"
