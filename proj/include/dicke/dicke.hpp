// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "dicke/circuit_io.hpp"
#include "dicke/error.hpp"
#include "dicke/gate_spec.hpp"
#include "dicke/gates.hpp"
#include "dicke/half_int.hpp"
#include "dicke/ledger.hpp"
#include "dicke/measurement.hpp"
#include "dicke/noise.hpp"
#include "dicke/operator.hpp"
#include "dicke/parallel.hpp"
#include "dicke/spin_ops.hpp"
#include "dicke/squeezing.hpp"
#include "dicke/state.hpp"
#include "dicke/states.hpp"
#include "dicke/summary.hpp"
