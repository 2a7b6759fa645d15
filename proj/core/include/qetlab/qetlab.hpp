// Copyright 2026 The qetlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header: the full qetlab public API.

#pragma once

#include "qetlab/circuit.hpp"
#include "qetlab/complex_matrix.hpp"
#include "qetlab/eig.hpp"
#include "qetlab/errors.hpp"
#include "qetlab/hamiltonian.hpp"
#include "qetlab/nelder_mead.hpp"
#include "qetlab/protocol.hpp"
#include "qetlab/rng.hpp"
#include "qetlab/slp.hpp"
#include "qetlab/state.hpp"
