#pragma once

#include "loschmidt/dynamics.hpp"
#include "loschmidt/errors.hpp"
#include "loschmidt/estimators.hpp"
#include "loschmidt/hamiltonian.hpp"
#include "loschmidt/phase_space.hpp"
#include "loschmidt/presets.hpp"
#include "loschmidt/qgrid.hpp"
#include "loschmidt/series.hpp"
#include "loschmidt/series_io.hpp"
#include "loschmidt/spectra.hpp"
#include "loschmidt/state.hpp"
#include "loschmidt/version.hpp"
