#pragma once

// Umbrella header: the whole delay-logistic laboratory in one include.

#include "csv.hpp"
#include "econ.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "grid.hpp"
#include "integrate.hpp"
#include "logistic.hpp"
#include "regime.hpp"
#include "trajectory.hpp"
