#pragma once

// Umbrella header for the full toolkit.

#include "sce/cut.hpp"
#include "sce/data.hpp"
#include "sce/eval.hpp"
#include "sce/graph.hpp"
#include "sce/matrix.hpp"
#include "sce/model.hpp"
#include "sce/rng.hpp"
#include "sce/smoothing.hpp"
#include "sce/training.hpp"
