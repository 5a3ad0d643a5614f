#pragma once

#include "iec/bounds.hpp"
#include "iec/coloring.hpp"
#include "iec/conflict_graph.hpp"
#include "iec/families.hpp"
#include "iec/graph.hpp"
#include "iec/graph_algorithms.hpp"
#include "iec/graph_io.hpp"
#include "iec/reduction.hpp"
#include "iec/solver.hpp"
