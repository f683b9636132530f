#pragma once

#include "grid.hpp"
#include "line_of_sight.hpp"
#include "random_grid.hpp"
#include "map_io.hpp"
#include "open_list.hpp"
#include "search.hpp"
#include "heuristics.hpp"
#include "path_metrics.hpp"
#include "visibility_graph.hpp"
#include "planners.hpp"
#include "bench.hpp"
#include "svg.hpp"
