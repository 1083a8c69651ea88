#pragma once

// Umbrella header.

#include "bench.hpp"
#include "bipartite_graph.hpp"
#include "cut_distribution.hpp"
#include "errors.hpp"
#include "gf2.hpp"
#include "graph_io.hpp"
#include "krawtchouk.hpp"
#include "macwilliams.hpp"
#include "matching_count.hpp"
#include "odd_transform.hpp"
#include "random_graph.hpp"
#include "shift_ops.hpp"
#include "weight_distribution.hpp"
