#pragma once

// Umbrella header: the whole library in one include.

#include "edge_list_io.hpp"
#include "errors.hpp"
#include "fit.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "random.hpp"
#include "sampling.hpp"
#include "stats.hpp"
#include "synthetic.hpp"
#include "version.hpp"
