#pragma once

#include "cprforge/analysis.hpp"
#include "cprforge/brute_force.hpp"
#include "cprforge/constructions.hpp"
#include "cprforge/errors.hpp"
#include "cprforge/labeled_graph.hpp"
#include "cprforge/perm_group.hpp"
#include "cprforge/permutation.hpp"
#include "cprforge/report.hpp"
#include "cprforge/reproduction.hpp"
#include "cprforge/sggi.hpp"
