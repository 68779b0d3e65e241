#pragma once

#include "threecol/plane_graph.hpp"
#include "threecol/coloring.hpp"
#include "threecol/matrix.hpp"
#include "threecol/transition.hpp"
#include "threecol/laminar.hpp"
#include "threecol/bounds.hpp"
#include "threecol/generators.hpp"
#include "threecol/io.hpp"
