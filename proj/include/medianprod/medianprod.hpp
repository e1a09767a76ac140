#pragma once

#include "medianprod/describe.hpp"
#include "medianprod/distance.hpp"
#include "medianprod/enumerate.hpp"
#include "medianprod/error.hpp"
#include "medianprod/graph.hpp"
#include "medianprod/grid_embed.hpp"
#include "medianprod/io.hpp"
#include "medianprod/median.hpp"
#include "medianprod/patterns.hpp"
#include "medianprod/products.hpp"
#include "medianprod/structure.hpp"
#include "medianprod/verify.hpp"
#include "medianprod/witness.hpp"
