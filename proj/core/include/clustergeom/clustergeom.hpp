#pragma once

#include "clustergeom/error.hpp"
#include "clustergeom/explorer.hpp"
#include "clustergeom/io.hpp"
#include "clustergeom/lattice.hpp"
#include "clustergeom/laurent.hpp"
#include "clustergeom/matrix.hpp"
#include "clustergeom/pullback.hpp"
#include "clustergeom/rank2.hpp"
#include "clustergeom/seed.hpp"
#include "clustergeom/toric.hpp"
