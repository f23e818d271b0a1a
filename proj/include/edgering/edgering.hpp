#pragma once

#include "edgering/betti_oracle.hpp"
#include "edgering/classify.hpp"
#include "edgering/edge_cone.hpp"
#include "edgering/graph.hpp"
#include "edgering/groebner.hpp"
#include "edgering/homology.hpp"
#include "edgering/monomial.hpp"
#include "edgering/monomial_ideal.hpp"
#include "edgering/reports.hpp"
#include "edgering/splitting.hpp"
#include "edgering/sweep.hpp"
#include "edgering/toric.hpp"
