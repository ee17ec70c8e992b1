#pragma once

#include "plabica/conjecture.hpp"
#include "plabica/dihedral.hpp"
#include "plabica/dot.hpp"
#include "plabica/errors.hpp"
#include "plabica/families.hpp"
#include "plabica/gelfand_tsetlin.hpp"
#include "plabica/grassmann.hpp"
#include "plabica/json_io.hpp"
#include "plabica/moves.hpp"
#include "plabica/mutation_search.hpp"
#include "plabica/plabic_graph.hpp"
#include "plabica/polynomial.hpp"
#include "plabica/polytope.hpp"
#include "plabica/quiver.hpp"
#include "plabica/rational_expr.hpp"
#include "plabica/seed.hpp"
#include "plabica/service.hpp"
#include "plabica/subsets.hpp"
#include "plabica/superpotential.hpp"
#include "plabica/trips.hpp"
#include "plabica/tropical.hpp"
