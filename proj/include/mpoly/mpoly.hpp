#pragma once

// Umbrella header: M-polynomials and degree-based topological indices of
// finite simple graphs, explicit constructions of seven graph products,
// and the closed-form factor-level formulas for their M-polynomials.

#include "mpoly/bench.hpp"
#include "mpoly/bipoly.hpp"
#include "mpoly/degree_counts.hpp"
#include "mpoly/formulas.hpp"
#include "mpoly/golden.hpp"
#include "mpoly/graph.hpp"
#include "mpoly/graph6.hpp"
#include "mpoly/indices.hpp"
#include "mpoly/io.hpp"
#include "mpoly/products.hpp"
#include "mpoly/rational.hpp"
