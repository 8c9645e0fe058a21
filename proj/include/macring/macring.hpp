#pragma once

// Integral cohomology rings of moment-angle complexes Z_K, computed from the
// finite quotient R*(K) of the Koszul resolution of the face ring, with a
// cellular cochain model for the product and a full-subcomplex oracle for
// cross-checking the additive answer.

#include "macring/abelian_group.hpp"
#include "macring/cellular_model.hpp"
#include "macring/cohomology.hpp"
#include "macring/cohomology_engine.hpp"
#include "macring/errors.hpp"
#include "macring/hochster.hpp"
#include "macring/int_matrix.hpp"
#include "macring/integer.hpp"
#include "macring/json_io.hpp"
#include "macring/koszul_dga.hpp"
#include "macring/koszul_e.hpp"
#include "macring/linear_combo.hpp"
#include "macring/simplicial_complex.hpp"
#include "macring/smith.hpp"
#include "macring/subset.hpp"
#include "macring/verify.hpp"
