#pragma once

#include "hitproblem/errors.hpp"
#include "hitproblem/monomial.hpp"
#include "hitproblem/polynomial.hpp"
#include "hitproblem/steenrod.hpp"
#include "hitproblem/gf2.hpp"
#include "hitproblem/engine.hpp"
#include "hitproblem/quotient.hpp"
#include "hitproblem/weight_filtration.hpp"
#include "hitproblem/morphisms.hpp"
#include "hitproblem/kameko.hpp"
#include "hitproblem/golden.hpp"
#include "hitproblem/io.hpp"
