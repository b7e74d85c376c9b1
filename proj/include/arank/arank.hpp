#pragma once

#include "arank/betti.hpp"
#include "arank/constructions.hpp"
#include "arank/errors.hpp"
#include "arank/family.hpp"
#include "arank/groebner.hpp"
#include "arank/io.hpp"
#include "arank/monomial_ideal.hpp"
#include "arank/polynomial.hpp"
#include "arank/simplicial_complex.hpp"
#include "arank/varset.hpp"
#include "arank/verifier.hpp"
