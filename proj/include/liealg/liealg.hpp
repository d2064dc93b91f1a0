#pragma once

#include "liealg/rational.hpp"
#include "liealg/matrix.hpp"
#include "liealg/subspace.hpp"
#include "liealg/algebra.hpp"
#include "liealg/expr.hpp"
#include "liealg/io.hpp"
#include "liealg/automorphisms.hpp"
#include "liealg/descriptor.hpp"
#include "liealg/sampling.hpp"
#include "liealg/decomposition.hpp"
#include "liealg/direct_sum.hpp"
#include "liealg/catalog.hpp"
