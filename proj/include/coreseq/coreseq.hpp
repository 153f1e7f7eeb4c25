#pragma once

// Everything except the command line layer.

#include "rational.hpp"
#include "unipoly.hpp"
#include "laurent.hpp"
#include "multipoly.hpp"
#include "bipoly.hpp"
#include "dense_matrix.hpp"
#include "linsolve.hpp"
#include "laurent_matrix.hpp"
#include "cfinite.hpp"
#include "quasipoly.hpp"
#include "guessing.hpp"
#include "multiseq.hpp"
#include "convolve.hpp"
#include "omega.hpp"
#include "scenario.hpp"
#include "fp/field.hpp"
#include "fp/module.hpp"
#include "fp/oracle.hpp"
