#pragma once

/// Umbrella header for the torsim library.

#include "torsim/errors.hpp"
#include "torsim/integer.hpp"
#include "torsim/poly.hpp"
#include "torsim/ring.hpp"
#include "torsim/ideal.hpp"
#include "torsim/matrix.hpp"
#include "torsim/fingroup.hpp"
#include "torsim/finmod.hpp"
#include "torsim/fp.hpp"
#include "torsim/quiver.hpp"
#include "torsim/torsion.hpp"
#include "torsim/categories.hpp"
#include "torsim/modtorsion.hpp"
#include "torsim/mccoy.hpp"
#include "torsim/json_io.hpp"
#include "torsim/parallel.hpp"
#include "torsim/suites.hpp"
#include "torsim/cli.hpp"
