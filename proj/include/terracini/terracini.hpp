#pragma once

// Umbrella header: exact-arithmetic engine for dimensions of linear systems
// with imposed general double points, secant varieties via Terracini's lemma,
// exception-list verification, and effective degree thresholds from the
// obstruction inequality.

#include "terracini/ambient.hpp"
#include "terracini/bounds.hpp"
#include "terracini/errors.hpp"
#include "terracini/interpolation.hpp"
#include "terracini/intersection.hpp"
#include "terracini/linalg.hpp"
#include "terracini/matrix.hpp"
#include "terracini/prime_field.hpp"
#include "terracini/rational.hpp"
#include "terracini/rng.hpp"
#include "terracini/scan.hpp"
#include "terracini/secant.hpp"
#include "terracini/serialize.hpp"
