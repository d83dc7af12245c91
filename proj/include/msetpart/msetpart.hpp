#pragma once

// Umbrella header: exact enumeration of multiset set-partitions via
// normal-ordered differential operators, a brute-force reference
// enumerator, and a uniform sampler for classical set partitions.

#include "msetpart/bigint.hpp"
#include "msetpart/engine.hpp"
#include "msetpart/io.hpp"
#include "msetpart/operators.hpp"
#include "msetpart/oracle.hpp"
#include "msetpart/partitions.hpp"
#include "msetpart/polynomial.hpp"
#include "msetpart/sampler.hpp"
