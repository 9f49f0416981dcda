#pragma once

// Umbrella header.

#include "rootcensus/census.hpp"
#include "rootcensus/incexc.hpp"
#include "rootcensus/multipoly.hpp"
#include "rootcensus/numtheory.hpp"
#include "rootcensus/parallel.hpp"
#include "rootcensus/polytext.hpp"
#include "rootcensus/rational.hpp"
#include "rootcensus/resultant.hpp"
#include "rootcensus/ring.hpp"
#include "rootcensus/shaped.hpp"
#include "rootcensus/unipoly.hpp"
#include "rootcensus/unlucky.hpp"
