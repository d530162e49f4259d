#pragma once

#include "permorb/rational.hpp"
#include "permorb/cyclotomic.hpp"
#include "permorb/lattice.hpp"
#include "permorb/cocycle.hpp"
#include "permorb/fock.hpp"
#include "permorb/coeffs.hpp"
#include "permorb/vertexops.hpp"
#include "permorb/characters.hpp"
#include "permorb/isomap.hpp"
#include "permorb/report.hpp"
