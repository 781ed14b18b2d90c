#pragma once

#include "transmutant/closed_forms.hpp"
#include "transmutant/darboux.hpp"
#include "transmutant/dirac.hpp"
#include "transmutant/errors.hpp"
#include "transmutant/formal_powers.hpp"
#include "transmutant/goursat.hpp"
#include "transmutant/grid.hpp"
#include "transmutant/io.hpp"
#include "transmutant/transmute.hpp"
