#pragma once

#include "lievol/checks.hpp"
#include "lievol/errors.hpp"
#include "lievol/quad.hpp"
#include "lievol/rational.hpp"
#include "lievol/rootsys.hpp"
#include "lievol/special.hpp"
#include "lievol/summation.hpp"
#include "lievol/vogel.hpp"
#include "lievol/volume.hpp"
