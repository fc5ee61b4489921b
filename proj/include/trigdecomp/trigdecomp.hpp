#pragma once

#include "trigdecomp/errors.hpp"
#include "trigdecomp/tower.hpp"
#include "trigdecomp/roots.hpp"
#include "trigdecomp/polynomial.hpp"
#include "trigdecomp/laurent.hpp"
#include "trigdecomp/trig.hpp"
#include "trigdecomp/chebyshev.hpp"
#include "trigdecomp/decompose.hpp"
#include "trigdecomp/ritt.hpp"
#include "trigdecomp/moments.hpp"
#include "trigdecomp/text.hpp"
