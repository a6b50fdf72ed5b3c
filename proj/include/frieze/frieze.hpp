#pragma once

#include "frieze/census.hpp"
#include "frieze/dissection.hpp"
#include "frieze/error.hpp"
#include "frieze/format.hpp"
#include "frieze/intmath.hpp"
#include "frieze/pattern.hpp"
#include "frieze/polynomial.hpp"
#include "frieze/qpoly.hpp"
#include "frieze/quiddity.hpp"
#include "frieze/render.hpp"
#include "frieze/ring.hpp"
