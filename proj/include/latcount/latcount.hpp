#pragma once

// Umbrella header.

#include "latcount/barvinok.hpp"
#include "latcount/box.hpp"
#include "latcount/brion_lv.hpp"
#include "latcount/cone.hpp"
#include "latcount/ehrhart.hpp"
#include "latcount/errors.hpp"
#include "latcount/genfun.hpp"
#include "latcount/io.hpp"
#include "latcount/matrix.hpp"
#include "latcount/oracle.hpp"
#include "latcount/polytope.hpp"
#include "latcount/rational.hpp"
