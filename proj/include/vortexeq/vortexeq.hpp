#ifndef VORTEXEQ_VORTEXEQ_HPP
#define VORTEXEQ_VORTEXEQ_HPP

#include "error.hpp"
#include "exact.hpp"
#include "poly.hpp"
#include "half_poly.hpp"
#include "ratfun.hpp"
#include "operator.hpp"
#include "integrate.hpp"
#include "family.hpp"
#include "verification.hpp"
#include "sequences.hpp"
#include "numerics.hpp"
#include "suite.hpp"
#include "io.hpp"
#include "render.hpp"
#include "manifest.hpp"

#endif
