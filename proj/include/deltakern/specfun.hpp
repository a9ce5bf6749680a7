#pragma once

// Special-function layer: one include for everything the kernel builders use.

#include "deltakern/airy.hpp"
#include "deltakern/bessel.hpp"
#include "deltakern/coulomb.hpp"
#include "deltakern/gamma.hpp"
#include "deltakern/orthopoly.hpp"
#include "deltakern/spherical.hpp"
#include "deltakern/weber.hpp"
