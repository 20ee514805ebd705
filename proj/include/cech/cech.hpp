#pragma once

// Finite Cech closure spaces: closure calculus, limit/colimit constructions,
// interior covers and homotopy certificates, and integer homology of flag
// complexes with exactness checkers.

#include "cmap.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "exactness.hpp"
#include "flag.hpp"
#include "homology.hpp"
#include "homotopy.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "pi1.hpp"
#include "theorems.hpp"
