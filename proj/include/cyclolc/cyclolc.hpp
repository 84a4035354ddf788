#pragma once

#include "cyclolc/common.hpp"
#include "cyclolc/cyclotomy.hpp"
#include "cyclolc/gf2field.hpp"
#include "cyclolc/gf2poly.hpp"
#include "cyclolc/grid.hpp"
#include "cyclolc/identities.hpp"
#include "cyclolc/lc.hpp"
#include "cyclolc/number_theory.hpp"
#include "cyclolc/report.hpp"
#include "cyclolc/sequence.hpp"
