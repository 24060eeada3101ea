#pragma once

#include "combigen/catalan.hpp"
#include "combigen/comb.hpp"
#include "combigen/compose.hpp"
#include "combigen/core.hpp"
#include "combigen/derange.hpp"
#include "combigen/format.hpp"
#include "combigen/perm.hpp"
#include "combigen/subset.hpp"
