#pragma once

// Workbench for LCD and formally self-dual codes over F_q and over
// R = F_q + vF_q + v^2F_q with v^3 = v (q odd).

#include "construct.hpp"
#include "cyclic.hpp"
#include "io.hpp"
#include "tables.hpp"
#include "weighing.hpp"
