#pragma once

#include "resonlab/arith.hpp"
#include "resonlab/dirichlet.hpp"
#include "resonlab/error.hpp"
#include "resonlab/report.hpp"
#include "resonlab/resonator.hpp"
#include "resonlab/search.hpp"
#include "resonlab/special.hpp"
