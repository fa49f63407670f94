#pragma once

#include "arith.hpp"
#include "assembly.hpp"
#include "graded.hpp"
#include "koszul.hpp"
#include "lascoux.hpp"
#include "partition.hpp"
#include "schur.hpp"
#include "sweep.hpp"
