// Umbrella header.

#pragma once

#include "ospq/scalars.hpp"
#include "ospq/free_algebra.hpp"
#include "ospq/presentations.hpp"
#include "ospq/matrix_realization.hpp"
#include "ospq/rewriting.hpp"
#include "ospq/verify.hpp"
#include "ospq/expr.hpp"
#include "ospq/report.hpp"
