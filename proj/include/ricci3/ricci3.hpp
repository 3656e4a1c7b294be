#pragma once

#include "ricci3/cubic.hpp"
#include "ricci3/curvature.hpp"
#include "ricci3/lie_algebra.hpp"
#include "ricci3/linalg.hpp"
#include "ricci3/so3_diagonalizer.hpp"
#include "ricci3/solver.hpp"
#include "ricci3/uniqueness_probe.hpp"
#include "ricci3/verify.hpp"
