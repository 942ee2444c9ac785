#pragma once

#include "abs_value.hpp"
#include "ergodic.hpp"
#include "error.hpp"
#include "mobius.hpp"
#include "numeric.hpp"
#include "oracle.hpp"
#include "padic.hpp"
#include "quad_ext.hpp"
