#pragma once

#include "gkz/classify.hpp"
#include "gkz/coefficients.hpp"
#include "gkz/error.hpp"
#include "gkz/exponents.hpp"
#include "gkz/gauss.hpp"
#include "gkz/json.hpp"
#include "gkz/lattice.hpp"
#include "gkz/matrix.hpp"
#include "gkz/rational.hpp"
#include "gkz/series.hpp"
#include "gkz/verify.hpp"
