#pragma once

// Umbrella header for the qseries library.

#include "qseries/bivariate.hpp"
#include "qseries/errors.hpp"
#include "qseries/habiro.hpp"
#include "qseries/harness.hpp"
#include "qseries/heckesums.hpp"
#include "qseries/lazy.hpp"
#include "qseries/monomial.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/rational.hpp"
#include "qseries/serialize.hpp"
#include "qseries/series.hpp"
#include "qseries/window.hpp"
