#pragma once

#include "hyperseries/errors.hpp"
#include "hyperseries/rational.hpp"
#include "hyperseries/polynomial.hpp"
#include "hyperseries/hyperreal.hpp"
#include "hyperseries/series.hpp"
#include "hyperseries/summation.hpp"
#include "hyperseries/oracle.hpp"
#include "hyperseries/text.hpp"
