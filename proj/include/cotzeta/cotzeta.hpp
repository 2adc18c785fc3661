#pragma once

#include "cotzeta/bernoulli.hpp"
#include "cotzeta/bounded.hpp"
#include "cotzeta/constants.hpp"
#include "cotzeta/cotangent.hpp"
#include "cotzeta/digamma.hpp"
#include "cotzeta/errors.hpp"
#include "cotzeta/fourier.hpp"
#include "cotzeta/grid.hpp"
#include "cotzeta/identities.hpp"
#include "cotzeta/inequality.hpp"
#include "cotzeta/polylog.hpp"
#include "cotzeta/replicative.hpp"
#include "cotzeta/report_io.hpp"
#include "cotzeta/zeta.hpp"
