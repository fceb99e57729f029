#pragma once

#include "weibullr/baseline.hpp"
#include "weibullr/errors.hpp"
#include "weibullr/expectation.hpp"
#include "weibullr/fit.hpp"
#include "weibullr/random.hpp"
#include "weibullr/records.hpp"
#include "weibullr/reliability.hpp"
#include "weibullr/specfun.hpp"
#include "weibullr/weibull_r.hpp"
