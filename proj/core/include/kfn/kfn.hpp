#pragma once

#include "kfn/baselines.hpp"
#include "kfn/datasets.hpp"
#include "kfn/errors.hpp"
#include "kfn/experiment.hpp"
#include "kfn/fn_query.hpp"
#include "kfn/index_io.hpp"
#include "kfn/lc_index.hpp"
#include "kfn/metric.hpp"
#include "kfn/owa.hpp"
