#pragma once

#include "liquidrank/engine.hpp"
#include "liquidrank/io.hpp"
#include "liquidrank/market.hpp"
#include "liquidrank/metrics.hpp"
#include "liquidrank/sweep.hpp"
#include "liquidrank/types.hpp"
