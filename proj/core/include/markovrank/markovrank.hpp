#pragma once

#include "markovrank/chain.hpp"
#include "markovrank/eigenrank.hpp"
#include "markovrank/errors.hpp"
#include "markovrank/experiments.hpp"
#include "markovrank/graph.hpp"
#include "markovrank/graph_io.hpp"
#include "markovrank/matrix.hpp"
#include "markovrank/rank_stats.hpp"
