// Umbrella header.
#pragma once

#include "chromix/chromatic.hpp"
#include "chromix/enumerate.hpp"
#include "chromix/error.hpp"
#include "chromix/graph.hpp"
#include "chromix/parse.hpp"
#include "chromix/polynomial.hpp"
#include "chromix/poset.hpp"
#include "chromix/rational.hpp"
#include "chromix/report.hpp"
