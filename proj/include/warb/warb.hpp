// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "warb/algebra.hpp"
#include "warb/density.hpp"
#include "warb/enumerate.hpp"
#include "warb/error.hpp"
#include "warb/experiments.hpp"
#include "warb/graph.hpp"
#include "warb/io.hpp"
#include "warb/numeric.hpp"
#include "warb/resistance.hpp"
