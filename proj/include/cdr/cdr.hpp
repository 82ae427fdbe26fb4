#pragma once

#include "cdr/bench.hpp"
#include "cdr/cover.hpp"
#include "cdr/error.hpp"
#include "cdr/generators.hpp"
#include "cdr/graph.hpp"
#include "cdr/io.hpp"
#include "cdr/minrep.hpp"
#include "cdr/rng.hpp"
#include "cdr/solver.hpp"
#include "cdr/validator.hpp"
