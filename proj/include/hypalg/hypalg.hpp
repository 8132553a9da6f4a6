#pragma once

// Umbrella header.

#include "closedforms.hpp"
#include "complex.hpp"
#include "engines.hpp"
#include "errors.hpp"
#include "exactalg.hpp"
#include "hypergraph.hpp"
#include "json.hpp"
#include "oracle.hpp"
