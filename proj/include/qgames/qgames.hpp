#pragma once

#include "qgames/quantum_core.hpp"
#include "qgames/linear_program.hpp"
#include "qgames/classical_games.hpp"
#include "qgames/private_info.hpp"
#include "qgames/optimize.hpp"
#include "qgames/equilibrium_search.hpp"
#include "qgames/scenarios.hpp"
#include "qgames/properties.hpp"
#include "qgames/report.hpp"
#include "qgames/io.hpp"
#include "qgames/reports.hpp"
#include "qgames/acceptance.hpp"
