#pragma once

#include "subnorm/asymptotics.hpp"
#include "subnorm/composed_map.hpp"
#include "subnorm/errors.hpp"
#include "subnorm/extended_value.hpp"
#include "subnorm/families.hpp"
#include "subnorm/fixtures.hpp"
#include "subnorm/generator.hpp"
#include "subnorm/interval_grid.hpp"
#include "subnorm/operators.hpp"
#include "subnorm/order.hpp"
#include "subnorm/paper_suite.hpp"
#include "subnorm/reports.hpp"
#include "subnorm/surface.hpp"
#include "subnorm/tolerance.hpp"
