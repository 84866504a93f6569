#pragma once

#include "bcgauge/battery.hpp"
#include "bcgauge/expr.hpp"
#include "bcgauge/gauge.hpp"
#include "bcgauge/json_io.hpp"
#include "bcgauge/module.hpp"
#include "bcgauge/scalar.hpp"
#include "bcgauge/seminorm.hpp"
#include "bcgauge/set_checks.hpp"
#include "bcgauge/sets.hpp"
