#pragma once

#include "bignat.hpp"
#include "catalog.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "group_io.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "subgroup_algebra.hpp"
#include "subnormalizer.hpp"
#include "suite.hpp"
#include "sylow.hpp"
