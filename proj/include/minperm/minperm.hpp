#pragma once

#include "bijection.hpp"
#include "enumeration.hpp"
#include "exact_linalg.hpp"
#include "limits.hpp"
#include "permutation.hpp"
#include "report.hpp"
#include "shapes.hpp"
