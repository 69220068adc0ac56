#pragma once

#include "crand/analysis.hpp"
#include "crand/generator.hpp"
#include "crand/kind.hpp"
#include "crand/result.hpp"
