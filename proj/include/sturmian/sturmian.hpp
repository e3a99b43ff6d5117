#pragma once

#include "sturmian/closeability.hpp"
#include "sturmian/derived.hpp"
#include "sturmian/error.hpp"
#include "sturmian/iet.hpp"
#include "sturmian/morphism.hpp"
#include "sturmian/normalization.hpp"
#include "sturmian/quadratic.hpp"
