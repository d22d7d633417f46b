#pragma once

#include "zqr/error.hpp"
#include "zqr/graymaps.hpp"
#include "zqr/props.hpp"
#include "zqr/rcodes.hpp"
#include "zqr/rings.hpp"
#include "zqr/search.hpp"
#include "zqr/skewpoly.hpp"
#include "zqr/wordset.hpp"
#include "zqr/zqlinalg.hpp"
#include "zqr/zqpoly.hpp"
#include "zqr/zqrcodes.hpp"
