#pragma once

#include "ntrank/errors.hpp"
#include "ntrank/interval.hpp"
#include "ntrank/ivn.hpp"
#include "ntrank/ordering.hpp"
#include "ntrank/ranking.hpp"
#include "ntrank/rational.hpp"
#include "ntrank/scalar.hpp"
#include "ntrank/svn.hpp"
