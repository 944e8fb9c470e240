#pragma once

#include "numeric.hpp"
#include "laurent.hpp"
#include "qcomb.hpp"
#include "cyclotomic.hpp"
#include "padic.hpp"
#include "ratseries.hpp"
#include "bivar.hpp"
#include "tower.hpp"
#include "prism.hpp"
#include "qlog.hpp"
#include "serialize.hpp"
#include "checks.hpp"
