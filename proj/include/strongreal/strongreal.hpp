#pragma once

#include "strongreal/classdata.hpp"
#include "strongreal/classify.hpp"
#include "strongreal/enumerate.hpp"
#include "strongreal/error.hpp"
#include "strongreal/field_tower.hpp"
#include "strongreal/matrix.hpp"
#include "strongreal/oracle.hpp"
#include "strongreal/partition.hpp"
#include "strongreal/poly.hpp"
#include "strongreal/series.hpp"
#include "strongreal/upoly.hpp"
