#pragma once

#include "coupon/engine.hpp"
#include "coupon/errors.hpp"
#include "coupon/group_model.hpp"
#include "coupon/model_io.hpp"
#include "coupon/oracle.hpp"
#include "coupon/philox.hpp"
#include "coupon/population.hpp"
#include "coupon/subset_mask.hpp"
#include "coupon/summation.hpp"
