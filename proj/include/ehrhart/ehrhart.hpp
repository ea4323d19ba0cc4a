#pragma once

#include "ehrhart/box_group.hpp"
#include "ehrhart/checked.hpp"
#include "ehrhart/classifier.hpp"
#include "ehrhart/constraints.hpp"
#include "ehrhart/delta.hpp"
#include "ehrhart/ehrhart_oracle.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/hnf_family.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/simplex.hpp"
