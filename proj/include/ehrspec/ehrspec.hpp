#pragma once

#include "ehrspec/ehrhart.hpp"
#include "ehrspec/errors.hpp"
#include "ehrspec/frac_poly.hpp"
#include "ehrspec/generators.hpp"
#include "ehrspec/geometry.hpp"
#include "ehrspec/linalg.hpp"
#include "ehrspec/oracle.hpp"
#include "ehrspec/pipeline.hpp"
#include "ehrspec/rat.hpp"
#include "ehrspec/rat_poly.hpp"
#include "ehrspec/spectrum.hpp"
