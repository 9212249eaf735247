#pragma once

// Umbrella header: exact dynamics of union-of-lines relations on [0,1] and
// their one- and two-sided shift spaces.

#include <lelek/rational.hpp>
#include <lelek/exponent_vector.hpp>
#include <lelek/slope_set.hpp>
#include <lelek/interval_union.hpp>
#include <lelek/relation.hpp>
#include <lelek/point.hpp>
#include <lelek/metric.hpp>
#include <lelek/arc.hpp>
#include <lelek/periodic.hpp>
#include <lelek/reach.hpp>
#include <lelek/descending.hpp>
#include <lelek/specification.hpp>
#include <lelek/tracer.hpp>
#include <lelek/pseudo_orbit.hpp>
#include <lelek/shadow.hpp>
#include <lelek/hausdorff_series.hpp>
#include <lelek/fan_svg.hpp>
