#pragma once

#include "partid/counting.hpp"
#include "partid/decorated.hpp"
#include "partid/identities.hpp"
#include "partid/linear_form.hpp"
#include "partid/numeric.hpp"
#include "partid/partitions.hpp"
#include "partid/report.hpp"
#include "partid/sampling.hpp"
#include "partid/statistics.hpp"
#include "partid/transforms.hpp"
