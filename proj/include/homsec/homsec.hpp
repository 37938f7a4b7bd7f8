#pragma once

// Umbrella header.

#include "homsec/access_structure.hpp"
#include "homsec/bounds.hpp"
#include "homsec/classifier.hpp"
#include "homsec/enumeration.hpp"
#include "homsec/errors.hpp"
#include "homsec/io.hpp"
#include "homsec/linear_scheme.hpp"
#include "homsec/parallel.hpp"
#include "homsec/participant_set.hpp"
#include "homsec/prime_field.hpp"
#include "homsec/rational.hpp"
#include "homsec/reduction.hpp"
