#pragma once

#include "cnx/arithmetic.hpp"
#include "cnx/bounds.hpp"
#include "cnx/certify.hpp"
#include "cnx/exact.hpp"
#include "cnx/power_product.hpp"
#include "cnx/sequence.hpp"
#include "cnx/series.hpp"
#include "cnx/verify.hpp"
