#pragma once

#include "gammaprod/batch.hpp"
#include "gammaprod/bernoulli.hpp"
#include "gammaprod/bigfloat.hpp"
#include "gammaprod/cyclotomic.hpp"
#include "gammaprod/identities.hpp"
#include "gammaprod/lngamma.hpp"
#include "gammaprod/numbertheory.hpp"
#include "gammaprod/precision.hpp"
#include "gammaprod/rational.hpp"
#include "gammaprod/sequences.hpp"
