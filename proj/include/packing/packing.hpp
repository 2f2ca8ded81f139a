#pragma once

#include "packing/certificate.hpp"
#include "packing/classifier.hpp"
#include "packing/integer.hpp"
#include "packing/numtheory.hpp"
#include "packing/pairing.hpp"
#include "packing/quadratic.hpp"
#include "packing/sector.hpp"
#include "packing/serialize.hpp"
#include "packing/verify.hpp"
