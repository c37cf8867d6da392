#pragma once

// Convenience header pulling in the whole library.

#include "mckay/abacus.hpp"
#include "mckay/chars_global.hpp"
#include "mckay/chars_local.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/error.hpp"
#include "mckay/grouporacle.hpp"
#include "mckay/numtheory.hpp"
#include "mckay/partitions.hpp"
#include "mckay/verify.hpp"
