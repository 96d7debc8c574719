#pragma once

#include "davenport/errors.hpp"
#include "davenport/modp.hpp"
#include "davenport/sequence.hpp"
#include "davenport/phi.hpp"
#include "davenport/reach_set.hpp"
#include "davenport/zero_free.hpp"
#include "davenport/search.hpp"
#include "davenport/theory.hpp"
#include "davenport/record.hpp"
#include "davenport/goldens.hpp"
#include "davenport/verify.hpp"
#include "davenport/commands.hpp"
