#pragma once

#include "ringcodes/code.hpp"
#include "ringcodes/constructions.hpp"
#include "ringcodes/error.hpp"
#include "ringcodes/matrix.hpp"
#include "ringcodes/mpc.hpp"
#include "ringcodes/ring.hpp"
#include "ringcodes/text.hpp"
