// wadge.hpp -- umbrella header.
#pragma once

#include "wadge/errors.hpp"
#include "wadge/eval.hpp"
#include "wadge/explore.hpp"
#include "wadge/oracle.hpp"
#include "wadge/order.hpp"
#include "wadge/ordinal.hpp"
#include "wadge/quasi_order.hpp"
#include "wadge/reduce.hpp"
#include "wadge/stream.hpp"
#include "wadge/term.hpp"
