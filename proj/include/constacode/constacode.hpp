#pragma once

#include "constacode/error.hpp"
#include "constacode/gf2m.hpp"
#include "constacode/ring.hpp"
#include "constacode/poly.hpp"
#include "constacode/bitvec.hpp"
#include "constacode/gray.hpp"
#include "constacode/code.hpp"
#include "constacode/analysis.hpp"
#include "constacode/text.hpp"
