#pragma once

#include "combinat.hpp"
#include "electrical.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "grassmann.hpp"
#include "groves.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "medial.hpp"
#include "moves.hpp"
#include "network.hpp"
#include "rational.hpp"
