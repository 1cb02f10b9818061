#pragma once

#include "tfpl/config.hpp"
#include "tfpl/fpl.hpp"
#include "tfpl/gyration.hpp"
#include "tfpl/lattice.hpp"
#include "tfpl/render.hpp"
#include "tfpl/verify.hpp"
#include "tfpl/words.hpp"
