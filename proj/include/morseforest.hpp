#pragma once

#include "morseforest/complex.hpp"
#include "morseforest/error.hpp"
#include "morseforest/forests.hpp"
#include "morseforest/integer.hpp"
#include "morseforest/io.hpp"
#include "morseforest/linalg.hpp"
#include "morseforest/matrix.hpp"
#include "morseforest/morse.hpp"
#include "morseforest/random.hpp"
#include "morseforest/verify.hpp"
