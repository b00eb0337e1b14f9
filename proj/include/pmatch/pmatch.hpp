#pragma once

#include "pmatch/alphabet.hpp"
#include "pmatch/convolution.hpp"
#include "pmatch/encoding.hpp"
#include "pmatch/general_matcher.hpp"
#include "pmatch/hashed_text.hpp"
#include "pmatch/hashing.hpp"
#include "pmatch/matching.hpp"
#include "pmatch/ntt.hpp"
#include "pmatch/single_mismatch.hpp"
