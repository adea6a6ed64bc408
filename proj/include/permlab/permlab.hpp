#pragma once

#include "permlab/bijections.hpp"
#include "permlab/codec.hpp"
#include "permlab/counts.hpp"
#include "permlab/cycles.hpp"
#include "permlab/enumeration.hpp"
#include "permlab/error.hpp"
#include "permlab/toeplitz.hpp"
#include "permlab/verify/verify.hpp"
#include "permlab/word.hpp"
