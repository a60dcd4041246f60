#pragma once

#include "splitq/companion.hpp"
#include "splitq/corpus.hpp"
#include "splitq/io.hpp"
#include "splitq/solve.hpp"
#include "splitq/verify.hpp"
