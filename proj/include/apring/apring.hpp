#pragma once

#include "apring/coverage.hpp"
#include "apring/curves.hpp"
#include "apring/errors.hpp"
#include "apring/extrema.hpp"
#include "apring/format.hpp"
#include "apring/frequency.hpp"
#include "apring/kronecker.hpp"
#include "apring/parallel.hpp"
#include "apring/partition.hpp"
#include "apring/polynomial.hpp"
#include "apring/presets.hpp"
#include "apring/rational.hpp"
#include "apring/series.hpp"
#include "apring/version.hpp"
