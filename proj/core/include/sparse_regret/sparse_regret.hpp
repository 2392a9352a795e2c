#pragma once

#include "sparse_regret/adversaries.hpp"
#include "sparse_regret/bandit.hpp"
#include "sparse_regret/errors.hpp"
#include "sparse_regret/full_info.hpp"
#include "sparse_regret/harness.hpp"
#include "sparse_regret/ledger.hpp"
#include "sparse_regret/outcome.hpp"
#include "sparse_regret/regularizers.hpp"
#include "sparse_regret/rng.hpp"
#include "sparse_regret/simplex.hpp"
