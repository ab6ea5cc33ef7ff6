#pragma once

#include "rlc/baselines.hpp"
#include "rlc/bench.hpp"
#include "rlc/builder.hpp"
#include "rlc/error.hpp"
#include "rlc/generators.hpp"
#include "rlc/graph.hpp"
#include "rlc/index.hpp"
#include "rlc/kbs.hpp"
#include "rlc/label_seq.hpp"
#include "rlc/random.hpp"
#include "rlc/serialize.hpp"
#include "rlc/verify.hpp"
#include "rlc/workload.hpp"
