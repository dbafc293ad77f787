// csale_all.hpp - everything, for quick experiments
#pragma once

#include "csale/algorithms.hpp"
#include "csale/analysis.hpp"
#include "csale/arm_set.hpp"
#include "csale/bench/config.hpp"
#include "csale/bench/csv.hpp"
#include "csale/bench/experiment.hpp"
#include "csale/bench/instances.hpp"
#include "csale/bench/report.hpp"
#include "csale/bench/subgraph.hpp"
#include "csale/blossom.hpp"
#include "csale/clucb_pac.hpp"
#include "csale/core_model.hpp"
#include "csale/csale.hpp"
#include "csale/decision_class.hpp"
#include "csale/errors.hpp"
#include "csale/explicit_class.hpp"
#include "csale/graph.hpp"
#include "csale/matching_class.hpp"
#include "csale/naive.hpp"
#include "csale/path_class.hpp"
#include "csale/run_report.hpp"
