#pragma once

#include "dynspt/candidate_queue.hpp"
#include "dynspt/decremental.hpp"
#include "dynspt/dimacs.hpp"
#include "dynspt/dynamic_spt.hpp"
#include "dynspt/generator.hpp"
#include "dynspt/graph.hpp"
#include "dynspt/incremental.hpp"
#include "dynspt/min_change.hpp"
#include "dynspt/oracle.hpp"
#include "dynspt/pairing_heap.hpp"
#include "dynspt/static_sssp.hpp"
#include "dynspt/tree.hpp"
#include "dynspt/types.hpp"
#include "dynspt/update.hpp"
#include "dynspt/workspace.hpp"
