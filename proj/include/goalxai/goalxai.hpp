#pragma once

#include "goalxai/af_core.hpp"
#include "goalxai/belief_gen.hpp"
#include "goalxai/common.hpp"
#include "goalxai/explain.hpp"
#include "goalxai/goal_graph.hpp"
#include "goalxai/instrumental.hpp"
#include "goalxai/pipeline.hpp"
#include "goalxai/render.hpp"
#include "goalxai/scenario.hpp"
#include "goalxai/selection.hpp"
