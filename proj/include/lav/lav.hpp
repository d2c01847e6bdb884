#pragma once

// Umbrella header for the whole library.

#include "lav/ablation.hpp"
#include "lav/actions.hpp"
#include "lav/config.hpp"
#include "lav/episode.hpp"
#include "lav/expert.hpp"
#include "lav/geometry.hpp"
#include "lav/lang.hpp"
#include "lav/lexicon.hpp"
#include "lav/macros.hpp"
#include "lav/metrics.hpp"
#include "lav/nav.hpp"
#include "lav/objects.hpp"
#include "lav/observation.hpp"
#include "lav/plan.hpp"
#include "lav/rng.hpp"
#include "lav/scene.hpp"
#include "lav/scene_io.hpp"
#include "lav/task.hpp"
#include "lav/taskgen.hpp"
#include "lav/trace.hpp"
#include "lav/vision.hpp"
#include "lav/worldsim.hpp"
