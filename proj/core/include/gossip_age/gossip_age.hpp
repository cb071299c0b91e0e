#pragma once

#include "gossip_age/age_exact.hpp"
#include "gossip_age/age_sim.hpp"
#include "gossip_age/age_structured.hpp"
#include "gossip_age/bounds.hpp"
#include "gossip_age/csv.hpp"
#include "gossip_age/digamma.hpp"
#include "gossip_age/error.hpp"
#include "gossip_age/experiments.hpp"
#include "gossip_age/generators.hpp"
#include "gossip_age/graph.hpp"
#include "gossip_age/parallel.hpp"
#include "gossip_age/rng.hpp"
#include "gossip_age/structure.hpp"
#include "gossip_age/vertex_set.hpp"
