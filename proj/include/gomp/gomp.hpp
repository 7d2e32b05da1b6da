#ifndef GOMP_GOMP_HPP
#define GOMP_GOMP_HPP

#include "gomp/batch.hpp"
#include "gomp/error.hpp"
#include "gomp/greedy.hpp"
#include "gomp/instance.hpp"
#include "gomp/linops.hpp"
#include "gomp/metrics.hpp"
#include "gomp/report.hpp"
#include "gomp/rip.hpp"
#include "gomp/rng.hpp"
#include "gomp/trials.hpp"
#include "gomp/types.hpp"
#include "gomp/verify.hpp"

#endif  // GOMP_GOMP_HPP
