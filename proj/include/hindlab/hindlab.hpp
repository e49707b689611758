#pragma once

#include "hindlab/audit.hpp"
#include "hindlab/baire.hpp"
#include "hindlab/certificate.hpp"
#include "hindlab/coloring.hpp"
#include "hindlab/delta_system.hpp"
#include "hindlab/greedy.hpp"
#include "hindlab/grid.hpp"
#include "hindlab/interval_set.hpp"
#include "hindlab/owings.hpp"
#include "hindlab/parallel.hpp"
#include "hindlab/pipeline.hpp"
#include "hindlab/pullback.hpp"
#include "hindlab/qvec.hpp"
#include "hindlab/rational.hpp"
#include "hindlab/search.hpp"
#include "hindlab/semigroup.hpp"
#include "hindlab/sumsets.hpp"
#include "hindlab/support_arithmetic.hpp"
#include "hindlab/verify.hpp"
