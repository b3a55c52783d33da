#pragma once

#include "spinpair/correlators.hpp"
#include "spinpair/errors.hpp"
#include "spinpair/fermi_sea.hpp"
#include "spinpair/lattice.hpp"
#include "spinpair/measures.hpp"
#include "spinpair/oracle.hpp"
#include "spinpair/parallel.hpp"
#include "spinpair/spin_rdm.hpp"
#include "spinpair/sweep.hpp"
