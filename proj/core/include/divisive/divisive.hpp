#pragma once

#include "divisive/axioms.hpp"
#include "divisive/bipartition.hpp"
#include "divisive/certificates.hpp"
#include "divisive/dsf.hpp"
#include "divisive/errors.hpp"
#include "divisive/generators.hpp"
#include "divisive/indices.hpp"
#include "divisive/io.hpp"
#include "divisive/monte_carlo.hpp"
#include "divisive/profile.hpp"
#include "divisive/rational.hpp"
#include "divisive/report.hpp"
#include "divisive/repro.hpp"
#include "divisive/scoring.hpp"
#include "divisive/voting.hpp"
