#pragma once

#include "idcomp/field.hpp"
#include "idcomp/verdict.hpp"
#include "idcomp/linear.hpp"
#include "idcomp/addcat.hpp"
#include "idcomp/suspension.hpp"
#include "idcomp/karoubi.hpp"
#include "idcomp/oracles.hpp"
#include "idcomp/nseq.hpp"
#include "idcomp/theta.hpp"
#include "idcomp/splitting.hpp"
#include "idcomp/exang.hpp"
#include "idcomp/pipeline.hpp"
#include "idcomp/envelope.hpp"
#include "idcomp/axioms.hpp"
#include "idcomp/io.hpp"
#include "idcomp/cli.hpp"
