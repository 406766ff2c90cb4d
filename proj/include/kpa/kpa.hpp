#pragma once

#include "kpa/algebra.hpp"
#include "kpa/classify.hpp"
#include "kpa/commands.hpp"
#include "kpa/corpus.hpp"
#include "kpa/cycles.hpp"
#include "kpa/degree.hpp"
#include "kpa/errors.hpp"
#include "kpa/expression.hpp"
#include "kpa/generate.hpp"
#include "kpa/graph_algo.hpp"
#include "kpa/graph_spec.hpp"
#include "kpa/kgraph.hpp"
#include "kpa/normal_form.hpp"
#include "kpa/path_calculus.hpp"
#include "kpa/report.hpp"
#include "kpa/ring.hpp"
#include "kpa/structure.hpp"
#include "kpa/witnesses.hpp"
