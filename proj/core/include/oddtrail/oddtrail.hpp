#pragma once

#include "oddtrail/decomposition.hpp"
#include "oddtrail/error.hpp"
#include "oddtrail/euler.hpp"
#include "oddtrail/factorization.hpp"
#include "oddtrail/generate.hpp"
#include "oddtrail/graph.hpp"
#include "oddtrail/io.hpp"
#include "oddtrail/oracle.hpp"
#include "oddtrail/signed_graph.hpp"
#include "oddtrail/verify.hpp"
