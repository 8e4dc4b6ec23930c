#pragma once

#include "svckit/connectivity.hpp"
#include "svckit/decompose.hpp"
#include "svckit/error.hpp"
#include "svckit/families.hpp"
#include "svckit/flow.hpp"
#include "svckit/graph.hpp"
#include "svckit/io.hpp"
#include "svckit/report_json.hpp"
#include "svckit/scc.hpp"
