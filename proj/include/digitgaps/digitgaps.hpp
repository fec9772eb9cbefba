#pragma once

// Unit's-digit profiles of running totals: which digits a sequence's
// partial sums can end in, predicted from difference tables and checked
// against exhaustive period enumeration.

#include "difftab.hpp"
#include "oracle.hpp"
#include "radix.hpp"
#include "report.hpp"
#include "seq.hpp"
