#pragma once

// Everything except the CLI and the JSON views.

#include "subtrees/canonical.hpp"
#include "subtrees/count.hpp"
#include "subtrees/counting.hpp"
#include "subtrees/enumeration.hpp"
#include "subtrees/error.hpp"
#include "subtrees/families.hpp"
#include "subtrees/invariants.hpp"
#include "subtrees/io.hpp"
#include "subtrees/oracle.hpp"
#include "subtrees/structure.hpp"
#include "subtrees/transforms.hpp"
#include "subtrees/tree.hpp"
#include "subtrees/verify.hpp"
