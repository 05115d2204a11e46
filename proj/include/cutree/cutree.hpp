#pragma once

#include "cutree/bounds.hpp"
#include "cutree/canonical.hpp"
#include "cutree/construction.hpp"
#include "cutree/enumerate.hpp"
#include "cutree/error.hpp"
#include "cutree/families.hpp"
#include "cutree/io.hpp"
#include "cutree/minor.hpp"
#include "cutree/tree.hpp"
#include "cutree/tree_ops.hpp"
#include "cutree/verify.hpp"
