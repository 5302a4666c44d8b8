#ifndef KHTREE_KHTREE_HPP
#define KHTREE_KHTREE_HPP

#include "bounds.hpp"
#include "combinatorics.hpp"
#include "constructions.hpp"
#include "core.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "search.hpp"
#include "stars.hpp"

#endif // KHTREE_KHTREE_HPP
