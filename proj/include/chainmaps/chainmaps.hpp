#ifndef CHAINMAPS_CHAINMAPS_HPP
#define CHAINMAPS_CHAINMAPS_HPP

#include "chainmaps/counting.hpp"
#include "chainmaps/family.hpp"
#include "chainmaps/generators.hpp"
#include "chainmaps/tables.hpp"
#include "chainmaps/transformation.hpp"
#include "chainmaps/verify.hpp"

#endif  // CHAINMAPS_CHAINMAPS_HPP
