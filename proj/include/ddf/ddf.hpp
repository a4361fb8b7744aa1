#ifndef DDF_DDF_HPP
#define DDF_DDF_HPP

#include "arith.hpp"
#include "bitset.hpp"
#include "constructions.hpp"
#include "designs.hpp"
#include "error.hpp"
#include "finite_field.hpp"
#include "galois_ring.hpp"
#include "group_view.hpp"
#include "iso.hpp"
#include "perm_group.hpp"
#include "properties.hpp"
#include "reproduce.hpp"
#include "verification.hpp"

#endif  // DDF_DDF_HPP
