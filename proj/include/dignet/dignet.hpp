#ifndef DIGNET_DIGNET_HPP
#define DIGNET_DIGNET_HPP

#include "dignet/digraph.hpp"
#include "dignet/factorize.hpp"
#include "dignet/spanfact.hpp"
#include "dignet/groupoid.hpp"
#include "dignet/coset.hpp"
#include "dignet/constructions.hpp"

#endif
