#ifndef ENDOCHAIN_HPP_
#define ENDOCHAIN_HPP_

#include "endochain/error.hpp"
#include "endochain/chain_endo.hpp"
#include "endochain/analysis.hpp"
#include "endochain/simplex.hpp"
#include "endochain/strings.hpp"
#include "endochain/triangle.hpp"
#include "endochain/counting.hpp"
#include "endochain/diagram.hpp"
#include "endochain/claims.hpp"
#include "endochain/json_io.hpp"

#endif  // ENDOCHAIN_HPP_
